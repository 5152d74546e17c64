#ifndef HOMCOB_PLUMBING_HPP
#define HOMCOB_PLUMBING_HPP

#include <vector>

#include "seifert.hpp"
#include "surgery.hpp"

namespace homcob {

// x = b0 - 1/(b1 - 1/(...)) with every coefficient after the first >= 2;
// the expansion of a rational number is finite and unique.
inline std::vector<Int> negative_continued_fraction(Rat x) {
    std::vector<Int> bs;
    for (;;) {
        Int b = ceil_div(numerator(x), denominator(x));
        bs.push_back(b);
        if (Rat(b) == x) return bs;
        x = Rat(1) / (Rat(b) - x);
    }
}

// Intersection matrix of the star-shaped plumbing of a genus-0 orientable
// Seifert symbol: central vertex of weight 0 joined to one chain per
// filling, the chain weights being the negated expansion of alpha/beta.
inline IntMatrix star_plumbing_matrix(const SeifertInvariants& s) {
    validate(s);
    if (!s.orientable_base)
        throw UnsupportedBase("plumbing model implemented for orientable bases");
    if (s.genus != 0)
        throw NotRationalHomologySphere("plumbing model implemented for genus 0");

    std::vector<std::vector<Int>> arms;
    std::size_t n = 1;
    for (const Filling& f : s.fillings) {
        arms.push_back(negative_continued_fraction(make_rat(f.alpha, f.beta)));
        n += arms.back().size();
    }
    IntMatrix m(n, n);
    std::size_t at = 1;
    for (const auto& arm : arms) {
        for (std::size_t t = 0; t < arm.size(); ++t) {
            m(at + t, at + t) = -arm[t];
            std::size_t prev = t == 0 ? 0 : at + t - 1;
            m(prev, at + t) = 1;
            m(at + t, prev) = 1;
        }
        at += arm.size();
    }
    return m;
}

// Linking form of a Seifert rational homology sphere, computed through the
// plumbing presentation.
inline LinkingForm seifert_linking_form(const SeifertInvariants& s) {
    validate(s);
    if (!s.orientable_base)
        throw UnsupportedBase("linking form computed for orientable bases only");
    if (betti_one(s) != 0)
        throw NotRationalHomologySphere("linking form needs beta_1 = 0");
    return linking_form_from_surgery(make_surgery(star_plumbing_matrix(s)));
}

} // namespace homcob

#endif
