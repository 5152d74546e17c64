#ifndef HOMCOB_SEIFERT_HPP
#define HOMCOB_SEIFERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "free_word.hpp"
#include "trilinear.hpp"

namespace homcob {

// Slope alpha/beta of one Dehn filling; alpha >= 1, beta != 0, coprime.
struct Filling {
    Int alpha, beta;

    bool operator==(const Filling&) const = default;
};

// The symbol (+g | a1/b1, ..., ak/bk) or (-g | ...): a closed orientable
// circle-fibered manifold over a genus-g base, orientable for +g and
// non-orientable for -g.
struct SeifertInvariants {
    bool orientable_base = true;
    int genus = 0;
    std::vector<Filling> fillings;

    bool operator==(const SeifertInvariants&) const = default;
};

inline void validate(const SeifertInvariants& s) {
    if (s.genus < 0) throw BadParameter("genus must be nonnegative");
    if (!s.orientable_base && s.genus == 0)
        throw BadParameter("non-orientable base needs genus >= 1");
    for (const Filling& f : s.fillings) {
        if (f.alpha == 0) throw BadParameter("filling with alpha = 0");
        if (f.beta == 0) throw BadParameter("filling with beta = 0");
        if (f.alpha < 0) throw BadParameter("filling with alpha < 0 (normalize the slope sign into beta)");
        if (gcd(f.alpha, f.beta) != 1) throw BadParameter("filling slope must be in lowest terms");
    }
}

inline SeifertInvariants make_seifert(bool orientable, int genus, std::vector<Filling> fillings) {
    // alpha/beta = (-alpha)/(-beta): carry the sign on beta.
    for (Filling& f : fillings)
        if (f.alpha < 0) { f.alpha = -f.alpha; f.beta = -f.beta; }
    SeifertInvariants s{orientable, genus, std::move(fillings)};
    validate(s);
    return s;
}

// "(+2 | 3/1, 5/2)"; genus sign optional (default orientable), "(+1 | )" for
// no fillings.
inline std::string print_seifert(const SeifertInvariants& s) {
    std::string out = "(";
    out += s.orientable_base ? '+' : '-';
    out += std::to_string(s.genus);
    out += " | ";
    for (std::size_t j = 0; j < s.fillings.size(); ++j) {
        if (j) out += ", ";
        out += s.fillings[j].alpha.str() + "/" + s.fillings[j].beta.str();
    }
    out += ")";
    return out;
}

inline SeifertInvariants parse_seifert(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
    auto found_here = [&]() -> std::string {
        return i < text.size() ? "'" + std::string(1, text[i]) + "'" : "end of input";
    };
    auto expect = [&](char c, const char* what) {
        skip_ws();
        if (i >= text.size() || text[i] != c) throw ParseError(i, what, found_here());
        ++i;
    };
    auto parse_int = [&](const char* what) -> Int {
        skip_ws();
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || text[i] < '0' || text[i] > '9')
            throw ParseError(i, what, found_here());
        Int v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    };

    expect('(', "'('");
    skip_ws();
    bool orientable = true;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        orientable = text[i] == '+';
        ++i;
    }
    skip_ws();
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
        throw ParseError(i, "genus", found_here());
    Int genus = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        genus = genus * 10 + (text[i] - '0');
        ++i;
    }
    if (genus > 1000) throw BadParameter("genus out of supported range");
    expect('|', "'|'");
    std::vector<Filling> fillings;
    skip_ws();
    if (i < text.size() && text[i] != ')') {
        for (;;) {
            Int alpha = parse_int("filling numerator");
            expect('/', "'/'");
            Int beta = parse_int("filling denominator");
            fillings.push_back(Filling{alpha, beta});
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            break;
        }
    }
    expect(')', "')'");
    skip_ws();
    if (i != text.size()) throw ParseError(i, "end of input", found_here());
    return make_seifert(orientable, (int)genus, std::move(fillings));
}

// Fundamental group, generators ordered x_1..x_g, (y_1..y_g,) mu_1..mu_k, t.
struct GroupPresentation {
    std::vector<std::string> generator_names;
    std::vector<FreeWord> relators; // letters index generator_names 1-based
};

inline GroupPresentation fundamental_group_presentation(const SeifertInvariants& s) {
    validate(s);
    for (const Filling& f : s.fillings)
        if (abs(f.alpha) > 1000000 || abs(f.beta) > 1000000)
            throw BadParameter("filling exponents too large to write out as relators");
    const int g = s.genus;
    const int k = (int)s.fillings.size();
    GroupPresentation p;

    // Generator index bookkeeping (1-based within relator words).
    auto x = [&](int i) { return i; };
    auto y = [&](int i) { return g + i; };
    int mu_base = s.orientable_base ? 2 * g : g;
    auto mu = [&](int j) { return mu_base + j; };
    const int t = mu_base + k + 1;

    for (int i = 1; i <= g; ++i) p.generator_names.push_back("x" + std::to_string(i));
    if (s.orientable_base)
        for (int i = 1; i <= g; ++i) p.generator_names.push_back("y" + std::to_string(i));
    for (int j = 1; j <= k; ++j) p.generator_names.push_back("mu" + std::to_string(j));
    p.generator_names.push_back("t");

    auto gen = [](int idx, long long e = 1) { return FreeWord::generator(idx, e); };

    if (s.orientable_base) {
        for (int i = 1; i <= g; ++i) p.relators.push_back(commutator(gen(x(i)), gen(t)));
        for (int i = 1; i <= g; ++i) p.relators.push_back(commutator(gen(y(i)), gen(t)));
    } else {
        // x t x^-1 t
        for (int i = 1; i <= g; ++i)
            p.relators.push_back(gen(x(i)) * gen(t) * gen(x(i), -1) * gen(t));
    }
    for (int j = 1; j <= k; ++j) p.relators.push_back(commutator(gen(mu(j)), gen(t)));
    for (int j = 1; j <= k; ++j) {
        FreeWord r;
        // mu_j^alpha t^beta: exponents here stay well within 64 bits.
        r.append(mu(j), (long long)s.fillings[j - 1].alpha);
        r.append(t, (long long)s.fillings[j - 1].beta);
        p.relators.push_back(r);
    }
    FreeWord surface;
    if (s.orientable_base) {
        for (int i = 1; i <= g; ++i) surface = surface * commutator(gen(x(i)), gen(y(i)));
    } else {
        for (int i = 1; i <= g; ++i) surface = surface * gen(x(i), 2);
    }
    for (int j = 1; j <= k; ++j) surface = surface * gen(mu(j));
    p.relators.push_back(surface);
    return p;
}

// Exponent-sum matrix of the relators: rows = relators, columns = generators.
inline IntMatrix abelianization_matrix(const GroupPresentation& p) {
    IntMatrix m(p.relators.size(), p.generator_names.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const Letter& l : p.relators[r].letters())
            m(r, (std::size_t)(l.gen - 1)) += l.sign;
    return m;
}

// Z-module presentation of H1, written down directly: filling rows
// alpha_j mu_j + beta_j t, plus the surface relation (and 2t = 0 for a
// non-orientable base). Columns follow the generator order above.
inline IntMatrix h1_presentation_matrix(const SeifertInvariants& s) {
    validate(s);
    const std::size_t g = (std::size_t)s.genus;
    const std::size_t k = s.fillings.size();
    const std::size_t mu_base = s.orientable_base ? 2 * g : g;
    const std::size_t cols = mu_base + k + 1;
    const std::size_t t = cols - 1;

    std::size_t rows = s.orientable_base ? k + 1 : k + 2;
    IntMatrix m(rows, cols);
    for (std::size_t j = 0; j < k; ++j) {
        m(j, mu_base + j) = s.fillings[j].alpha;
        m(j, t) = s.fillings[j].beta;
    }
    if (s.orientable_base) {
        for (std::size_t j = 0; j < k; ++j) m(k, mu_base + j) = 1;
    } else {
        m(k, t) = 2;
        for (std::size_t i = 0; i < g; ++i) m(k + 1, i) = 2;
        for (std::size_t j = 0; j < k; ++j) m(k + 1, mu_base + j) = 1;
    }
    return m;
}

inline Cokernel first_homology_cokernel(const SeifertInvariants& s) {
    return cokernel(h1_presentation_matrix(s));
}

inline FGAbelianGroup first_homology(const SeifertInvariants& s) {
    return first_homology_cokernel(s).group;
}

// Order of the regular fiber class t in H1; empty = infinite order.
inline std::optional<Int> regular_fiber_order(const SeifertInvariants& s) {
    FGAbelianGroup h = first_homology(s);
    Int o = h.order_of(h.gen_map.back());
    if (o == 0) return std::nullopt;
    return o;
}

inline std::size_t betti_one(const SeifertInvariants& s) { return first_homology(s).rank; }

inline bool has_two_torsion(const SeifertInvariants& s) {
    for (const Int& t : first_homology(s).torsion)
        if (t % 2 == 0) return true;
    return false;
}

// e = -sum beta_j/alpha_j; zero exactly when the fiber has infinite order.
inline Rat euler_number(const SeifertInvariants& s) {
    validate(s);
    if (!s.orientable_base)
        throw UnsupportedBase("Euler number is defined here for orientable bases only");
    Rat e(0);
    for (const Filling& f : s.fillings) e -= Rat(f.beta, f.alpha);
    return e;
}

struct CohomologyRingType {
    enum class Tag { ProductS1Sigma, ConnectedSumS1S2, Unclassified };
    Tag tag;
    std::size_t parameter = 0; // genus h, or summand count n

    std::string to_string() const {
        switch (tag) {
            case Tag::ProductS1Sigma: return "S1 x Sigma_" + std::to_string(parameter);
            case Tag::ConnectedSumS1S2: return "#_" + std::to_string(parameter) + " (S1 x S2)";
            default: return "Unclassified";
        }
    }
    bool operator==(const CohomologyRingType&) const = default;
};

inline CohomologyRingType rational_cohomology_type(const SeifertInvariants& s) {
    if (has_two_torsion(s))
        return {CohomologyRingType::Tag::Unclassified};
    std::size_t b1 = betti_one(s);
    if (b1 % 2 == 1) return {CohomologyRingType::Tag::ProductS1Sigma, (b1 - 1) / 2};
    return {CohomologyRingType::Tag::ConnectedSumS1S2, b1};
}

// Rational triple cup product form on H^1. Odd b1 = 2g+1: basis
// {t, a_1, b_1, ..., a_g, b_g} with value 1 on each (t, a_i, b_i).
// Even b1 = 2g: the zero form on the 2g-dimensional space.
inline AlternatingTrilinearForm standard_triple_cup_form(const SeifertInvariants& s) {
    validate(s);
    if (!s.orientable_base)
        throw UnsupportedBase("standard cup form needs an orientable base");
    if (has_two_torsion(s))
        throw TwoTorsionPresent("standard cup form undefined with 2-torsion in H1");
    std::size_t b1 = betti_one(s);
    AlternatingTrilinearForm f(b1, FormRing::Rationals);
    if (b1 % 2 == 1)
        for (std::size_t i = 1; 2 * i < b1; ++i) f.set(0, 2 * i - 1, 2 * i, Rat(1));
    return f;
}

} // namespace homcob

#endif
