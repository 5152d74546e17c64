#ifndef HOMCOB_MAGNUS_HPP
#define HOMCOB_MAGNUS_HPP

#include <cstddef>
#include <vector>

#include "free_word.hpp"
#include "integers.hpp"

namespace homcob {

// Noncommutative polynomial in X_1..X_n truncated at total degree `cap`,
// stored densely per degree: block d holds the n^d monomials of degree d
// in lexicographic order. Monomials are sequences of 1-based generator
// indices.
class TruncatedSeries {
public:
    TruncatedSeries(int n_gens, int cap) : n_(n_gens), cap_(cap) {
        if (n_ < 0 || cap_ < 0) throw BadParameter("negative series shape");
        std::size_t total = 0, block = 1;
        blocks_.reserve(cap_ + 1);
        for (int d = 0; d <= cap_; ++d) {
            total += block;
            if (total > kMaxCoefficients)
                throw BadParameter("degree cap too large for this generator count");
            blocks_.emplace_back(block);
            block *= (std::size_t)n_;
        }
    }

    static TruncatedSeries one(int n_gens, int cap) {
        TruncatedSeries s(n_gens, cap);
        s.blocks_[0][0] = 1;
        return s;
    }

    int gens() const { return n_; }
    int cap() const { return cap_; }

    const Int& coefficient(const std::vector<int>& mono) const {
        if ((int)mono.size() > cap_)
            throw BadParameter("monomial exceeds the series degree cap");
        return blocks_[mono.size()][rank(mono)];
    }

    void set_coefficient(const std::vector<int>& mono, Int v) {
        if ((int)mono.size() > cap_)
            throw BadParameter("monomial exceeds the series degree cap");
        blocks_[mono.size()][rank(mono)] = std::move(v);
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        if (n_ != o.n_ || cap_ != o.cap_)
            throw BadParameter("series shape mismatch");
        TruncatedSeries r(n_, cap_);
        for (int d1 = 0; d1 <= cap_; ++d1) {
            const auto& a = blocks_[d1];
            for (std::size_t r1 = 0; r1 < a.size(); ++r1) {
                if (a[r1] == 0) continue;
                for (int d2 = 0; d2 + d1 <= cap_; ++d2) {
                    const auto& b = o.blocks_[d2];
                    auto& out = r.blocks_[d1 + d2];
                    const std::size_t base = r1 * b.size();
                    for (std::size_t r2 = 0; r2 < b.size(); ++r2) {
                        if (b[r2] == 0) continue;
                        out[base + r2] += a[r1] * b[r2];
                    }
                }
            }
        }
        return r;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        if (n_ != o.n_ || cap_ != o.cap_)
            throw BadParameter("series shape mismatch");
        TruncatedSeries r = *this;
        for (int d = 0; d <= cap_; ++d)
            for (std::size_t i = 0; i < r.blocks_[d].size(); ++i)
                r.blocks_[d][i] += o.blocks_[d][i];
        return r;
    }

    bool operator==(const TruncatedSeries&) const = default;

private:
    static constexpr std::size_t kMaxCoefficients = 20'000'000;

    std::size_t rank(const std::vector<int>& mono) const {
        std::size_t r = 0;
        for (int g : mono) {
            if (g < 1 || g > n_) throw IndexOutOfRange("monomial generator out of range");
            r = r * (std::size_t)n_ + (std::size_t)(g - 1);
        }
        return r;
    }

    int n_, cap_;
    std::vector<std::vector<Int>> blocks_;
};

namespace detail {

// Generalized binomial coefficient C(e, j) for any integer e: the
// coefficient of X^j in (1+X)^e.
inline Int binomial(const Int& e, int j) {
    Int num(1);
    for (int t = 0; t < j; ++t) num *= e - t;
    Int fact(1);
    for (int t = 2; t <= j; ++t) fact *= t;
    return num / fact;
}

// Expansion of x_g^e, exact for negative e as well.
inline TruncatedSeries generator_power(int n_gens, int cap, int g, const Int& e) {
    TruncatedSeries s(n_gens, cap);
    std::vector<int> mono;
    for (int j = 0; j <= cap; ++j) {
        s.set_coefficient(mono, binomial(e, j));
        mono.push_back(g);
    }
    return s;
}

} // namespace detail

// x_i -> 1 + X_i extended multiplicatively, truncated at `cap`.
// n_gens = 0 sizes the series by the largest generator in the word.
inline TruncatedSeries magnus_expansion(const FreeWord& w, int cap, int n_gens = 0) {
    if (cap < 1) throw BadParameter("degree bound must be >= 1");
    if (n_gens == 0) n_gens = w.max_generator();
    if (w.max_generator() > n_gens)
        throw IndexOutOfRange("word uses a generator beyond the series range");

    TruncatedSeries s = TruncatedSeries::one(n_gens, cap);
    const auto& letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
        // Fold a run of equal letters into one closed-form factor.
        std::size_t j = i;
        Int e(0);
        while (j < letters.size() && letters[j].gen == letters[i].gen) {
            e += letters[j].sign;
            ++j;
        }
        if (e != 0)
            s = s * detail::generator_power(n_gens, cap, letters[i].gen, e);
        i = j;
    }
    return s;
}

} // namespace homcob

#endif
