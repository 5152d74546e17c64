#ifndef HOMCOB_TESTS_ORACLES_HPP
#define HOMCOB_TESTS_ORACLES_HPP

// Slow, independent reference implementations used to cross-check the
// library, plus seeded random generators for property tests.

#include <random>
#include <vector>

#include <homcob/homcob.hpp>

namespace oracles {

using homcob::Int;
using homcob::IntMatrix;

inline Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        Int term = m(0, j) * cofactor_det(sub);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

namespace detail {
inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (cur[i] + (k - i) < n) break;
            if (i == 0) return;
        }
        cur[i] += 1;
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}
} // namespace detail

// gcd of all k x k minors (0 if there are none or all vanish)
inline Int minor_gcd(const IntMatrix& m, std::size_t k) {
    if (k == 0) return 1;
    if (k > m.rows() || k > m.cols()) return 0;
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    detail::combinations(m.rows(), k, row_sets);
    detail::combinations(m.cols(), k, col_sets);
    Int g(0);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
            g = homcob::gcd(g, cofactor_det(sub));
        }
    return g;
}

// invariant factors d_1 | d_2 | ... via quotients of minor gcds
inline std::vector<Int> invariant_factors_by_minors(const IntMatrix& m) {
    std::vector<Int> factors;
    Int prev(1);
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Int g = minor_gcd(m, k);
        if (g == 0) break;
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo,
                               int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

// product of random elementary row operations applied to the identity
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        switch (kind(rng)) {
            case 0:
                if (i != j) u.add_row(i, j, Int(coef(rng)));
                break;
            case 1:
                if (i != j) u.swap_rows(i, j);
                break;
            default:
                u.negate_row(i);
        }
    }
    return u;
}

inline homcob::SeifertInvariants random_seifert(std::mt19937& rng, bool orientable, int max_genus,
                                                int max_fillings, int max_value) {
    std::uniform_int_distribution<int> gd(orientable ? 0 : 1, max_genus);
    std::uniform_int_distribution<int> kd(0, max_fillings);
    std::uniform_int_distribution<int> vd(1, max_value);
    std::uniform_int_distribution<int> sign(0, 1);
    homcob::SeifertInvariants s;
    s.orientable_base = orientable;
    s.genus = gd(rng);
    int k = kd(rng);
    for (int i = 0; i < k; ++i) {
        Int alpha, beta;
        do {
            alpha = vd(rng);
            beta = vd(rng) * (sign(rng) ? 1 : -1);
        } while (homcob::gcd(alpha, beta) != 1);
        s.fillings.push_back({alpha, beta});
    }
    return s;
}

} // namespace oracles

#endif
