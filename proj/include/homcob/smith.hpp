#ifndef HOMCOB_SMITH_HPP
#define HOMCOB_SMITH_HPP

#include <cstddef>

#include "matrix.hpp"

namespace homcob {

// u * input * v = d, with u and v unimodular and d in Smith normal form:
// nonnegative diagonal entries, each dividing the next, zeros trailing.
struct SmithNormalForm {
    IntMatrix u, d, v;
};

namespace detail {

// Position of a minimal nonzero |entry| in the submatrix at (t..), or rows() if none.
inline bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t r = t; r < a.rows(); ++r)
        for (std::size_t c = t; c < a.cols(); ++c) {
            if (a(r, c) == 0) continue;
            Int v = homcob::abs(a(r, c));
            if (!found || v < best) { found = true; best = v; pr = r; pc = c; }
        }
    return found;
}

// Rows i, j become (x*Ri + y*Rj, u*Ri + v*Rj). Callers pass x*v - y*u = 1.
inline void row_transform(IntMatrix& mat, std::size_t i, std::size_t j,
                          const Int& x, const Int& y, const Int& u, const Int& v) {
    for (std::size_t c = 0; c < mat.cols(); ++c) {
        Int a = mat(i, c), b = mat(j, c);
        mat(i, c) = x * a + y * b;
        mat(j, c) = u * a + v * b;
    }
}

inline void col_transform(IntMatrix& mat, std::size_t i, std::size_t j,
                          const Int& x, const Int& y, const Int& u, const Int& v) {
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        Int a = mat(r, i), b = mat(r, j);
        mat(r, i) = x * a + y * b;
        mat(r, j) = u * a + v * b;
    }
}

} // namespace detail

inline SmithNormalForm smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows(), n = input.cols();
    SmithNormalForm s{IntMatrix::identity(m), input, IntMatrix::identity(n)};
    IntMatrix& a = s.d;
    const std::size_t t_end = m < n ? m : n;

    for (std::size_t t = 0; t < t_end; ++t) {
        std::size_t pr = t, pc = t;
        if (!detail::find_pivot(a, t, pr, pc)) break;
        a.swap_rows(t, pr); s.u.swap_rows(t, pr);
        a.swap_cols(t, pc); s.v.swap_cols(t, pc);

        for (;;) {
            // Clear the pivot column. An entry the pivot does not divide is
            // absorbed with a unimodular 2x2 row transform that replaces the
            // pivot by gcd(pivot, entry), a proper divisor, so these fire at
            // most log |pivot| times per stage and entries stay tame.
            for (std::size_t r = t + 1; r < m; ++r) {
                if (a(r, t) == 0) continue;
                if (a(r, t) % a(t, t) == 0) {
                    Int q = a(r, t) / a(t, t);
                    a.add_row(r, t, -q); s.u.add_row(r, t, -q);
                } else {
                    Int x, y;
                    Int g = ext_gcd(a(t, t), a(r, t), x, y);
                    Int bu = -(a(r, t) / g), bv = a(t, t) / g;
                    detail::row_transform(a, t, r, x, y, bu, bv);
                    detail::row_transform(s.u, t, r, x, y, bu, bv);
                }
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (a(t, c) == 0) continue;
                if (a(t, c) % a(t, t) == 0) {
                    Int q = a(t, c) / a(t, t);
                    a.add_col(c, t, -q); s.v.add_col(c, t, -q);
                } else {
                    Int x, y;
                    Int g = ext_gcd(a(t, t), a(t, c), x, y);
                    Int bu = -(a(t, c) / g), bv = a(t, t) / g;
                    detail::col_transform(a, t, c, x, y, bu, bv);
                    detail::col_transform(s.v, t, c, x, y, bu, bv);
                }
            }
            // Column transforms can refill the pivot column, so check the
            // postcondition directly instead of trusting the bookkeeping.
            bool clear = true;
            for (std::size_t r = t + 1; r < m && clear; ++r)
                if (a(r, t) != 0) clear = false;
            for (std::size_t c = t + 1; c < n && clear; ++c)
                if (a(t, c) != 0) clear = false;
            if (!clear) continue;
            // Row and column are clear. Enforce divisibility of the rest of
            // the submatrix by folding a bad entry's row into row t.
            bool fixed = true;
            for (std::size_t r = t + 1; r < m && fixed; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        a.add_row(t, r, Int(1)); s.u.add_row(t, r, Int(1));
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
    }

    // Sign normalization: make every diagonal entry nonnegative.
    for (std::size_t t = 0; t < t_end; ++t)
        if (a(t, t) < 0) { a.negate_row(t); s.u.negate_row(t); }
    return s;
}

} // namespace homcob

#endif
