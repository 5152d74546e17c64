#ifndef HOMCOB_MATRIX_HPP
#define HOMCOB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "integers.hpp"

namespace homcob {

// Dense row-major matrix over a commutative ring element type.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DomainError("ragged matrix initializer");
            for (const auto& v : row) a_.push_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& v = (*this)(r, k);
                if (v == T(0)) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) += v * o(k, c);
            }
        return p;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : a_) if (v != T(0)) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row i += f * row j
    void add_row(std::size_t i, std::size_t j, const T& f) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
    }
    void add_col(std::size_t i, std::size_t j, const T& f) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Exact inverse over the rationals (Gauss-Jordan). Throws SingularMatrix.
inline RatMatrix rational_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularMatrix("matrix is singular over the rationals");
        a.swap_rows(k, p);
        inv.swap_rows(k, p);
        Rat piv = a(k, k);
        for (std::size_t c = 0; c < n; ++c) { a(k, c) /= piv; inv(k, c) /= piv; }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || a(r, k) == 0) continue;
            Rat f = a(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(k, c);
                inv(r, c) -= f * inv(k, c);
            }
        }
    }
    return inv;
}

inline RatMatrix rational_inverse(const IntMatrix& m) { return rational_inverse(to_rational(m)); }

// Inverse of a matrix known to have determinant +-1; result is integral.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    RatMatrix inv = rational_inverse(m);
    IntMatrix out(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            if (denominator(inv(i, j)) != 1)
                throw DomainError("matrix is not unimodular");
            out(i, j) = numerator(inv(i, j));
        }
    return out;
}

} // namespace homcob

#endif
