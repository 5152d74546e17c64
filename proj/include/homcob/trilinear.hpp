#ifndef HOMCOB_TRILINEAR_HPP
#define HOMCOB_TRILINEAR_HPP

#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include "matrix.hpp"

namespace homcob {

enum class FormRing { Integers, Rationals, ModP };

inline std::string to_string(FormRing r) {
    switch (r) {
        case FormRing::Integers: return "Z";
        case FormRing::Rationals: return "Q";
        default: return "Z/p";
    }
}

// Alternating trilinear form stored by structure constants on strictly
// increasing index triples. Evaluation on repeated indices is 0; odd or
// zero characteristic only, so the alternating extension is determined.
class AlternatingTrilinearForm {
public:
    using Key = std::array<std::size_t, 3>;

    explicit AlternatingTrilinearForm(std::size_t dim,
                                      FormRing ring = FormRing::Integers,
                                      Int p = 0)
        : dim_(dim), ring_(ring), p_(std::move(p)) {
        if (ring_ == FormRing::ModP) {
            if (p_ < 3) throw BadParameter("modular form needs p >= 3");
            if (p_ % 2 == 0) throw EvenPrime("modular form characteristic must be odd");
        } else if (p_ != 0) {
            throw BadParameter("characteristic only meaningful for the mod-p ring");
        }
    }

    std::size_t dim() const { return dim_; }
    FormRing ring() const { return ring_; }
    const Int& characteristic() const { return p_; }

    // Assign the value on a triple of distinct indices (any order).
    void set(std::size_t i, std::size_t j, std::size_t k, Rat v) {
        check_index(i); check_index(j); check_index(k);
        if (i == j || j == k || i == k) {
            if (normalized(v) != 0)
                throw BadParameter("alternating form cannot be nonzero on repeated indices");
            return;
        }
        int sign = sort_sign(i, j, k);
        if (sign < 0) v = -v;
        v = normalized(v);
        Key key{i, j, k};
        if (v == 0) c_.erase(key);
        else c_[key] = v;
    }

    Rat eval(std::size_t i, std::size_t j, std::size_t k) const {
        check_index(i); check_index(j); check_index(k);
        if (i == j || j == k || i == k) return 0;
        int sign = sort_sign(i, j, k);
        auto it = c_.find(Key{i, j, k});
        if (it == c_.end()) return 0;
        return sign < 0 ? normalized(-it->second) : it->second;
    }

    bool is_zero() const { return c_.empty(); }

    const std::map<Key, Rat>& triples() const { return c_; }

    bool operator==(const AlternatingTrilinearForm& o) const {
        return dim_ == o.dim_ && ring_ == o.ring_ && p_ == o.p_ && c_ == o.c_;
    }

    // Orthogonal juxtaposition; the other form's indices are shifted.
    AlternatingTrilinearForm block_sum(const AlternatingTrilinearForm& o) const {
        if (ring_ != o.ring_ || p_ != o.p_)
            throw BadParameter("block sum requires matching coefficient rings");
        AlternatingTrilinearForm r(dim_ + o.dim_, ring_, p_);
        r.c_ = c_;
        for (const auto& [key, v] : o.c_)
            r.c_[Key{key[0] + dim_, key[1] + dim_, key[2] + dim_}] = v;
        return r;
    }

    // Form pulled back along the substitution e'_i = sum_a m(a,i) e_a.
    AlternatingTrilinearForm change_basis(const IntMatrix& m) const {
        if (m.rows() != dim_ || m.cols() != dim_)
            throw BadParameter("basis-change matrix has wrong shape");
        AlternatingTrilinearForm r(dim_, ring_, p_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    Rat v(0);
                    // Alternating pairing against the 3x3 minors of m.
                    for (const auto& [key, coeff] : c_) {
                        Int minor =
                            m(key[0], i) * (m(key[1], j) * m(key[2], k) - m(key[1], k) * m(key[2], j)) -
                            m(key[0], j) * (m(key[1], i) * m(key[2], k) - m(key[1], k) * m(key[2], i)) +
                            m(key[0], k) * (m(key[1], i) * m(key[2], j) - m(key[1], j) * m(key[2], i));
                        v += coeff * minor;
                    }
                    r.set(i, j, k, v);
                }
        return r;
    }

    // gcd of the structure constants; a GL_n(Z) invariant of integral forms.
    Int gcd_of_constants() const {
        if (ring_ != FormRing::Integers)
            throw BadParameter("constant gcd is defined for integral forms");
        Int g(0);
        for (const auto& [key, v] : c_) g = gcd(g, numerator(v));
        return g;
    }

    AlternatingTrilinearForm to_rationals() const {
        if (ring_ == FormRing::ModP)
            throw BadParameter("no canonical lift from mod-p to rational coefficients");
        AlternatingTrilinearForm r(dim_, FormRing::Rationals);
        r.c_ = c_;
        return r;
    }

    AlternatingTrilinearForm reduce_mod(const Int& p) const {
        if (ring_ != FormRing::Integers)
            throw BadParameter("reduction mod p starts from an integral form");
        AlternatingTrilinearForm r(dim_, FormRing::ModP, p);
        for (const auto& [key, v] : c_) {
            Rat w = r.normalized(v);
            if (w != 0) r.c_[key] = w;
        }
        return r;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= dim_) throw IndexOutOfRange("form index out of range");
    }

    // Sorts i<j<k in place, returning the permutation sign.
    static int sort_sign(std::size_t& i, std::size_t& j, std::size_t& k) {
        int sign = 1;
        if (i > j) { std::swap(i, j); sign = -sign; }
        if (j > k) { std::swap(j, k); sign = -sign; }
        if (i > j) { std::swap(i, j); sign = -sign; }
        return sign;
    }

    Rat normalized(Rat v) const {
        switch (ring_) {
            case FormRing::Integers:
                if (denominator(v) != 1)
                    throw BadParameter("integral form given a non-integer value");
                return v;
            case FormRing::Rationals:
                return v;
            default:
                if (denominator(v) % p_ == 0)
                    throw BadParameter("value has no residue mod p");
                // num/den mod p via the inverse of den.
                return Rat(pos_mod(numerator(v) * inverse_mod(denominator(v)), p_));
        }
    }

    Int inverse_mod(const Int& a) const {
        Int r = pos_mod(a, p_);
        for (Int x = 1; x < p_; ++x)
            if (pos_mod(r * x, p_) == 1) return x;
        throw BadParameter("value has no residue mod p");
    }

    std::size_t dim_;
    FormRing ring_;
    Int p_;
    std::map<Key, Rat> c_;
};

} // namespace homcob

#endif
