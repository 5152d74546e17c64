#ifndef HOMCOB_LINKING_FORM_HPP
#define HOMCOB_LINKING_FORM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "abelian.hpp"

namespace homcob {

// Symmetric pairing T x T -> Q/Z on a finite abelian group, presented by
// generator orders (each >= 2, not necessarily a divisor chain) and a Gram
// matrix with entries in [0, 1).
class LinkingForm {
public:
    LinkingForm() : gram_(0, 0) {}

    LinkingForm(std::vector<Int> orders, RatMatrix gram)
        : orders_(std::move(orders)), gram_(std::move(gram)) {
        if (gram_.rows() != orders_.size() || gram_.cols() != orders_.size())
            throw BadParameter("Gram matrix shape does not match generator count");
        for (const Int& o : orders_)
            if (o < 2) throw BadParameter("generator orders must be >= 2");
        for (std::size_t i = 0; i < orders_.size(); ++i)
            for (std::size_t j = 0; j < orders_.size(); ++j)
                gram_(i, j) = mod_one(gram_(i, j));
        if (!gram_.is_symmetric()) throw BadParameter("linking Gram matrix must be symmetric");
    }

    const std::vector<Int>& orders() const { return orders_; }
    const RatMatrix& gram() const { return gram_; }
    std::size_t generators() const { return orders_.size(); }

    Int group_order() const {
        Int n(1);
        for (const Int& o : orders_) n *= o;
        return n;
    }

    // Canonical divisor chain of the underlying group.
    std::vector<Int> canonical_group() const { return canonical_torsion_chain(orders_); }

    // Pairing of two elements given by generator coefficient vectors.
    Rat eval(const std::vector<Int>& x, const std::vector<Int>& y) const {
        if (x.size() != orders_.size() || y.size() != orders_.size())
            throw BadParameter("element coordinate length mismatch");
        Rat v(0);
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < orders_.size(); ++j) {
                if (y[j] == 0) continue;
                v += Rat(x[i] * y[j]) * gram_(i, j);
            }
        }
        return mod_one(v);
    }

    LinkingForm orthogonal_sum(const LinkingForm& o) const {
        std::vector<Int> orders = orders_;
        orders.insert(orders.end(), o.orders_.begin(), o.orders_.end());
        RatMatrix g(orders.size(), orders.size());
        for (std::size_t i = 0; i < orders_.size(); ++i)
            for (std::size_t j = 0; j < orders_.size(); ++j) g(i, j) = gram_(i, j);
        for (std::size_t i = 0; i < o.orders_.size(); ++i)
            for (std::size_t j = 0; j < o.orders_.size(); ++j)
                g(orders_.size() + i, orders_.size() + j) = o.gram_(i, j);
        return LinkingForm(std::move(orders), std::move(g));
    }

    LinkingForm negate() const {
        RatMatrix g = gram_;
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = mod_one(-g(i, j));
        return LinkingForm(orders_, std::move(g));
    }

    // The adjoint T -> Hom(T, Q/Z) is injective iff no nonzero element
    // pairs trivially with every generator. Brute force; |T| must be small.
    bool is_nonsingular(const Int& cutoff = 2000) const {
        Int n = group_order();
        if (n > cutoff) throw CutoffExceeded("group too large for brute-force nonsingularity check");
        std::vector<Int> x(orders_.size(), 0);
        for (Int step = 1; step < n; ++step) {
            std::size_t t = 0;
            while (t < x.size()) {
                x[t] += 1;
                if (x[t] < orders_[t]) break;
                x[t] = 0;
                ++t;
            }
            bool radical = true;
            for (std::size_t j = 0; j < orders_.size() && radical; ++j) {
                std::vector<Int> e(orders_.size(), 0);
                e[j] = 1;
                if (eval(x, e) != 0) radical = false;
            }
            if (radical) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string s = "orders [";
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i) s += ", ";
            s += orders_[i].str();
        }
        s += "], gram [";
        for (std::size_t i = 0; i < gram_.rows(); ++i) {
            if (i) s += "; ";
            for (std::size_t j = 0; j < gram_.cols(); ++j) {
                if (j) s += ", ";
                s += homcob::to_string(gram_(i, j));
            }
        }
        return s + "]";
    }

    bool operator==(const LinkingForm&) const = default;

private:
    std::vector<Int> orders_;
    RatMatrix gram_;
};

} // namespace homcob

#endif
