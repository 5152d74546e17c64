#ifndef HOMCOB_ABELIAN_HPP
#define HOMCOB_ABELIAN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "smith.hpp"

namespace homcob {

// Element of a finitely generated abelian group in normal-form coordinates:
// tors[i] lives in Z/torsion[i], free[i] in the i-th Z summand.
struct AbelianElement {
    std::vector<Int> tors;
    std::vector<Int> free;

    bool operator==(const AbelianElement&) const = default;
};

// Z^rank + Z/torsion[0] + Z/torsion[1] + ... with torsion[i] | torsion[i+1],
// every entry >= 2. gen_map (when present) sends each generator of the
// original presentation to its normal-form image.
class FGAbelianGroup {
public:
    std::size_t rank = 0;
    std::vector<Int> torsion;
    std::vector<AbelianElement> gen_map;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }

    // |G| for finite groups, 0 when the group is infinite.
    Int order() const {
        if (rank > 0) return 0;
        Int n(1);
        for (const auto& t : torsion) n *= t;
        return n;
    }

    AbelianElement zero() const {
        return AbelianElement{std::vector<Int>(torsion.size()),
                              std::vector<Int>(rank)};
    }

    AbelianElement reduce(AbelianElement e) const {
        for (std::size_t i = 0; i < torsion.size(); ++i)
            e.tors[i] = pos_mod(e.tors[i], torsion[i]);
        return e;
    }

    AbelianElement add(const AbelianElement& a, const AbelianElement& b) const {
        AbelianElement r = a;
        for (std::size_t i = 0; i < r.tors.size(); ++i) r.tors[i] += b.tors[i];
        for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] += b.free[i];
        return reduce(r);
    }

    AbelianElement scale(const Int& k, const AbelianElement& a) const {
        AbelianElement r = a;
        for (auto& v : r.tors) v *= k;
        for (auto& v : r.free) v *= k;
        return reduce(r);
    }

    // Order of an element; 0 means infinite order.
    Int order_of(const AbelianElement& e) const {
        for (const auto& v : e.free)
            if (v != 0) return 0;
        Int n(1);
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            Int c = pos_mod(e.tors[i], torsion[i]);
            if (c == 0) continue;
            n = lcm(n, torsion[i] / gcd(torsion[i], c));
        }
        return n;
    }

    // "0", "Z", "Z^2 + Z/3 + Z/9", ...
    std::string to_string() const {
        std::string s;
        auto append = [&s](const std::string& part) {
            if (!s.empty()) s += " + ";
            s += part;
        };
        if (rank == 1) append("Z");
        else if (rank > 1) append("Z^" + std::to_string(rank));
        for (const auto& t : torsion) append("Z/" + t.str());
        return s.empty() ? "0" : s;
    }
};

// Presentation data beyond the bare group: the column transform of the
// Smith normal form, its inverse, and where the torsion coordinates sit
// in the diagonal. Row s of v_inv expresses the s-th normal-form
// generator in the original generators.
struct Cokernel {
    FGAbelianGroup group;
    IntMatrix v, v_inv;
    std::vector<Int> diag;                      // full chain incl. 1s and 0s
    std::vector<std::size_t> torsion_positions; // s with diag[s] >= 2
    std::vector<std::size_t> free_positions;    // s with diag[s] == 0
};

// Quotient of Z^cols by the row space of `relations`.
inline Cokernel cokernel(const IntMatrix& relations) {
    const std::size_t n = relations.cols();
    SmithNormalForm s = smith_normal_form(relations);

    Cokernel ck;
    ck.v = s.v;
    ck.v_inv = unimodular_inverse(s.v);
    ck.diag.assign(n, Int(0));
    const std::size_t t_end = relations.rows() < n ? relations.rows() : n;
    for (std::size_t t = 0; t < t_end; ++t) ck.diag[t] = s.d(t, t);

    for (std::size_t t = 0; t < n; ++t) {
        if (ck.diag[t] == 0) ck.free_positions.push_back(t);
        else if (ck.diag[t] >= 2) ck.torsion_positions.push_back(t);
    }
    ck.group.rank = ck.free_positions.size();
    for (std::size_t t : ck.torsion_positions) ck.group.torsion.push_back(ck.diag[t]);

    // Generator j maps to row j of v, read off in normal-form coordinates.
    ck.group.gen_map.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        AbelianElement e;
        for (std::size_t t : ck.torsion_positions)
            e.tors.push_back(pos_mod(s.v(j, t), ck.diag[t]));
        for (std::size_t t : ck.free_positions) e.free.push_back(s.v(j, t));
        ck.group.gen_map.push_back(std::move(e));
    }
    return ck;
}

// Canonical divisor chain of a direct sum of cyclic groups of the given
// orders (entries >= 1; 1s contribute nothing).
inline std::vector<Int> canonical_torsion_chain(const std::vector<Int>& orders) {
    IntMatrix d(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
    return cokernel(d).group.torsion;
}

} // namespace homcob

#endif
