#ifndef HOMCOB_DESCRIPTOR_HPP
#define HOMCOB_DESCRIPTOR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plumbing.hpp"
#include "surgery.hpp"

namespace homcob {

enum class SurgeryKind { None, ZeroSurgeryLink, FramedSurgeryLink };

// The homology-cobordism invariant bundle of a closed oriented 3-manifold.
// milnor is the manifold-level (rational Massey) degree; for a manifold
// given by zero surgery it sits one below the first nonvanishing mu_bar
// length of the link. kind and provenance are construction metadata and do
// not take part in equality.
struct ManifoldDescriptor {
    std::size_t beta1 = 0;
    std::vector<Int> torsion; // divisor chain
    std::optional<LinkingForm> linking_form;
    std::optional<AlternatingTrilinearForm> cup_form_q;
    std::map<Int, AlternatingTrilinearForm> cup_forms_mod_p;
    std::optional<MilnorDegree> milnor;
    SurgeryKind kind = SurgeryKind::None;
    std::vector<std::string> provenance;

    Int dim_h1_mod_p(const Int& p) const {
        Int d(beta1);
        for (const Int& t : torsion)
            if (t % p == 0) d += 1;
        return d;
    }

    std::string torsion_to_string() const {
        FGAbelianGroup g;
        g.rank = beta1;
        g.torsion = torsion;
        return g.to_string();
    }

    bool operator==(const ManifoldDescriptor& o) const {
        return beta1 == o.beta1 && torsion == o.torsion && linking_form == o.linking_form &&
               cup_form_q == o.cup_form_q && cup_forms_mod_p == o.cup_forms_mod_p &&
               milnor == o.milnor;
    }
};

struct DescriptorOptions {
    bool want_linking_form = true;
    bool want_cup_form_q = true;
    bool want_milnor = true;
    int milnor_cap = 6;                 // link-level multi-index length cap
    std::vector<Int> mod_primes;        // explicit mod-p cup forms to compute
    bool auto_mod_primes = false;       // odd primes dividing every matrix entry
};

namespace detail {

inline std::vector<Int> odd_prime_divisors(Int g) {
    std::vector<Int> ps;
    g = abs(g);
    if (g <= 1) return ps;
    while (g % 2 == 0) g /= 2;
    for (Int q = 3; q * q <= g && q < 1000000; q += 2) {
        if (g % q != 0) continue;
        ps.push_back(q);
        while (g % q == 0) g /= q;
    }
    if (g > 1 && g < Int(1000000) * 1000000) ps.push_back(g);
    return ps;
}

inline MilnorDegree manifold_degree_from_link(const MilnorDegree& link_degree) {
    switch (link_degree.kind) {
        case MilnorDegree::Kind::Exact:
            return MilnorDegree::exactly(link_degree.bound - 1);
        case MilnorDegree::Kind::AtLeast:
            return MilnorDegree::at_least(link_degree.bound - 1);
        default:
            return MilnorDegree::infinite();
    }
}

} // namespace detail

inline ManifoldDescriptor descriptor_from_surgery(const SurgeryPresentation& sp,
                                                  const DescriptorOptions& opt = {}) {
    ManifoldDescriptor d;
    Cokernel ck = h1_cokernel_from_surgery(sp);
    d.beta1 = ck.group.rank;
    d.torsion = ck.group.torsion;

    const bool zero_matrix = sp.matrix.is_zero();
    const bool rhs = det(sp.matrix) != 0; // rational homology sphere
    if (zero_matrix) d.kind = SurgeryKind::ZeroSurgeryLink;
    else if (sp.link) d.kind = SurgeryKind::FramedSurgeryLink;

    d.provenance.push_back("surgery on " + (sp.link ? sp.link->name : "a custom matrix"));

    if (opt.want_linking_form) {
        if (rhs) d.linking_form = linking_form_from_surgery(sp);
        else if (d.torsion.empty()) d.linking_form = LinkingForm();
        else d.provenance.push_back("linking form skipped: torsion with singular matrix");
    }
    if (opt.want_cup_form_q && zero_matrix && sp.link)
        d.cup_form_q = cup_form_zero_surgery(sp);

    for (const Int& p : opt.mod_primes)
        d.cup_forms_mod_p.emplace(p, cup_form_mod_p(sp, p));
    if (opt.auto_mod_primes && !zero_matrix) {
        Int g(0);
        for (std::size_t i = 0; i < sp.matrix.rows(); ++i)
            for (std::size_t j = 0; j < sp.matrix.cols(); ++j) g = gcd(g, sp.matrix(i, j));
        for (const Int& p : detail::odd_prime_divisors(g))
            d.cup_forms_mod_p.emplace(p, cup_form_mod_p(sp, p));
    }

    if (opt.want_milnor) {
        if (zero_matrix && sp.link)
            d.milnor = detail::manifold_degree_from_link(
                milnor_degree(sp.link->longitudes, opt.milnor_cap));
        else if (rhs)
            d.milnor = MilnorDegree::infinite(); // no rational H^1 at all
    }
    return d;
}

inline ManifoldDescriptor descriptor_from_seifert(const SeifertInvariants& s,
                                                  const DescriptorOptions& opt = {}) {
    validate(s);
    ManifoldDescriptor d;
    FGAbelianGroup h = first_homology(s);
    d.beta1 = h.rank;
    d.torsion = h.torsion;
    d.provenance.push_back("seifert " + print_seifert(s));

    if (opt.want_cup_form_q && s.orientable_base && !has_two_torsion(s))
        d.cup_form_q = standard_triple_cup_form(s);
    if (opt.want_linking_form && s.orientable_base && d.beta1 == 0)
        d.linking_form = seifert_linking_form(s);
    if (opt.want_milnor && d.beta1 == 0) d.milnor = MilnorDegree::infinite();
    return d;
}

inline ManifoldDescriptor s3_descriptor() {
    ManifoldDescriptor d;
    d.linking_form = LinkingForm();
    d.cup_form_q = AlternatingTrilinearForm(0, FormRing::Integers);
    d.milnor = MilnorDegree::infinite();
    d.kind = SurgeryKind::ZeroSurgeryLink; // zero surgery on the empty link
    d.provenance.push_back("S^3");
    return d;
}

inline ManifoldDescriptor s1s2_descriptor() {
    ManifoldDescriptor d = descriptor_from_surgery(surgery_on(unlink(1)));
    d.provenance = {"S^1 x S^2"};
    return d;
}

inline ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
    ManifoldDescriptor d;
    d.beta1 = a.beta1 + b.beta1;
    std::vector<Int> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    d.torsion = canonical_torsion_chain(orders);

    if (a.linking_form && b.linking_form)
        d.linking_form = a.linking_form->orthogonal_sum(*b.linking_form);

    if (a.cup_form_q && b.cup_form_q) {
        if (a.cup_form_q->ring() == b.cup_form_q->ring())
            d.cup_form_q = a.cup_form_q->block_sum(*b.cup_form_q);
        else
            d.cup_form_q = a.cup_form_q->to_rationals().block_sum(b.cup_form_q->to_rationals());
    }

    for (const auto& [p, fa] : a.cup_forms_mod_p) {
        auto it = b.cup_forms_mod_p.find(p);
        if (it != b.cup_forms_mod_p.end())
            d.cup_forms_mod_p.emplace(p, fa.block_sum(it->second));
        else if (b.dim_h1_mod_p(p) == 0)
            d.cup_forms_mod_p.emplace(p, fa);
    }
    for (const auto& [p, fb] : b.cup_forms_mod_p)
        if (!a.cup_forms_mod_p.count(p) && a.dim_h1_mod_p(p) == 0)
            d.cup_forms_mod_p.emplace(p, fb);

    if (a.milnor && b.milnor) d.milnor = combine_degrees(*a.milnor, *b.milnor);

    if (a.kind == SurgeryKind::ZeroSurgeryLink && b.kind == SurgeryKind::ZeroSurgeryLink)
        d.kind = SurgeryKind::ZeroSurgeryLink;
    d.provenance = a.provenance;
    d.provenance.insert(d.provenance.end(), b.provenance.begin(), b.provenance.end());
    return d;
}

} // namespace homcob

#endif
