#ifndef HOMCOB_FAMILIES_HPP
#define HOMCOB_FAMILIES_HPP

#include "descriptor.hpp"

namespace homcob {

// Worked families of manifolds that no Seifert fibered space can be
// homology cobordant to. Each returns a full descriptor; parameters are
// validated and out-of-range values raise BadParameter.

// beta1 = 2m+1 with odd-degree cup data: Q # (zero surgery on L_{d+1}) # (2m-2)(S^1 x S^2).
// The surgery block contributes Z^3 with vanishing cup form and Milnor degree d,
// the S^1 x S^2 blocks pad the rank, and Q carries the torsion and linking form.
inline ManifoldDescriptor prop41(long long d, long long m, const ManifoldDescriptor& q) {
    if (d < 3) throw BadParameter("prop41 needs d >= 3");
    if (m < 1) throw BadParameter("prop41 needs m >= 1");
    if (q.beta1 != 0) throw BadParameter("prop41 needs a rational homology sphere summand");
    DescriptorOptions opt;
    opt.milnor_cap = static_cast<int>(d) + 1;
    ManifoldDescriptor out = connected_sum(q, descriptor_from_surgery(
        surgery_on(link_family_L(static_cast<int>(d) + 1)), opt));
    for (long long i = 0; i + 2 < 2 * m; ++i) out = connected_sum(out, s1s2_descriptor());
    return out;
}

inline ManifoldDescriptor prop41(long long d, long long m) { return prop41(d, m, s3_descriptor()); }

// beta1 = 4 with nonzero cup form: zero surgery on the borromean rings
// together with a split unknotted component.
inline ManifoldDescriptor prop42() {
    return descriptor_from_surgery(surgery_on(disjoint_union(borromean(), unlink(1))));
}

// Even beta1 = 2m >= 4 with nonzero cup form scaled by k:
// Q # (zero surgery on the k-cabled borromean rings) # (2m-3)(S^1 x S^2).
inline ManifoldDescriptor prop43(long long k, long long m, const ManifoldDescriptor& q) {
    if (k < 1) throw BadParameter("prop43 needs k >= 1");
    if (m < 2) throw BadParameter("prop43 needs m >= 2");
    if (q.beta1 != 0) throw BadParameter("prop43 needs a rational homology sphere summand");
    ManifoldDescriptor out = connected_sum(q, descriptor_from_surgery(
        surgery_on(cabled_borromean(static_cast<long long>(k)))));
    for (long long i = 0; i + 3 < 2 * m; ++i) out = connected_sum(out, s1s2_descriptor());
    return out;
}

inline ManifoldDescriptor prop43(long long k, long long m) { return prop43(k, m, s3_descriptor()); }

// Rational homology sphere with nonzero mod p cup form: p-framed surgery
// on the borromean rings. p must be an odd prime.
inline ManifoldDescriptor prop44(const Int& p) {
    if (p == 2) throw EvenPrime("prop44 needs an odd prime");
    if (p < 3 || !is_prime(p)) throw BadParameter("prop44 needs an odd prime");
    DescriptorOptions opt;
    opt.mod_primes.push_back(p);
    return descriptor_from_surgery(surgery_on(borromean_framed(p)), opt);
}

// beta1 = 2 with vanishing cup form but Milnor degree 3: zero surgery on
// the whitehead-style string link, where no rule fires even though the
// manifold is known not to be homology cobordant to a Seifert fibered one.
inline ManifoldDescriptor whitehead_example_descriptor() {
    return descriptor_from_surgery(surgery_on(whitehead()));
}

} // namespace homcob

#endif
