#ifndef HOMCOB_SURGERY_HPP
#define HOMCOB_SURGERY_HPP

#include <optional>

#include "link_catalog.hpp"
#include "linking_form.hpp"
#include "milnor.hpp"
#include "trilinear.hpp"

namespace homcob {

// Surgery on a framed link in the 3-sphere, described by its symmetric
// linking matrix; link words ride along when mu-invariants are needed.
struct SurgeryPresentation {
    IntMatrix matrix;
    std::optional<LinkCatalogEntry> link;
};

inline SurgeryPresentation surgery_on(const LinkCatalogEntry& e) {
    return SurgeryPresentation{e.linking_matrix, e};
}

inline SurgeryPresentation make_surgery(IntMatrix matrix,
                                        std::optional<LinkCatalogEntry> link = std::nullopt) {
    if (matrix.rows() != matrix.cols()) throw BadParameter("surgery matrix must be square");
    if (!matrix.is_symmetric()) throw BadParameter("surgery matrix must be symmetric");
    if (link && link->linking_matrix != matrix)
        throw BadParameter("surgery matrix disagrees with the attached link");
    return SurgeryPresentation{std::move(matrix), std::move(link)};
}

inline Cokernel h1_cokernel_from_surgery(const SurgeryPresentation& sp) {
    return cokernel(sp.matrix);
}

inline FGAbelianGroup h1_from_surgery(const SurgeryPresentation& sp) {
    return h1_cokernel_from_surgery(sp).group;
}

// lambda(h_s, h_t) = -(V^-1 A^-1 V^-T)_{st} mod 1 on the normal-form
// torsion generators h_s of coker(A).
inline LinkingForm linking_form_from_surgery(const SurgeryPresentation& sp) {
    if (det(sp.matrix) == 0)
        throw NotRationalHomologySphere("surgery matrix is singular, so beta_1 > 0");
    Cokernel ck = h1_cokernel_from_surgery(sp);
    RatMatrix vi = to_rational(ck.v_inv);
    RatMatrix b = vi * rational_inverse(sp.matrix) * vi.transpose();
    const auto& pos = ck.torsion_positions;
    RatMatrix gram(pos.size(), pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = 0; j < pos.size(); ++j)
            gram(i, j) = mod_one(-b(pos[i], pos[j]));
    return LinkingForm(ck.group.torsion, std::move(gram));
}

// Integral triple cup product form of the zero-surgery manifold:
// constants mu_bar(i,j,k) on the meridian basis of H^1.
inline AlternatingTrilinearForm cup_form_zero_surgery(const SurgeryPresentation& sp) {
    if (!sp.matrix.is_zero())
        throw NonZeroLinkingMatrix("cup form needs zero framings and zero linking numbers");
    if (!sp.link) throw MissingLinkData("cup form needs longitude words");
    const int n = sp.link->components;
    AlternatingTrilinearForm f((std::size_t)n, FormRing::Integers);
    if (n >= 3) {
        LongitudeExpansions exps(sp.link->longitudes, 3);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    MuBar m = exps.mu_bar({i, j, k});
                    // Zero linking numbers leave no indeterminacy here.
                    f.set(i - 1, j - 1, k - 1, Rat(m.value));
                }
    }
    return f;
}

// Mod-p cup form when every matrix entry is divisible by the odd prime p,
// so H^1(M;Z_p) keeps one basis vector per component.
inline AlternatingTrilinearForm cup_form_mod_p(const SurgeryPresentation& sp, const Int& p) {
    if (p == 2) throw EvenPrime("mod-p cup form is defined for odd p only");
    if (p < 3 || !is_prime(p)) throw BadParameter("p must be an odd prime");
    if (!sp.link) throw MissingLinkData("mod-p cup form needs longitude words");
    for (std::size_t i = 0; i < sp.matrix.rows(); ++i)
        for (std::size_t j = 0; j < sp.matrix.cols(); ++j)
            if (sp.matrix(i, j) % p != 0)
                throw MatrixNotDivisibleByP("matrix entry not divisible by p");
    const int n = sp.link->components;
    AlternatingTrilinearForm f((std::size_t)n, FormRing::ModP, p);
    if (n >= 3) {
        LongitudeExpansions exps(sp.link->longitudes, 3);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    MuBar m = exps.mu_bar({i, j, k});
                    // p divides every linking number, hence the indeterminacy,
                    // so the value has a well-defined residue.
                    f.set(i - 1, j - 1, k - 1, Rat(m.value));
                }
    }
    return f;
}

} // namespace homcob

#endif
