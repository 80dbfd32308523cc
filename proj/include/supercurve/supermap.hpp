#pragma once

#include <vector>

#include "supercurve/element.hpp"

namespace supercurve {

struct NotSupported : std::domain_error {
    using std::domain_error::domain_error;
};

/// Coordinate change (F | phi1..phiN) acting on elements by substitution
/// z -> F, thi -> phii; eta parameters are fixed.
///
/// Parity is enforced at construction.  The reduced even part must be of a
/// supported composition shape (affine a*z+b or inversion u/z) whenever the
/// map is actually used as a substitution target; maps produced by the
/// exponential may carry other shapes and are then values only.
struct SuperMap {
    AlgebraSignature sig;
    SuperElement F;
    std::vector<SuperElement> phi;

    SuperMap() = default;
    SuperMap(AlgebraSignature s, SuperElement f, std::vector<SuperElement> p);

    static SuperMap identity(const AlgebraSignature& sig);

    bool operator==(const SuperMap& o) const {
        return sig == o.sig && F == o.F && phi == o.phi;
    }
    bool operator!=(const SuperMap& o) const { return !(*this == o); }

    /// Even image of z with all nilpotents dropped (a Laurent polynomial).
    SuperElement reduced_even() const { return F.reduce(); }

    /// The z-dependent matrix of theta-linear coefficients of the odd
    /// images: phii = sum_j A[i][j](z)*thj + (corrections).
    std::vector<std::vector<SuperElement>> odd_linear_matrix() const;

    /// Reduced jet (reduced even part | theta-linear part): the semisimple
    /// factor of the unipotent decomposition.
    SuperMap jet() const;

    /// True when reduced_even() == z and the reduced theta-linear matrix is
    /// the identity.
    bool is_unipotent() const;

    std::string str() const;
};

/// Ring homomorphism f(z,th) -> f(F,phi); etas fixed.  The even image is
/// split as F = F_red + nu with nu nilpotent and the finite Taylor sum
/// sum_k f^(k)(F_red) nu^k / k! is expanded; F_red must be affine, constant
/// or an inversion u/z.
SuperElement substitute(const SuperElement& f, const SuperMap& target);

/// Composition as maps: (P after Q), coordinates substitute(P^b, Q).
SuperMap compose(const SuperMap& P, const SuperMap& Q);

/// Inverse of a reduced-jet map (no nilpotent content).  Errors when the
/// even part is not affine/inversion or the odd linear block is singular.
SuperMap jet_inverse(const SuperMap& jet);

} // namespace supercurve
