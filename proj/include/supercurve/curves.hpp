#pragma once

#include "supercurve/oneform.hpp"
#include "supercurve/supermatrix.hpp"

namespace supercurve {

/// Map does not preserve the Berezinian (Ber(J Phi) != 1).
struct BerezinianNotPreserved : std::domain_error {
    using std::domain_error::domain_error;
};
/// Map preserves the Berezinian but its unipotent factor is not generated
/// by the derived algebra.
struct NotS2Generated : std::domain_error {
    using std::domain_error::domain_error;
};

/// Aut^Delta membership for N=2: phi = exp(X) o jet with X in S(2) and the
/// jet Berezinian-preserving.  Throws BerezinianNotPreserved when phi is
/// not even in Aut^delta; returns false for Aut^delta \ Aut^Delta.
bool is_aut_Delta(const SuperMap& phi);

/// The constant lambda with X z = ... + lambda*th1*th2 for the unipotent
/// logarithm X of an Aut^delta map; an even element of the parameter ring.
SuperElement extract_lambda(const SuperMap& phi);

/// Signature with the odd coordinates doubled (th1..th2N), same parameters
/// and window; the new coordinates rho_i are th(N+i).
AlgebraSignature lifted_signature(const AlgebraSignature& sig);
AlgebraSignature lowered_signature(const AlgebraSignature& sig);

/// Embeds an element of the 1|N ring into the 1|2N ring.
SuperElement embed_lifted(const SuperElement& x, const AlgebraSignature& to);

/// Canonical contact extension (F|phi,eta): the new odd images solve
/// sum_j eta^j D_k phi^j = D_k F with D_k = rho^k d_z + d_thk, so the lift
/// preserves dz + sum rho^j dth^j up to a multiple.  For N=2 the result is
/// checked against the closed-form solution.
SuperMap lift(const SuperMap& phi);

/// Closed-form n=2 solution (A^-1 grad_th F plus Ber-weighted cofactor
/// terms); exposed for cross-checks.
SuperMap lift_closed_form_n2(const SuperMap& phi);

/// The involution (z - th.rho | rho, th) on a 1|2n ring.
SuperMap alpha_map(const AlgebraSignature& sig2n);
SuperMap ad_alpha(const SuperMap& psi);

/// Section of lift: present when the first half of psi is rho-free and the
/// appended images match the lift of the projected map.
std::optional<SuperMap> project_lifted(const SuperMap& psi);

/// project_lifted(ad_alpha(lift(phi))) for phi in Aut^Delta.
SuperMap dual(const SuperMap& phi);

/// Coordinates (F|th) with dF/dz = f and F(0) = 0 so the section f*Delta0
/// becomes the plain volume element.
SuperMap compatible_coordinates(const BerezinSection& delta);

/// Two-chart split curve over P^1 from E = O(a) (+) O(b), a+b = -2; the
/// transition is (u/z | s z^-a th1, s' z^-b th2) with the unit twists fixed
/// by Ber(J) = 1.
struct SplitCurveData {
    int a = -1;
    int b = -1;
    GaussianRational u = GaussianRational(-1);
};

SuperMap split_transition(const SplitCurveData& data, const AlgebraSignature& sig);
SplitCurveData dual_split(const SplitCurveData& data);

} // namespace supercurve
