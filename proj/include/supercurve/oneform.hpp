#pragma once

#include "supercurve/vectorfield.hpp"

namespace supercurve {

/// f0*dz + sum_a f_a*dth_a with coefficients on the left.
///
/// The differential follows the right-derivative convention: for
/// homogeneous g, dg = (d_z g)dz - (-1)^{|g|} sum_a (d_tha g)dth_a, so an
/// even g picks up minus signs on the odd differentials.  d(coordinate)
/// equals the coordinate differential under either parity.
struct OneForm {
    AlgebraSignature sig;
    SuperElement f0;
    std::vector<SuperElement> f;

    explicit OneForm(const AlgebraSignature& s)
        : sig(s), f0(SuperElement::zero(s)), f(s.N, SuperElement::zero(s)) {}
    OneForm(AlgebraSignature s, SuperElement f0_, std::vector<SuperElement> f_);

    bool operator==(const OneForm& o) const { return sig == o.sig && f0 == o.f0 && f == o.f; }
    bool operator!=(const OneForm& o) const { return !(*this == o); }

    OneForm operator+(const OneForm& o) const;
    /// Left multiplication by a function.
    OneForm scaled(const SuperElement& c) const;

    std::string str() const;
};

/// omega = dz + th1 dth1 + ... + thN dthN.
OneForm standard_omega(const AlgebraSignature& sig);

/// dz + rho1 dth1 + ... + rhon dthn on a 1|2n signature, where rhoi is the
/// (n+i)-th odd coordinate.
OneForm lifted_omega(const AlgebraSignature& sig);

OneForm d_element(const SuperElement& g);

/// Phi^*(sum omega_b dx^b) = sum (omega_b o Phi) d(Phi^b).
OneForm pullback_form(const SuperMap& phi, const OneForm& omega);

/// The multiplier f with Phi^* omega = f * omega, if one exists.
std::optional<SuperElement> form_multiplier(const SuperMap& phi, const OneForm& omega);
std::optional<SuperElement> is_aut_omega(const SuperMap& phi);

/// L_X omega with L_X(c alpha) = (Xc)alpha + (-1)^{|X||c|} c L_X(alpha) and
/// L_X dx^b = d(X x^b); X homogeneous.
OneForm lie_derivative(const VectorField& X, const OneForm& omega);

/// Multiplier f with L_X omega = f * omega, if proportional.
std::optional<SuperElement> k_multiplier(const VectorField& X);

} // namespace supercurve
