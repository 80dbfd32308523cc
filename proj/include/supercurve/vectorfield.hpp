#pragma once

#include <optional>
#include <vector>

#include "supercurve/supermap.hpp"

namespace supercurve {

/// Derivation a*d/dz + sum_i b_i*d/dth_i over the base ring Lambda[eta].
struct VectorField {
    AlgebraSignature sig;
    SuperElement a;
    std::vector<SuperElement> b;

    VectorField() = default;
    explicit VectorField(const AlgebraSignature& s)
        : sig(s), a(SuperElement::zero(s)), b(s.N, SuperElement::zero(s)) {}
    VectorField(AlgebraSignature s, SuperElement a_, std::vector<SuperElement> b_);

    static VectorField zero(const AlgebraSignature& sig) { return VectorField(sig); }

    bool is_zero() const;
    /// Parity when homogeneous (parity of a; b_i must carry the opposite).
    std::optional<int> parity() const;
    bool is_homogeneous() const { return parity().has_value(); }

    VectorField operator-() const;
    VectorField operator+(const VectorField& o) const;
    VectorField operator*(const GaussianRational& c) const;
    bool operator==(const VectorField& o) const {
        return sig == o.sig && a == o.a && b == o.b;
    }
    bool operator!=(const VectorField& o) const { return !(*this == o); }

    std::string str() const;
};

struct FieldClass {
    bool in_S1N = false;
    bool in_S2 = false;
    bool in_K1N = false;
    std::optional<SuperElement> k_multiplier;
};

SuperElement apply(const VectorField& X, const SuperElement& f);

/// Graded commutator [X,Y] = XY - (-1)^{|X||Y|}YX, read off on coordinates.
VectorField bracket(const VectorField& X, const VectorField& Y);

/// d_z a + sum_i (-1)^{|b_i|} d_thi b_i, extended linearly over parities.
SuperElement sdiv(const VectorField& X);

/// Divergence against the section f*[dz|dth..]: sdiv(X) + X(f)/f.
SuperElement sdiv_wrt(const VectorField& X, const SuperElement& f);

/// Membership flags: S(1|N) (divergence free), S(2) (N=2, additionally
/// d_th1 d_th2 (X z) = 0), K(1|N) (L_X omega proportional to omega, with
/// the multiplier returned).
FieldClass classify(const VectorField& X);

/// Syntactic filtration check guaranteeing exp termination: reduced part of
/// a vanishes to order >= 2 (or entirely), scalar theta-linear coefficients
/// of each b_i vanish to order >= 1.  Borderline fields that happen to
/// terminate are still rejected.
bool is_pro_nilpotent(const VectorField& X);

/// exp(X) = id + X/1! + X^2/2! + ... applied to the coordinates.
SuperMap exp_field(const VectorField& X);

/// Inverse of exp_field on unipotent maps, via the logarithm series.
VectorField log_map(const SuperMap& phi);

struct Decomposition {
    SuperMap jet;  // reduced even part | theta-linear part
    VectorField X; // log of the unipotent factor
};

/// Factors phi = exp(X) o jet.  Errors when the jet is not invertible or
/// the remaining factor is not unipotent.
Decomposition decompose(const SuperMap& phi);

SuperMap inverse_map(const SuperMap& phi);

// Divergence-free generator families on N=2 (L works for any N).
VectorField field_L(const AlgebraSignature& sig, int m);
VectorField field_J0(const AlgebraSignature& sig, int m);
VectorField field_J1(const AlgebraSignature& sig, int m);
VectorField field_J2(const AlgebraSignature& sig, int m);
VectorField field_K(const AlgebraSignature& sig);
/// -z^e d/dth_i; integer exponent labelling of the half-integer family.
VectorField field_G(const AlgebraSignature& sig, int e, int i);
/// z^e th_i d/dz + e z^{e-1} th_i sum_j th_j d/dth_j (N = 2).
VectorField field_H(const AlgebraSignature& sig, int e, int i);
/// D^i = th_i d/dz + d/dth_i.
VectorField contact_D(const AlgebraSignature& sig, int i);
/// D^f = f d/dz + 1/2 (-1)^{|f|} sum_i (D^i f) D^i for homogeneous f.
VectorField contact_field(const SuperElement& f);

} // namespace supercurve
