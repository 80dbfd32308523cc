#pragma once

#include "supercurve/linalg.hpp"
#include "supercurve/supermap.hpp"
#include "supercurve/vectorfield.hpp"

namespace supercurve {

/// Even block matrix [A B; C D]: A (p x p) and D (q x q) carry even
/// entries, B (p x q) and C (q x p) odd entries.
struct SuperMatrix {
    AlgebraSignature sig;
    int p = 0, q = 0;
    ElementMatrix A, B, C, D;

    SuperMatrix(AlgebraSignature s, ElementMatrix a, ElementMatrix b, ElementMatrix c,
                ElementMatrix d);

    static SuperMatrix identity(const AlgebraSignature& sig, int p, int q);
    static SuperMatrix zero(const AlgebraSignature& sig, int p, int q);

    SuperMatrix operator*(const SuperMatrix& o) const;
    SuperMatrix operator+(const SuperMatrix& o) const;
    bool operator==(const SuperMatrix& o) const {
        return p == o.p && q == o.q && A == o.A && B == o.B && C == o.C && D == o.D;
    }

    ElementMatrix full() const;
    static SuperMatrix from_full(const AlgebraSignature& sig, int p, int q,
                                 const ElementMatrix& m, bool check_parity = true);
};

/// Ber(T) = det(A - B D^-1 C) det(D)^-1; requires D invertible.
SuperElement berezinian(const SuperMatrix& T);

/// str(T) = tr A - tr D.
SuperElement supertrace(const SuperMatrix& T);

/// Sum T^k/k! for T with nilpotent reduced part.
SuperMatrix matrix_exp(const SuperMatrix& T);

/// Partial derivatives of the images by the sources, rows indexed by the
/// source variable and columns by the image, blocks (even|odd).  With this
/// layout J(P o Q) = J(Q) * (J(P) o Q) and Ber(J(P o Q)) =
/// Ber(JQ) * (Ber(JP) o Q).
SuperMatrix jacobian(const SuperMap& phi);

/// Section f * [dz|dth1..dthN] of the Berezinian module.
struct BerezinSection {
    AlgebraSignature sig;
    SuperElement f;

    BerezinSection(AlgebraSignature s, SuperElement f_) : sig(std::move(s)), f(std::move(f_)) {
        sig.check_same(f.signature());
        if (!f.is_even()) throw std::invalid_argument("Berezin section coefficient must be even");
    }
    static BerezinSection volume(const AlgebraSignature& sig) {
        return BerezinSection(sig, SuperElement::one(sig));
    }
    bool is_unit() const { return f.is_unit(); }
    bool operator==(const BerezinSection& o) const { return sig == o.sig && f == o.f; }
};

/// Phi^*(f Delta0) = (Ber(J Phi) * (f o Phi)) Delta0.
BerezinSection pullback_berezin(const SuperMap& phi, const BerezinSection& delta);

/// Ber(J Phi) == 1 exactly.
bool is_aut_delta(const SuperMap& phi);

inline SuperElement sdiv_wrt(const VectorField& X, const BerezinSection& delta) {
    return sdiv_wrt(X, delta.f);
}

} // namespace supercurve
