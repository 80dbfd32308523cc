#include "supercurve/supermatrix.hpp"

namespace supercurve {

namespace {

void check_block(const ElementMatrix& m, int rows, int cols, bool even, const char* name) {
    if (static_cast<int>(m.size()) != rows) throw std::invalid_argument(std::string("block ") + name + " has wrong row count");
    for (const auto& r : m) {
        if (static_cast<int>(r.size()) != cols)
            throw std::invalid_argument(std::string("block ") + name + " has wrong column count");
        for (const auto& x : r)
            if (even ? !x.is_even() : !x.is_odd())
                throw std::invalid_argument(std::string("parity contract violated in block ") + name);
    }
}

} // namespace

SuperMatrix::SuperMatrix(AlgebraSignature s, ElementMatrix a, ElementMatrix b, ElementMatrix c,
                         ElementMatrix d)
    : sig(std::move(s)), p(static_cast<int>(a.size())), q(static_cast<int>(d.size())),
      A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
    check_block(A, p, p, true, "A");
    check_block(B, p, q, false, "B");
    check_block(C, q, p, false, "C");
    check_block(D, q, q, true, "D");
}

SuperMatrix SuperMatrix::identity(const AlgebraSignature& sig, int p, int q) {
    ElementMatrix b(p, ElementVector(q, SuperElement::zero(sig)));
    ElementMatrix c(q, ElementVector(p, SuperElement::zero(sig)));
    return SuperMatrix(sig, mat_identity(sig, p), b, c, mat_identity(sig, q));
}

SuperMatrix SuperMatrix::zero(const AlgebraSignature& sig, int p, int q) {
    ElementMatrix a(p, ElementVector(p, SuperElement::zero(sig)));
    ElementMatrix b(p, ElementVector(q, SuperElement::zero(sig)));
    ElementMatrix c(q, ElementVector(p, SuperElement::zero(sig)));
    ElementMatrix d(q, ElementVector(q, SuperElement::zero(sig)));
    return SuperMatrix(sig, a, b, c, d);
}

ElementMatrix SuperMatrix::full() const {
    int n = p + q;
    ElementMatrix m(n, ElementVector(n, SuperElement::zero(sig)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) m[i][j] = A[i][j];
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) m[i][p + j] = B[i][j];
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < p; ++j) m[p + i][j] = C[i][j];
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m[p + i][p + j] = D[i][j];
    return m;
}

SuperMatrix SuperMatrix::from_full(const AlgebraSignature& sig, int p, int q,
                                   const ElementMatrix& m, bool check_parity) {
    ElementMatrix a(p, ElementVector(p, SuperElement::zero(sig)));
    ElementMatrix b(p, ElementVector(q, SuperElement::zero(sig)));
    ElementMatrix c(q, ElementVector(p, SuperElement::zero(sig)));
    ElementMatrix d(q, ElementVector(q, SuperElement::zero(sig)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) a[i][j] = m[i][j];
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) b[i][j] = m[i][p + j];
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < p; ++j) c[i][j] = m[p + i][j];
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) d[i][j] = m[p + i][p + j];
    if (!check_parity) {
        SuperMatrix r = SuperMatrix::zero(sig, p, q);
        r.A = std::move(a);
        r.B = std::move(b);
        r.C = std::move(c);
        r.D = std::move(d);
        return r;
    }
    return SuperMatrix(sig, std::move(a), std::move(b), std::move(c), std::move(d));
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
    if (p != o.p || q != o.q) throw std::invalid_argument("supermatrix size mismatch");
    return from_full(sig, p, q, mat_mul(full(), o.full()));
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
    if (p != o.p || q != o.q) throw std::invalid_argument("supermatrix size mismatch");
    return from_full(sig, p, q, mat_add(full(), o.full()));
}

SuperElement berezinian(const SuperMatrix& T) {
    ElementMatrix d_inv;
    try {
        d_inv = mat_inverse(T.D);
    } catch (const NotInvertible&) {
        throw NotInvertible("Berezinian: block D is not invertible");
    }
    ElementMatrix schur = mat_add(T.A, mat_scale(mat_mul(T.B, mat_mul(d_inv, T.C)),
                                                 SuperElement::scalar(T.sig, GaussianRational(-1))));
    return mat_det(schur) * mat_det(T.D).inverse();
}

SuperElement supertrace(const SuperMatrix& T) {
    SuperElement r = SuperElement::zero(T.sig);
    for (int i = 0; i < T.p; ++i) r += T.A[i][i];
    for (int i = 0; i < T.q; ++i) r -= T.D[i][i];
    return r;
}

SuperMatrix matrix_exp(const SuperMatrix& T) {
    int n = T.p + T.q;
    ElementMatrix acc = mat_identity(T.sig, n);
    ElementMatrix pw = mat_identity(T.sig, n);
    ElementMatrix full = T.full();
    Rational kfac = 1;
    int window = T.sig.exact_polynomial_mode ? 64 : T.sig.e_max - T.sig.e_min;
    int cap = n * (T.sig.odd_count() + 2) + window + 8;
    auto is_zero = [](const ElementMatrix& m) {
        for (const auto& r : m)
            for (const auto& x : r)
                if (!x.is_zero()) return false;
        return true;
    };
    for (int k = 1;; ++k) {
        pw = mat_mul(pw, full);
        if (is_zero(pw)) break;
        if (k > cap) throw std::domain_error("matrix exp series failed to terminate");
        kfac *= k;
        SuperElement inv = SuperElement::scalar(T.sig, GaussianRational(Rational(1) / kfac));
        acc = mat_add(acc, mat_scale(pw, inv));
    }
    return SuperMatrix::from_full(T.sig, T.p, T.q, acc);
}

SuperMatrix jacobian(const SuperMap& phi) {
    const AlgebraSignature& sig = phi.sig;
    int n = sig.N;
    ElementMatrix a{{phi.F.d_even()}};
    ElementMatrix b(1, ElementVector(n, SuperElement::zero(sig)));
    ElementMatrix c(n, ElementVector(1, SuperElement::zero(sig)));
    ElementMatrix d(n, ElementVector(n, SuperElement::zero(sig)));
    for (int i = 0; i < n; ++i) b[0][i] = phi.phi[i].d_even();
    for (int j = 0; j < n; ++j) c[j][0] = phi.F.d_odd(j);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) d[j][i] = phi.phi[i].d_odd(j);
    return SuperMatrix(sig, std::move(a), std::move(b), std::move(c), std::move(d));
}

BerezinSection pullback_berezin(const SuperMap& phi, const BerezinSection& delta) {
    phi.sig.check_same(delta.sig);
    return BerezinSection(phi.sig, berezinian(jacobian(phi)) * substitute(delta.f, phi));
}

bool is_aut_delta(const SuperMap& phi) {
    return berezinian(jacobian(phi)) == SuperElement::one(phi.sig);
}

} // namespace supercurve
