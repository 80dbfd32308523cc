#include "supercurve/oneform.hpp"

#include <sstream>

namespace supercurve {

OneForm::OneForm(AlgebraSignature s, SuperElement f0_, std::vector<SuperElement> f_)
    : sig(std::move(s)), f0(std::move(f0_)), f(std::move(f_)) {
    sig.check_same(f0.signature());
    if (static_cast<int>(f.size()) != sig.N)
        throw std::invalid_argument("one-form needs N odd coefficients");
    for (const auto& c : f) sig.check_same(c.signature());
}

OneForm OneForm::operator+(const OneForm& o) const {
    sig.check_same(o.sig);
    OneForm r = *this;
    r.f0 += o.f0;
    for (int i = 0; i < sig.N; ++i) r.f[i] += o.f[i];
    return r;
}

OneForm OneForm::scaled(const SuperElement& c) const {
    OneForm r = *this;
    r.f0 = c * r.f0;
    for (auto& x : r.f) x = c * x;
    return r;
}

std::string OneForm::str() const {
    std::ostringstream out;
    out << "(" << f0.str() << ")*d" << sig.even_name;
    for (int i = 0; i < sig.N; ++i)
        out << " + (" << f[i].str() << ")*d" << sig.generator_name(i);
    return out.str();
}

OneForm standard_omega(const AlgebraSignature& sig) {
    OneForm w(sig);
    w.f0 = SuperElement::one(sig);
    for (int i = 0; i < sig.N; ++i) w.f[i] = SuperElement::gen(sig, i);
    return w;
}

OneForm lifted_omega(const AlgebraSignature& sig) {
    if (sig.N % 2 != 0) throw std::invalid_argument("lifted form needs even N");
    int n = sig.N / 2;
    OneForm w(sig);
    w.f0 = SuperElement::one(sig);
    for (int i = 0; i < n; ++i) w.f[i] = SuperElement::gen(sig, n + i);
    return w;
}

OneForm d_element(const SuperElement& g) {
    const AlgebraSignature& sig = g.signature();
    OneForm r(sig);
    for (const auto& [m, c] : g.terms()) {
        SuperElement t = SuperElement::monomial(sig, m, c);
        int sign = m.parity() ? 1 : -1; // -(-1)^{|g|}
        r.f0 += t.d_even();
        for (int a = 0; a < sig.N; ++a) {
            SuperElement d = t.d_odd(a);
            r.f[a] += sign > 0 ? d : -d;
        }
    }
    return r;
}

OneForm pullback_form(const SuperMap& phi, const OneForm& omega) {
    phi.sig.check_same(omega.sig);
    OneForm r = d_element(phi.F).scaled(substitute(omega.f0, phi));
    for (int a = 0; a < omega.sig.N; ++a)
        r = r + d_element(phi.phi[a]).scaled(substitute(omega.f[a], phi));
    return r;
}

std::optional<SuperElement> form_multiplier(const SuperMap& phi, const OneForm& omega) {
    OneForm p = pullback_form(phi, omega);
    if (!omega.f0.is_unit()) throw NotInvertible("form with non-unit dz coefficient");
    SuperElement mult = p.f0 * omega.f0.inverse();
    for (int a = 0; a < omega.sig.N; ++a)
        if (p.f[a] != mult * omega.f[a]) return std::nullopt;
    return mult;
}

std::optional<SuperElement> is_aut_omega(const SuperMap& phi) {
    return form_multiplier(phi, standard_omega(phi.sig));
}

OneForm lie_derivative(const VectorField& X, const OneForm& omega) {
    X.sig.check_same(omega.sig);
    auto px = X.parity();
    if (!px) throw std::invalid_argument("Lie derivative requires a homogeneous field");
    OneForm r(omega.sig);
    auto add_piece = [&](const SuperElement& coeff, const SuperElement& image, int slot) {
        // (X coeff) dx^b + (-1)^{|X||coeff|} coeff d(X x^b), termwise in coeff.
        SuperElement xc = apply(X, coeff);
        if (slot < 0)
            r.f0 += xc;
        else
            r.f[slot] += xc;
        OneForm dimg = d_element(image);
        for (const auto& [m, c] : coeff.terms()) {
            SuperElement t = SuperElement::monomial(omega.sig, m, c);
            bool flip = (*px & m.parity()) != 0;
            OneForm piece = dimg.scaled(t);
            r.f0 += flip ? -piece.f0 : piece.f0;
            for (int a = 0; a < omega.sig.N; ++a) r.f[a] += flip ? -piece.f[a] : piece.f[a];
        }
    };
    add_piece(omega.f0, X.a, -1);
    for (int b = 0; b < omega.sig.N; ++b) add_piece(omega.f[b], X.b[b], b);
    return r;
}

std::optional<SuperElement> k_multiplier(const VectorField& X) {
    OneForm w = standard_omega(X.sig);
    OneForm l = lie_derivative(X, w);
    SuperElement mult = l.f0;
    for (int a = 0; a < X.sig.N; ++a)
        if (l.f[a] != mult * w.f[a]) return std::nullopt;
    return mult;
}

} // namespace supercurve
