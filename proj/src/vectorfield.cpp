#include "supercurve/vectorfield.hpp"

#include <sstream>

namespace supercurve {

VectorField::VectorField(AlgebraSignature s, SuperElement a_, std::vector<SuperElement> b_)
    : sig(std::move(s)), a(std::move(a_)), b(std::move(b_)) {
    sig.check_same(a.signature());
    if (static_cast<int>(b.size()) != sig.N)
        throw std::invalid_argument("field must provide one coefficient per odd coordinate");
    for (const auto& bi : b) sig.check_same(bi.signature());
}

bool VectorField::is_zero() const {
    if (!a.is_zero()) return false;
    for (const auto& bi : b)
        if (!bi.is_zero()) return false;
    return true;
}

std::optional<int> VectorField::parity() const {
    std::optional<int> p;
    auto merge = [&p](std::optional<int> q) -> bool {
        if (!q) return false;
        if (!p) p = q;
        return *p == *q;
    };
    if (!a.is_zero() && !merge(a.parity())) return std::nullopt;
    for (const auto& bi : b) {
        if (bi.is_zero()) continue;
        auto q = bi.parity();
        if (!q) return std::nullopt;
        if (!merge((*q + 1) & 1)) return std::nullopt;
    }
    return p ? p : std::optional<int>(0);
}

VectorField VectorField::operator-() const {
    VectorField r = *this;
    r.a = -r.a;
    for (auto& bi : r.b) bi = -bi;
    return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
    sig.check_same(o.sig);
    VectorField r = *this;
    r.a += o.a;
    for (int i = 0; i < sig.N; ++i) r.b[i] += o.b[i];
    return r;
}

VectorField VectorField::operator*(const GaussianRational& c) const {
    VectorField r = *this;
    r.a = r.a * c;
    for (auto& bi : r.b) bi = bi * c;
    return r;
}

std::string VectorField::str() const {
    std::ostringstream out;
    bool first = true;
    auto piece = [&](const SuperElement& c, const std::string& dir) {
        if (c.is_zero()) return;
        if (!first) out << " + ";
        out << "(" << c.str() << ")*d" << dir;
        first = false;
    };
    piece(a, sig.even_name);
    for (int i = 0; i < sig.N; ++i) piece(b[i], sig.generator_name(i));
    if (first) out << "0";
    return out.str();
}

SuperElement apply(const VectorField& X, const SuperElement& f) {
    X.sig.check_same(f.signature());
    SuperElement r = X.a * f.d_even();
    for (int i = 0; i < X.sig.N; ++i) r += X.b[i] * f.d_odd(i);
    return r;
}

VectorField bracket(const VectorField& X, const VectorField& Y) {
    X.sig.check_same(Y.sig);
    auto px = X.parity(), py = Y.parity();
    if (!px || !py) throw std::invalid_argument("bracket requires homogeneous fields");
    bool minus = ((*px * *py) & 1) == 0;
    auto comb = [&](const SuperElement& ya, const SuperElement& xa) {
        SuperElement t = apply(X, ya);
        SuperElement u = apply(Y, xa);
        return minus ? t - u : t + u;
    };
    VectorField r(X.sig);
    r.a = comb(Y.a, X.a);
    for (int i = 0; i < X.sig.N; ++i) r.b[i] = comb(Y.b[i], X.b[i]);
    return r;
}

SuperElement sdiv(const VectorField& X) {
    SuperElement r = X.a.d_even();
    for (int i = 0; i < X.sig.N; ++i) {
        // (-1)^{|b_i|} d_thi b_i, parity taken termwise.
        for (const auto& [m, c] : X.b[i].terms()) {
            SuperElement t = SuperElement::monomial(X.sig, m, c).d_odd(i);
            r += m.parity() ? -t : t;
        }
    }
    return r;
}

SuperElement sdiv_wrt(const VectorField& X, const SuperElement& f) {
    if (!f.is_unit()) throw NotInvertible("Berezin section coefficient is not a unit");
    return sdiv(X) + apply(X, f) * f.inverse();
}

bool is_pro_nilpotent(const VectorField& X) {
    for (const auto& [m, c] : X.a.terms()) {
        (void)c;
        if (m.mask == 0 && m.e < 2) return false;
    }
    for (int i = 0; i < X.sig.N; ++i)
        for (const auto& [m, c] : X.b[i].terms()) {
            (void)c;
            bool single_theta = std::popcount(m.mask) == 1 &&
                                X.sig.is_theta(std::countr_zero(m.mask));
            if (single_theta && m.e < 1) return false;
            if (m.mask == 0) return false; // even coefficient on d/dth: wrong parity anyway
        }
    return true;
}

SuperMap exp_field(const VectorField& X) {
    if (!X.a.is_even()) throw std::invalid_argument("exp requires an even field");
    for (const auto& bi : X.b)
        if (!bi.is_odd()) throw std::invalid_argument("exp requires an even field");
    if (!is_pro_nilpotent(X)) throw std::domain_error("field is not pro-nilpotent");
    const AlgebraSignature& sig = X.sig;
    int cap = (sig.exact_polynomial_mode ? 64 : sig.e_max - sig.e_min) + sig.odd_count() + 8;
    auto exp_on = [&](SuperElement cur) {
        SuperElement acc = cur;
        Rational kfac = 1;
        for (int k = 1;; ++k) {
            cur = apply(X, cur);
            if (cur.is_zero()) break;
            if (k > cap) throw std::domain_error("exp series failed to terminate (degree bound exceeded)");
            kfac *= k;
            acc += cur * GaussianRational(Rational(1) / kfac);
        }
        return acc;
    };
    SuperElement F = exp_on(SuperElement::even_var(sig));
    std::vector<SuperElement> phi;
    for (int i = 0; i < sig.N; ++i) phi.push_back(exp_on(SuperElement::gen(sig, i)));
    return SuperMap(sig, std::move(F), std::move(phi));
}

VectorField log_map(const SuperMap& phi) {
    if (!phi.is_unipotent()) throw std::domain_error("log of a non-unipotent map");
    const AlgebraSignature& sig = phi.sig;
    int cap = (sig.exact_polynomial_mode ? 64 : sig.e_max - sig.e_min) + sig.odd_count() + 8;
    auto log_on = [&](const SuperElement& coord) {
        SuperElement d = substitute(coord, phi) - coord;
        SuperElement acc = d;
        for (int k = 2;; ++k) {
            d = substitute(d, phi) - d;
            if (d.is_zero()) break;
            if (k > cap) throw std::domain_error("log series failed to terminate");
            GaussianRational c(Rational(1, k));
            acc += d * ((k & 1) ? c : -c);
        }
        return acc;
    };
    VectorField X(sig);
    X.a = log_on(SuperElement::even_var(sig));
    for (int i = 0; i < sig.N; ++i) X.b[i] = log_on(SuperElement::gen(sig, i));
    return X;
}

Decomposition decompose(const SuperMap& phi) {
    SuperMap jet = phi.jet();
    SuperMap jet_inv = jet_inverse(jet);
    SuperMap u = compose(phi, jet_inv);
    if (!u.is_unipotent())
        throw std::domain_error("decomposition failed: unipotent factor is not unipotent");
    return Decomposition{std::move(jet), log_map(u)};
}

SuperMap inverse_map(const SuperMap& phi) {
    Decomposition d = decompose(phi);
    return compose(jet_inverse(d.jet), exp_field(-d.X));
}

VectorField field_L(const AlgebraSignature& sig, int m) {
    VectorField X(sig);
    X.a = SuperElement::z_pow(sig, m + 1, GaussianRational(-1));
    for (int i = 0; i < sig.N; ++i)
        X.b[i] = SuperElement::z_pow(sig, m, GaussianRational(Rational(-(m + 1), 2))) *
                 SuperElement::gen(sig, i);
    return X;
}

static void need_n2(const AlgebraSignature& sig) {
    if (sig.N < 2) throw std::invalid_argument("generator needs N >= 2");
}

VectorField field_J0(const AlgebraSignature& sig, int m) {
    need_n2(sig);
    VectorField X(sig);
    X.b[0] = SuperElement::z_pow(sig, m) * SuperElement::gen(sig, 0);
    X.b[1] = -(SuperElement::z_pow(sig, m) * SuperElement::gen(sig, 1));
    return X;
}

VectorField field_J1(const AlgebraSignature& sig, int m) {
    need_n2(sig);
    VectorField X(sig);
    X.b[1] = SuperElement::z_pow(sig, m) * SuperElement::gen(sig, 0);
    return X;
}

VectorField field_J2(const AlgebraSignature& sig, int m) {
    need_n2(sig);
    VectorField X(sig);
    X.b[0] = SuperElement::z_pow(sig, m) * SuperElement::gen(sig, 1);
    return X;
}

VectorField field_K(const AlgebraSignature& sig) {
    need_n2(sig);
    VectorField X(sig);
    X.a = SuperElement::gen(sig, 0) * SuperElement::gen(sig, 1);
    return X;
}

VectorField field_G(const AlgebraSignature& sig, int e, int i) {
    if (i < 1 || i > sig.N) throw std::invalid_argument("odd index out of range");
    VectorField X(sig);
    X.b[i - 1] = SuperElement::z_pow(sig, e, GaussianRational(-1));
    return X;
}

VectorField field_H(const AlgebraSignature& sig, int e, int i) {
    need_n2(sig);
    if (i < 1 || i > sig.N) throw std::invalid_argument("odd index out of range");
    VectorField X(sig);
    SuperElement ti = SuperElement::gen(sig, i - 1);
    X.a = SuperElement::z_pow(sig, e) * ti;
    if (e != 0)
        for (int j = 0; j < sig.N; ++j)
            X.b[j] = SuperElement::z_pow(sig, e - 1, GaussianRational(e)) * ti *
                     SuperElement::gen(sig, j);
    return X;
}

VectorField contact_D(const AlgebraSignature& sig, int i) {
    if (i < 1 || i > sig.N) throw std::invalid_argument("odd index out of range");
    VectorField X(sig);
    X.a = SuperElement::gen(sig, i - 1);
    X.b[i - 1] = SuperElement::one(sig);
    return X;
}

VectorField contact_field(const SuperElement& f) {
    const AlgebraSignature& sig = f.signature();
    auto p = f.parity();
    if (!p) throw std::invalid_argument("contact field requires homogeneous f");
    GaussianRational half(Rational(1, 2));
    if (*p == 1) half = -half;
    VectorField X(sig);
    X.a = f;
    for (int i = 0; i < sig.N; ++i) {
        SuperElement dif = apply(contact_D(sig, i + 1), f);
        X.a += dif * SuperElement::gen(sig, i) * half;
        X.b[i] = dif * half;
    }
    return X;
}

} // namespace supercurve
