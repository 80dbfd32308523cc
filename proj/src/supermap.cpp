#include "supercurve/supermap.hpp"

#include <sstream>

#include "supercurve/linalg.hpp"

namespace supercurve {

SuperMap::SuperMap(AlgebraSignature s, SuperElement f, std::vector<SuperElement> p)
    : sig(std::move(s)), F(std::move(f)), phi(std::move(p)) {
    sig.check_same(F.signature());
    if (static_cast<int>(phi.size()) != sig.N)
        throw std::invalid_argument("map must provide one image per odd coordinate");
    if (!F.is_even()) throw std::invalid_argument("even image of z must be even");
    for (const auto& p_ : phi) {
        sig.check_same(p_.signature());
        if (!p_.is_odd()) throw std::invalid_argument("odd images must be odd");
    }
}

SuperMap SuperMap::identity(const AlgebraSignature& sig) {
    std::vector<SuperElement> phi;
    for (int i = 0; i < sig.N; ++i) phi.push_back(SuperElement::gen(sig, i));
    return SuperMap(sig, SuperElement::even_var(sig), std::move(phi));
}

std::vector<std::vector<SuperElement>> SuperMap::odd_linear_matrix() const {
    std::vector<std::vector<SuperElement>> a(sig.N,
        std::vector<SuperElement>(sig.N, SuperElement::zero(sig)));
    for (int i = 0; i < sig.N; ++i)
        for (int j = 0; j < sig.N; ++j) a[i][j] = phi[i].coefficient_of_mask(1u << j);
    return a;
}

SuperMap SuperMap::jet() const {
    auto a = odd_linear_matrix();
    std::vector<SuperElement> p;
    for (int i = 0; i < sig.N; ++i) {
        SuperElement s = SuperElement::zero(sig);
        for (int j = 0; j < sig.N; ++j) s += a[i][j] * SuperElement::gen(sig, j);
        p.push_back(std::move(s));
    }
    return SuperMap(sig, F.reduce(), std::move(p));
}

bool SuperMap::is_unipotent() const {
    if (F.reduce() != SuperElement::even_var(sig)) return false;
    auto a = odd_linear_matrix();
    for (int i = 0; i < sig.N; ++i)
        for (int j = 0; j < sig.N; ++j) {
            const SuperElement want = i == j ? SuperElement::one(sig) : SuperElement::zero(sig);
            if (a[i][j] != want) return false;
        }
    return true;
}

std::string SuperMap::str() const {
    std::ostringstream out;
    out << "(" << F.str();
    for (int i = 0; i < sig.N; ++i) out << (i ? ", " : " | ") << phi[i].str();
    out << ")";
    return out.str();
}

namespace {

struct ReducedShape {
    enum Kind { Affine, Inversion } kind = Affine;
    GaussianRational a, b; // a*z + b
    GaussianRational u;    // u * z^-1
};

ReducedShape classify_reduced(const SuperElement& red) {
    ReducedShape s;
    bool only_affine = true, only_inv = true;
    for (const auto& [m, c] : red.terms()) {
        if (m.e == 0) {
            s.b = c;
            only_inv = false;
        } else if (m.e == 1) {
            s.a = c;
            only_inv = false;
        } else if (m.e == -1) {
            s.u = c;
            only_affine = false;
        } else {
            only_affine = only_inv = false;
        }
    }
    if (only_affine) {
        s.kind = ReducedShape::Affine;
        return s;
    }
    if (only_inv && red.terms().size() == 1) {
        s.kind = ReducedShape::Inversion;
        return s;
    }
    throw NotSupported("unsupported reduced composition shape: " + red.str());
}

GaussianRational binomial(int e, int k) {
    GaussianRational c(1);
    Rational kfac = 1;
    for (int i = 0; i < k; ++i) {
        c *= GaussianRational(Rational(e - i));
        kfac *= (i + 1);
    }
    return c * GaussianRational(Rational(1) / kfac);
}

GaussianRational qpow(const GaussianRational& x, int e) {
    if (e < 0) return qpow(x.inverse(), -e);
    GaussianRational r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

/// Image of z^e under the reduced even part.
SuperElement eval_zpow(const AlgebraSignature& sig, const ReducedShape& s, int e) {
    if (s.kind == ReducedShape::Inversion) {
        return SuperElement::z_pow(sig, -e, qpow(s.u, e));
    }
    if (e >= 0) {
        SuperElement r(sig);
        if (s.a.is_zero()) {
            r.add_term(Monomial(0, 0), qpow(s.b, e));
            return r;
        }
        for (int k = 0; k <= e; ++k)
            r.add_term(Monomial(k, 0), binomial(e, k) * qpow(s.a, k) * qpow(s.b, e - k));
        return r;
    }
    // Negative powers of an affine image.
    if (s.b.is_zero()) {
        if (s.a.is_zero()) throw NotInvertible("reduced even image is zero");
        return SuperElement::z_pow(sig, e, qpow(s.a, e));
    }
    if (s.a.is_zero()) return SuperElement::scalar(sig, qpow(s.b, e));
    if (sig.exact_polynomial_mode)
        throw std::domain_error("negative power of affine image in exact polynomial mode");
    // (b + a z)^e expanded at z = 0, truncated to the window.
    SuperElement r(sig);
    for (int k = 0; k <= sig.e_max; ++k)
        r.add_term(Monomial(k, 0), binomial(e, k) * qpow(s.a, k) * qpow(s.b, e - k));
    return r.with_truncated_flag(true);
}

/// g(F_red) for g a pure-z element.
SuperElement eval_reduced(const SuperElement& g, const ReducedShape& s) {
    SuperElement r(g.signature());
    for (const auto& [m, c] : g.terms()) r += eval_zpow(g.signature(), s, m.e) * c;
    return r.with_truncated_flag(r.truncated() || g.truncated());
}

} // namespace

SuperElement substitute(const SuperElement& f, const SuperMap& target) {
    f.signature().check_same(target.sig);
    const AlgebraSignature& sig = f.signature();
    const SuperElement red = target.F.reduce();
    const SuperElement nu = target.F.nilpotent_part();
    const ReducedShape shape = classify_reduced(red);

    std::vector<SuperElement> images;
    for (int g = 0; g < sig.odd_count(); ++g)
        images.push_back(sig.is_theta(g) ? target.phi[g] : SuperElement::gen(sig, g));

    // Collect coefficient functions per odd monomial.
    std::map<std::uint32_t, SuperElement> by_mask;
    for (const auto& [m, c] : f.terms()) {
        auto it = by_mask.find(m.mask);
        if (it == by_mask.end()) it = by_mask.emplace(m.mask, SuperElement(sig)).first;
        it->second.add_term(Monomial(m.e, 0), c);
    }

    SuperElement out(sig);
    bool flag = f.truncated() || target.F.truncated();
    for (const auto& [mask, g0] : by_mask) {
        // Taylor sum g(F_red + nu) = sum_k g^(k)(F_red) nu^k / k!.
        SuperElement value(sig);
        SuperElement gk = g0;
        SuperElement nu_pow = SuperElement::one(sig);
        Rational kfac = 1;
        for (int k = 0;; ++k) {
            if (k > 0) {
                gk = gk.d_even();
                nu_pow *= nu;
                kfac *= k;
                if (nu_pow.is_zero() || gk.is_zero()) break;
            }
            value += eval_reduced(gk, shape) * nu_pow * GaussianRational(Rational(1) / kfac);
        }
        SuperElement img = SuperElement::one(sig);
        std::uint32_t mm = mask;
        while (mm) {
            int g = std::countr_zero(mm);
            mm &= mm - 1;
            img *= images[g];
            flag = flag || images[g].truncated();
        }
        out += value * img;
        flag = flag || value.truncated();
    }
    return out.with_truncated_flag(out.truncated() || flag);
}

SuperMap compose(const SuperMap& P, const SuperMap& Q) {
    P.sig.check_same(Q.sig);
    std::vector<SuperElement> phi;
    for (int i = 0; i < P.sig.N; ++i) phi.push_back(substitute(P.phi[i], Q));
    return SuperMap(P.sig, substitute(P.F, Q), std::move(phi));
}

SuperMap jet_inverse(const SuperMap& jet) {
    const AlgebraSignature& sig = jet.sig;
    const SuperElement red = jet.reduced_even();
    const ReducedShape s = classify_reduced(red);
    SuperElement finv(sig);
    if (s.kind == ReducedShape::Inversion) {
        finv = SuperElement::z_pow(sig, -1, s.u);
    } else {
        if (s.a.is_zero()) throw NotInvertible("non-invertible linear part");
        finv = SuperElement::z_pow(sig, 1, s.a.inverse()) +
               SuperElement::scalar(sig, -s.b / s.a);
    }
    std::vector<SuperElement> id_phi;
    for (int i = 0; i < sig.N; ++i) id_phi.push_back(SuperElement::gen(sig, i));
    SuperMap even_inv(sig, finv, id_phi);

    auto a = jet.odd_linear_matrix();
    auto a_inv = mat_inverse(a);
    std::vector<SuperElement> phi;
    for (int i = 0; i < sig.N; ++i) {
        SuperElement p(sig);
        for (int j = 0; j < sig.N; ++j)
            p += substitute(a_inv[i][j], even_inv) * SuperElement::gen(sig, j);
        phi.push_back(std::move(p));
    }
    return SuperMap(sig, finv, std::move(phi));
}

} // namespace supercurve
