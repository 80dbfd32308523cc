#include "supercurve/curves.hpp"

namespace supercurve {

bool is_aut_Delta(const SuperMap& phi) {
    if (phi.sig.N != 2) throw std::invalid_argument("Aut^Delta test needs N = 2");
    if (!is_aut_delta(phi))
        throw BerezinianNotPreserved("map does not preserve the Berezinian");
    Decomposition d = decompose(phi);
    if (!is_aut_delta(d.jet)) return false;
    return classify(d.X).in_S2;
}

SuperElement extract_lambda(const SuperMap& phi) {
    if (phi.sig.N != 2) throw std::invalid_argument("lambda extraction needs N = 2");
    if (!is_aut_delta(phi))
        throw BerezinianNotPreserved("map does not preserve the Berezinian");
    Decomposition d = decompose(phi);
    SuperElement xz = apply(d.X, SuperElement::even_var(phi.sig));
    // X z = ... + lambda th1 th2 with lambda constant over the parameter
    // ring; z-dependence cannot occur for divergence-free X.
    SuperElement lambda(phi.sig);
    const std::uint32_t theta12 = 0b11;
    for (const auto& [m, c] : xz.terms()) {
        if ((m.mask & theta12) != theta12) continue;
        if (m.e != 0)
            throw std::logic_error("lambda is not constant: map is not Berezinian-preserving");
        lambda.add_term(Monomial(0, m.mask & ~theta12), c);
    }
    return lambda;
}

AlgebraSignature lifted_signature(const AlgebraSignature& sig) {
    return AlgebraSignature(sig.even_name, 2 * sig.N, sig.M, sig.e_min, sig.e_max,
                            sig.exact_polynomial_mode);
}

AlgebraSignature lowered_signature(const AlgebraSignature& sig) {
    if (sig.N % 2 != 0) throw std::invalid_argument("lowered signature needs even N");
    return AlgebraSignature(sig.even_name, sig.N / 2, sig.M, sig.e_min, sig.e_max,
                            sig.exact_polynomial_mode);
}

SuperElement embed_lifted(const SuperElement& x, const AlgebraSignature& to) {
    const AlgebraSignature& from = x.signature();
    std::vector<int> gen_map;
    for (int g = 0; g < from.N; ++g) gen_map.push_back(g);
    for (int g = 0; g < from.M; ++g) gen_map.push_back(to.N + g);
    return x.remap(to, gen_map);
}

namespace {

/// D_k = rho^k d_z + d_thk on the lifted ring.
SuperElement apply_dk(const SuperElement& g, int k) {
    const AlgebraSignature& sig = g.signature();
    int n = sig.N / 2;
    return SuperElement::gen(sig, n + k) * g.d_even() + g.d_odd(k);
}

} // namespace

SuperMap lift_closed_form_n2(const SuperMap& phi) {
    if (phi.sig.N != 2) throw std::invalid_argument("closed form is the n = 2 case");
    const AlgebraSignature up = lifted_signature(phi.sig);
    SuperElement F = embed_lifted(phi.F, up);
    std::vector<SuperElement> ph{embed_lifted(phi.phi[0], up), embed_lifted(phi.phi[1], up)};
    SuperElement ber = embed_lifted(berezinian(jacobian(phi)), up);
    SuperElement rho1 = SuperElement::gen(up, 2), rho2 = SuperElement::gen(up, 3);

    ElementMatrix a{{ph[0].d_odd(0), ph[1].d_odd(0)}, {ph[0].d_odd(1), ph[1].d_odd(1)}};
    ElementVector grad{F.d_odd(0), F.d_odd(1)};
    ElementVector eta = mat_apply(mat_inverse(a), grad);
    // Cofactor rows [d2 phi2, -d1 phi2; -d2 phi1, d1 phi1] applied to rho,
    // plus the rho1 rho2 column, all weighted by Ber(J phi).
    SuperElement e1 = ph[1].d_odd(1) * rho1 - ph[1].d_odd(0) * rho2 + ph[1].d_even() * rho1 * rho2;
    SuperElement e2 = -(ph[0].d_odd(1) * rho1) + ph[0].d_odd(0) * rho2 - ph[0].d_even() * rho1 * rho2;
    eta[0] += ber * e1;
    eta[1] += ber * e2;
    return SuperMap(up, F, {ph[0], ph[1], eta[0], eta[1]});
}

SuperMap lift(const SuperMap& phi) {
    const AlgebraSignature up = lifted_signature(phi.sig);
    const int n = phi.sig.N;
    SuperElement F = embed_lifted(phi.F, up);
    std::vector<SuperElement> images;
    for (const auto& p : phi.phi) images.push_back(embed_lifted(p, up));

    ElementMatrix m(n, ElementVector(n, SuperElement::zero(up)));
    ElementVector v(n, SuperElement::zero(up));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) m[k][j] = apply_dk(images[j], k);
        v[k] = apply_dk(F, k);
    }
    ElementVector eta = mat_apply(mat_inverse(m), v);
    std::vector<SuperElement> all = images;
    for (auto& e : eta) all.push_back(std::move(e));
    SuperMap lifted(up, F, std::move(all));
    if (n == 2 && lifted != lift_closed_form_n2(phi))
        throw std::logic_error("lift: matrix solve disagrees with the n=2 closed form");
    return lifted;
}

SuperMap alpha_map(const AlgebraSignature& sig) {
    if (sig.N % 2 != 0) throw std::invalid_argument("involution needs even odd rank");
    int n = sig.N / 2;
    SuperElement F = SuperElement::even_var(sig);
    std::vector<SuperElement> phi(sig.N, SuperElement::zero(sig));
    for (int i = 0; i < n; ++i) {
        F -= SuperElement::gen(sig, i) * SuperElement::gen(sig, n + i);
        phi[i] = SuperElement::gen(sig, n + i);
        phi[n + i] = SuperElement::gen(sig, i);
    }
    return SuperMap(sig, std::move(F), std::move(phi));
}

SuperMap ad_alpha(const SuperMap& psi) {
    if (psi.sig.N % 2 != 0) throw std::invalid_argument("wrong odd rank for the involution");
    SuperMap a = alpha_map(psi.sig);
    return compose(a, compose(psi, a));
}

std::optional<SuperMap> project_lifted(const SuperMap& psi) {
    if (psi.sig.N % 2 != 0) return std::nullopt;
    const int n = psi.sig.N / 2;
    const AlgebraSignature down = lowered_signature(psi.sig);
    std::uint32_t rho_bits = 0;
    for (int i = 0; i < n; ++i) rho_bits |= 1u << (n + i);
    auto rho_free = [&](const SuperElement& x) {
        for (const auto& [m, c] : x.terms()) {
            (void)c;
            if (m.mask & rho_bits) return false;
        }
        return true;
    };
    if (!rho_free(psi.F)) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (!rho_free(psi.phi[i])) return std::nullopt;

    std::vector<int> gen_map;
    for (int g = 0; g < n; ++g) gen_map.push_back(g);
    for (int g = 0; g < n; ++g) gen_map.push_back(-1); // rho: absent by now
    for (int g = 0; g < psi.sig.M; ++g) gen_map.push_back(n + g);
    auto lower = [&](const SuperElement& x) { return x.remap(down, gen_map); };

    SuperMap candidate(down, lower(psi.F), [&] {
        std::vector<SuperElement> p;
        for (int i = 0; i < n; ++i) p.push_back(lower(psi.phi[i]));
        return p;
    }());
    try {
        if (lift(candidate) != psi) return std::nullopt;
    } catch (const NotInvertible&) {
        return std::nullopt;
    }
    return candidate;
}

SuperMap dual(const SuperMap& phi) {
    if (!is_aut_Delta(phi))
        throw NotS2Generated("not Aut^Delta: unipotent factor leaves the derived algebra");
    auto projected = project_lifted(ad_alpha(lift(phi)));
    if (!projected) throw std::logic_error("dual of an Aut^Delta map must project");
    return *projected;
}

SuperMap compatible_coordinates(const BerezinSection& delta) {
    if (!delta.f.is_even()) throw std::invalid_argument("section coefficient must be even");
    if (!delta.f.is_unit()) throw NotInvertible("section coefficient must be a unit");
    SuperElement F = delta.f.integrate_even();
    std::vector<SuperElement> phi;
    for (int i = 0; i < delta.sig.N; ++i) phi.push_back(SuperElement::gen(delta.sig, i));
    return SuperMap(delta.sig, std::move(F), std::move(phi));
}

SuperMap split_transition(const SplitCurveData& data, const AlgebraSignature& sig) {
    if (sig.N != 2 || sig.exact_polynomial_mode)
        throw std::invalid_argument("split transition needs a windowed N = 2 signature");
    if (data.a + data.b != -2)
        throw std::invalid_argument("degree constraint a + b = -2 violated");
    if (data.u.is_zero()) throw std::invalid_argument("inversion coefficient must be nonzero");
    // Twists s = z^-2, s' = -u z^-2 make Ber(J) = d_z(u/z) / det = 1.
    SuperElement F = SuperElement::z_pow(sig, -1, data.u);
    SuperElement p1 = SuperElement::z_pow(sig, -data.a - 2) * SuperElement::gen(sig, 0);
    SuperElement p2 = SuperElement::z_pow(sig, -data.b - 2, -data.u) * SuperElement::gen(sig, 1);
    return SuperMap(sig, std::move(F), {std::move(p1), std::move(p2)});
}

SplitCurveData dual_split(const SplitCurveData& data) {
    return SplitCurveData{-data.a - 2, -data.b - 2, data.u};
}

} // namespace supercurve
