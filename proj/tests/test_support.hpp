#pragma once

#include <random>

#include "supercurve/curves.hpp"

namespace supercurve::testing {

/// Deterministic generators for property tests.  Everything is built to
/// keep intermediate results exactly representable in the default window.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng);
    }
    bool coin() { return uniform(0, 1) == 1; }

    GaussianRational small_rational(bool allow_zero = true) {
        int num = uniform(allow_zero ? -3 : 1, 3);
        if (!allow_zero && num == 0) num = 1;
        int den = uniform(1, 3);
        GaussianRational r = GaussianRational::of(num, den);
        if (coin()) r = r * GaussianRational::i();
        return r;
    }
    GaussianRational nonzero_rational() {
        GaussianRational r = small_rational(false);
        return r.is_zero() ? GaussianRational(1) : r;
    }

    /// Random element with bounded support; optional parity restriction.
    SuperElement element(const AlgebraSignature& sig, int max_terms, int deg_lo, int deg_hi,
                         std::optional<int> parity = std::nullopt) {
        SuperElement r(sig);
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            int e = uniform(deg_lo, deg_hi);
            std::uint32_t mask = 0;
            for (int g = 0; g < sig.odd_count(); ++g)
                if (coin() && coin()) mask |= 1u << g;
            if (parity && (std::popcount(mask) & 1) != *parity) {
                int g = uniform(0, sig.odd_count() - 1);
                mask ^= 1u << g;
                if ((std::popcount(mask) & 1) != *parity) continue;
            }
            r += SuperElement::monomial(sig, Monomial(e, mask), small_rational(false));
        }
        return r;
    }

    /// Homogeneous field with polynomial coefficients.
    VectorField field(const AlgebraSignature& sig, int parity, int deg_lo = 0, int deg_hi = 2) {
        VectorField x(sig);
        x.a = element(sig, 2, deg_lo, deg_hi, parity);
        for (int i = 0; i < sig.N; ++i)
            x.b[i] = element(sig, 2, deg_lo, deg_hi, (parity + 1) & 1);
        return x;
    }

    /// Divergence-free field: random combination of the generator families
    /// (one parity).
    VectorField s1n_field(const AlgebraSignature& sig, int parity) {
        VectorField x(sig);
        auto acc = [&](const VectorField& g) { x = x + g * small_rational(false); };
        if (parity == 0) {
            acc(field_L(sig, uniform(-1, 2)));
            acc(field_J0(sig, uniform(-1, 2)));
            acc(field_J1(sig, uniform(-1, 2)));
            acc(field_J2(sig, uniform(-1, 2)));
            if (coin()) acc(field_K(sig));
        } else {
            acc(field_G(sig, uniform(-1, 2), uniform(1, 2)));
            acc(field_H(sig, uniform(-1, 2), uniform(1, 2)));
        }
        return x;
    }

    /// Even pro-nilpotent field (non-negative degrees keep exp exact in the
    /// default window).
    VectorField pro_nilpotent_field(const AlgebraSignature& sig) {
        VectorField x(sig);
        x.a = SuperElement::z_pow(sig, uniform(2, 3), small_rational(false));
        if (sig.N >= 2 && coin())
            x.a += SuperElement::z_pow(sig, uniform(0, 1), small_rational(false)) *
                   SuperElement::gen(sig, 0) * SuperElement::gen(sig, 1);
        for (int i = 0; i < sig.N; ++i) {
            if (coin())
                x.b[i] = SuperElement::z_pow(sig, uniform(1, 2), small_rational(false)) *
                         SuperElement::gen(sig, uniform(0, sig.N - 1));
            if (sig.M > 0 && coin())
                x.b[i] += SuperElement::z_pow(sig, uniform(0, 1), small_rational(false)) *
                          SuperElement::gen(sig, sig.N);
        }
        return x;
    }

    /// Even pro-nilpotent S(2) field (N=2): z^{m+1} L-parts and positive J
    /// modes, plus eta-dressed shifts; excludes the K direction.
    VectorField s2_plus_field(const AlgebraSignature& sig) {
        VectorField x(sig);
        auto acc = [&](const VectorField& g) { x = x + g * small_rational(false); };
        acc(field_L(sig, uniform(1, 2)));
        acc(field_J0(sig, uniform(1, 2)));
        acc(field_J1(sig, uniform(1, 2)));
        acc(field_J2(sig, uniform(1, 2)));
        if (sig.M > 0) {
            VectorField g(sig);
            g.b[uniform(0, 1)] =
                SuperElement::z_pow(sig, uniform(0, 1), small_rational(false)) *
                SuperElement::gen(sig, sig.N);
            acc(g);
        }
        return x;
    }

    /// Affine Berezinian-preserving jet: z -> az+b, theta -> A theta + eta
    /// shifts, det A = a.
    SuperMap aut0_delta_map(const AlgebraSignature& sig) {
        GaussianRational a11 = nonzero_rational();
        GaussianRational a22 = nonzero_rational();
        GaussianRational a12 = small_rational();
        GaussianRational det = a11 * a22 - a12 * GaussianRational(0);
        SuperElement F = SuperElement::z_pow(sig, 1, det) +
                         SuperElement::scalar(sig, small_rational());
        SuperElement p1 = SuperElement::gen(sig, 0) * a11 + SuperElement::gen(sig, 1) * a12;
        SuperElement p2 = SuperElement::gen(sig, 1) * a22;
        if (sig.M > 0) {
            if (coin()) p1 += SuperElement::gen(sig, sig.N) * small_rational();
            if (coin()) p2 += SuperElement::gen(sig, sig.N) * small_rational();
        }
        return SuperMap(sig, F, {p1, p2});
    }

    /// Random element of Aut^Delta: exp(S(2)+) composed with an affine
    /// Berezinian-preserving jet.
    SuperMap aut_Delta_map(const AlgebraSignature& sig) {
        return compose(exp_field(s2_plus_field(sig)), aut0_delta_map(sig));
    }

    /// Random element of Aut^delta: Aut^Delta times exp(lambda K).
    SuperMap aut_delta_map(const AlgebraSignature& sig) {
        SuperMap m = aut_Delta_map(sig);
        VectorField k = field_K(sig) * small_rational();
        return compose(exp_field(k), m);
    }

    /// General invertible map (not Berezinian-preserving in general).
    SuperMap aut_map(const AlgebraSignature& sig) {
        SuperMap m = aut_delta_map(sig);
        GaussianRational c = nonzero_rational();
        SuperElement F = m.F * c; // rescale z only: generally Ber != 1
        return SuperMap(sig, F, m.phi);
    }
};

} // namespace supercurve::testing
