#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace supercurve;
using testing::Rng;

namespace {
const AlgebraSignature sig = AlgebraSignature::windowed(2, 1, -8, 8);
SuperElement th(int i) { return SuperElement::gen(sig, i - 1); }
SuperElement eta() { return SuperElement::gen(sig, 2); }
SuperElement z() { return SuperElement::even_var(sig); }
SuperElement c(long n) { return SuperElement::scalar(sig, GaussianRational(n)); }
} // namespace

TEST_CASE("koszul sign and odd squares") {
    CHECK(th(1) * th(2) == -(th(2) * th(1)));
    CHECK((th(1) * th(1)).is_zero());
    CHECK((c(1) + th(1) * th(2)) * (c(1) - th(1) * th(2)) == c(1));
}

TEST_CASE("square with nilpotent cross term") {
    SuperElement x = z() + th(1) * eta();
    SuperElement expect = z().pow(2) + z() * th(1) * eta() * GaussianRational(2);
    CHECK(x * x == expect);
}

TEST_CASE("even derivative") {
    CHECK(z().pow(3).d_even() == z().pow(2) * GaussianRational(3));
    CHECK(c(5).d_even().is_zero());
}

TEST_CASE("left odd derivative signs") {
    SuperElement t12 = th(1) * th(2);
    CHECK(t12.d_odd(0) == th(2));
    CHECK(t12.d_odd(1) == -th(1));
    CHECK_THROWS_AS((z() + th(1)).d_odd(2), std::invalid_argument);
}

TEST_CASE("derivative convention fixed by the anticommutator") {
    // {d_th1, th1*.} = id on random elements.
    Rng rng(101);
    for (int it = 0; it < 50; ++it) {
        SuperElement f = rng.element(sig, 4, -2, 2);
        SuperElement lhs = (th(1) * f).d_odd(0) + th(1) * f.d_odd(0);
        CHECK(lhs == f);
    }
}

TEST_CASE("reduce") {
    SuperElement f = z() + c(7) + th(1) * th(2);
    CHECK(f.reduce() == z() + c(7));
    CHECK((th(1) * eta()).reduce().is_zero());
    CHECK(c(5).reduce() == c(5));
    CHECK(f.reduce().reduce() == f.reduce());
}

TEST_CASE("supercommutativity on random homogeneous pairs") {
    Rng rng(102);
    for (int it = 0; it < 100; ++it) {
        int pa = rng.uniform(0, 1), pb = rng.uniform(0, 1);
        SuperElement a = rng.element(sig, 3, -2, 2, pa);
        SuperElement b = rng.element(sig, 3, -2, 2, pb);
        SuperElement rhs = b * a;
        if (pa == 1 && pb == 1) rhs = -rhs;
        CHECK(a * b == rhs);
    }
}

TEST_CASE("associativity and distributivity") {
    Rng rng(103);
    for (int it = 0; it < 60; ++it) {
        SuperElement a = rng.element(sig, 3, -2, 2);
        SuperElement b = rng.element(sig, 3, -2, 2);
        SuperElement cc = rng.element(sig, 3, -2, 2);
        CHECK((a * b) * cc == a * (b * cc));
        CHECK(a * (b + cc) == a * b + a * cc);
    }
}

TEST_CASE("Leibniz rule for every generator derivative") {
    Rng rng(104);
    for (int it = 0; it < 60; ++it) {
        int pa = rng.uniform(0, 1);
        SuperElement a = rng.element(sig, 3, -2, 2, pa);
        SuperElement b = rng.element(sig, 3, -2, 2, rng.uniform(0, 1));
        CHECK((a * b).d_even() == a.d_even() * b + a * b.d_even());
        for (int g = 0; g < 2; ++g) {
            SuperElement lhs = (a * b).d_odd(g);
            SuperElement rhs = a.d_odd(g) * b + (pa ? -(a * b.d_odd(g)) : a * b.d_odd(g));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("nilpotency bound") {
    Rng rng(105);
    for (int it = 0; it < 30; ++it) {
        SuperElement n = rng.element(sig, 4, -1, 1).nilpotent_part();
        CHECK(n.pow(sig.odd_count() + 1).is_zero());
    }
}

TEST_CASE("window truncation is sticky") {
    SuperElement big = z().pow(5);
    SuperElement p = big * big; // z^10 leaves [-8,8]
    CHECK(p.is_zero());
    CHECK(p.truncated());
    CHECK((p + c(1)).truncated());
}

TEST_CASE("exact polynomial mode rejects negative powers") {
    auto ex = AlgebraSignature::exact_poly(2, 0);
    SuperElement u = SuperElement::even_var(ex) + SuperElement::one(ex);
    CHECK((u * u) == SuperElement::even_var(ex) * SuperElement::even_var(ex) +
                         SuperElement::even_var(ex) * GaussianRational(2) + SuperElement::one(ex));
    CHECK_THROWS_AS(SuperElement::z_pow(ex, -1), std::domain_error);
    // Degrees may grow without truncation.
    SuperElement p = SuperElement::even_var(ex).pow(40);
    CHECK_FALSE(p.truncated());
}

TEST_CASE("inverse: monomial units are exact") {
    SuperElement x = z().pow(2) * GaussianRational::of(3, 2);
    SuperElement xin = x.inverse();
    CHECK_FALSE(xin.truncated());
    CHECK(x * xin == c(1));
}

TEST_CASE("inverse: nilpotent correction terminates") {
    SuperElement x = z() + z() * th(1) * th(2) + th(1) * eta();
    SuperElement xin = x.inverse();
    CHECK(x * xin == c(1));
    CHECK_FALSE(xin.truncated());
}

TEST_CASE("inverse of a non-unit fails") {
    CHECK_THROWS_AS((th(1) * th(2)).inverse(), NotInvertible);
}

TEST_CASE("geometric inverse truncates with flag") {
    SuperElement x = c(1) + z();
    SuperElement xin = x.inverse();
    CHECK(xin.truncated());
    // In-window part of the product is exact: 1 plus the dropped tail.
    SuperElement prod = x * xin;
    CHECK(prod.coefficient_of_mask(0).constant_term() == GaussianRational(1));
}

TEST_CASE("exp of nilpotent element") {
    SuperElement x = th(1) * th(2) * GaussianRational(3);
    CHECK(x.exp() == c(1) + x);
}

TEST_CASE("integration") {
    CHECK(z().pow(3).integrate_even() == z().pow(4) * GaussianRational::of(1, 4));
    CHECK_THROWS_AS(SuperElement::z_pow(sig, -1).integrate_even(), std::domain_error);
}

TEST_CASE("canonical string") {
    SuperElement f = z() + th(1) * th(2) * GaussianRational::of(-1, 2) +
                     SuperElement::z_pow(sig, -1, GaussianRational::i());
    CHECK(f.str() == "i*z^-1 + z - 1/2*th1*th2");
}
