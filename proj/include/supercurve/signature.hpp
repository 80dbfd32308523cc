#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace supercurve {

struct SignatureMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Shape of the coordinate ring: one even variable (z or t), N odd
/// coordinates th1..thN, M odd base parameters eta1..etaM, and the
/// z-exponent window.  Elements interoperate only under equal signatures.
///
/// In exact_polynomial_mode no truncation happens and negative exponents
/// are an error; e_max is not enforced.
struct AlgebraSignature {
    std::string even_name = "z";
    int N = 0;
    int M = 0;
    int e_min = 0;
    int e_max = 0;
    bool exact_polynomial_mode = false;

    AlgebraSignature() = default;
    AlgebraSignature(std::string name, int n, int m, int lo, int hi, bool exact = false)
        : even_name(std::move(name)), N(n), M(m), e_min(lo), e_max(hi),
          exact_polynomial_mode(exact) {
        if (N < 0 || M < 0) throw std::invalid_argument("negative odd rank");
        if (N + M > 30) throw std::invalid_argument("too many odd generators");
        if (exact_polynomial_mode) e_min = 0;
        if (e_min > 0 || e_max < 0) throw std::invalid_argument("window must contain 0");
    }

    static AlgebraSignature windowed(int n, int m, int lo, int hi, std::string name = "z") {
        return AlgebraSignature(std::move(name), n, m, lo, hi, false);
    }
    static AlgebraSignature exact_poly(int n, int m, std::string name = "z") {
        return AlgebraSignature(std::move(name), n, m, 0, 0, true);
    }

    int odd_count() const { return N + M; }
    bool is_theta(int g) const { return g >= 0 && g < N; }
    bool is_eta(int g) const { return g >= N && g < N + M; }

    std::string generator_name(int g) const {
        if (is_theta(g)) return "th" + std::to_string(g + 1);
        if (is_eta(g)) return "eta" + std::to_string(g - N + 1);
        throw std::invalid_argument("bad generator index");
    }

    bool operator==(const AlgebraSignature& o) const {
        return even_name == o.even_name && N == o.N && M == o.M && e_min == o.e_min &&
               e_max == o.e_max && exact_polynomial_mode == o.exact_polynomial_mode;
    }
    bool operator!=(const AlgebraSignature& o) const { return !(*this == o); }

    void check_same(const AlgebraSignature& o) const {
        if (*this != o) throw SignatureMismatch("signature mismatch");
    }
};

/// z^e times an ordered square-free product of odd generators.  Bits
/// 0..N-1 of mask are th1..thN, bits N..N+M-1 are eta1..etaM; generator
/// order in the stored product is ascending bit index.
struct Monomial {
    int e = 0;
    std::uint32_t mask = 0;

    Monomial() = default;
    Monomial(int ee, std::uint32_t m) : e(ee), mask(m) {}

    int odd_degree() const { return std::popcount(mask); }
    int parity() const { return odd_degree() & 1; }

    bool operator<(const Monomial& o) const {
        if (e != o.e) return e < o.e;
        return mask < o.mask;
    }
    bool operator==(const Monomial& o) const { return e == o.e && mask == o.mask; }
};

/// Koszul sign for sorting the concatenation a*b into ascending order.
/// Returns 0 if the masks share a generator (square of an odd is zero),
/// otherwise +1/-1.
inline int koszul_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int crossings = 0;
    std::uint32_t bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        crossings += std::popcount(a >> (j + 1));
    }
    return (crossings & 1) ? -1 : 1;
}

} // namespace supercurve
