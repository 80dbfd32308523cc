#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supercurve/rational.hpp"
#include "supercurve/signature.hpp"

namespace supercurve {

struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact element of Lambda[eta1..etaM] (x) k[z,z^-1]_window (x) Lambda[th1..thN].
///
/// Terms map sorted monomials to nonzero Q(i) coefficients.  Products and
/// other operations drop z-exponents outside the window and record the loss
/// in the sticky truncated flag; in exact polynomial mode nothing is ever
/// dropped and negative exponents are rejected.
class SuperElement {
public:
    SuperElement() = default;
    explicit SuperElement(AlgebraSignature sig) : sig_(std::move(sig)) {}

    static SuperElement scalar(const AlgebraSignature& sig, GaussianRational c);
    static SuperElement zero(const AlgebraSignature& sig) { return SuperElement(sig); }
    static SuperElement one(const AlgebraSignature& sig) { return scalar(sig, GaussianRational(1)); }
    static SuperElement z_pow(const AlgebraSignature& sig, int e,
                              GaussianRational c = GaussianRational(1));
    /// Odd generator by global index (0..N+M-1; thetas first, then etas).
    static SuperElement gen(const AlgebraSignature& sig, int g);
    static SuperElement even_var(const AlgebraSignature& sig) { return z_pow(sig, 1); }
    static SuperElement monomial(const AlgebraSignature& sig, Monomial m,
                                 GaussianRational c = GaussianRational(1));

    const AlgebraSignature& signature() const { return sig_; }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
    bool truncated() const { return truncated_; }
    bool is_zero() const { return terms_.empty(); }

    SuperElement operator-() const;
    SuperElement operator+(const SuperElement& o) const;
    SuperElement operator-(const SuperElement& o) const;
    SuperElement operator*(const SuperElement& o) const;
    SuperElement operator*(const GaussianRational& c) const;
    SuperElement& operator+=(const SuperElement& o) { *this = *this + o; return *this; }
    SuperElement& operator-=(const SuperElement& o) { *this = *this - o; return *this; }
    SuperElement& operator*=(const SuperElement& o) { *this = *this * o; return *this; }

    /// Structural equality of terms (the truncated flag is bookkeeping, not value).
    bool operator==(const SuperElement& o) const {
        return sig_ == o.sig_ && terms_ == o.terms_;
    }
    bool operator!=(const SuperElement& o) const { return !(*this == o); }

    SuperElement pow(int k) const;

    /// d/dz (formal Laurent derivative).
    SuperElement d_even() const;
    /// Left derivative with respect to odd coordinate th(g+1), 0 <= g < N.
    /// Eta parameters are constants of the ring: g >= N is an error.
    SuperElement d_odd(int g) const;

    /// All odd generators (thetas and etas) set to zero.
    SuperElement reduce() const;

    /// Parity if homogeneous (0 even, 1 odd); nullopt otherwise.  Zero is
    /// homogeneous of either parity.
    std::optional<int> parity() const;
    bool is_even() const { return is_zero() || parity() == 0; }
    bool is_odd() const { return is_zero() || parity() == 1; }

    /// True when the reduced part vanishes.
    bool is_nilpotent() const { return reduce().is_zero(); }
    /// True when the reduced part is invertible (nonzero Laurent part; a
    /// nonzero constant in exact polynomial mode).
    bool is_unit() const;

    SuperElement inverse() const;
    SuperElement operator/(const SuperElement& o) const { return *this * o.inverse(); }

    /// Sum x^k/k!; requires the series to terminate (nilpotent or window
    /// truncation), errors past the iteration cap.
    SuperElement exp() const;

    /// Antiderivative in z with zero constant term; errors on a z^-1 term.
    SuperElement integrate_even() const;

    /// The coefficient of the exact odd monomial `mask`, as a function of z
    /// (an element with only mask-0 terms).
    SuperElement coefficient_of_mask(std::uint32_t mask) const;
    /// Substitutes z -> 0 on the reduced part; errors if negative powers remain.
    GaussianRational constant_term() const;
    /// Lowest z-degree among mask-0 terms; nullopt if reduced part is zero.
    std::optional<int> reduced_min_degree() const;

    /// Terms whose mask-0 part is kept/dropped: reduced + nilpotent split.
    SuperElement nilpotent_part() const;

    SuperElement with_truncated_flag(bool f) const {
        SuperElement r = *this;
        r.truncated_ = f;
        return r;
    }

    std::string str() const;

    /// Re-homes an element into another signature given a generator index
    /// remap (old odd index -> new odd index).  Exponent window must admit
    /// all terms; used by the SUSY lift embedding and its projection.
    SuperElement remap(const AlgebraSignature& to, const std::vector<int>& gen_map) const;

    void add_term(const Monomial& m, const GaussianRational& c);

private:
    AlgebraSignature sig_;
    std::map<Monomial, GaussianRational> terms_;
    bool truncated_ = false;
};

inline SuperElement operator*(const GaussianRational& c, const SuperElement& x) { return x * c; }

} // namespace supercurve
