#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace supercurve {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(i).  Equality is structural: cpp_rational keeps
/// numerator/denominator in lowest terms with positive denominator.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long n) : re(n), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational of(long num, long den) {
        if (den == 0) throw std::domain_error("zero denominator");
        return GaussianRational(Rational(num, den));
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(i)");
        Rational n = re * re + im * im;
        return {re / n, -im / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const;
};

/// Canonical scalar form: "p/q", "p/q*i", "p/q+r/s*i", "p/q-r/s*i"; "/1" omitted.
inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    if (im == 0) return rational_str(re);
    std::string imag;
    Rational ia = im < 0 ? Rational(-im) : im;
    if (ia == 1)
        imag = "i";
    else
        imag = rational_str(ia) + "*i";
    if (re == 0) return (im < 0 ? "-" : "") + imag;
    return rational_str(re) + (im < 0 ? "-" : "+") + imag;
}

} // namespace supercurve
