#include "supercurve/element.hpp"

#include <sstream>

namespace supercurve {

SuperElement SuperElement::scalar(const AlgebraSignature& sig, GaussianRational c) {
    SuperElement r(sig);
    r.add_term(Monomial(0, 0), c);
    return r;
}

SuperElement SuperElement::z_pow(const AlgebraSignature& sig, int e, GaussianRational c) {
    SuperElement r(sig);
    r.add_term(Monomial(e, 0), c);
    return r;
}

SuperElement SuperElement::gen(const AlgebraSignature& sig, int g) {
    if (g < 0 || g >= sig.odd_count()) throw std::invalid_argument("odd generator out of range");
    SuperElement r(sig);
    r.add_term(Monomial(0, 1u << g), GaussianRational(1));
    return r;
}

SuperElement SuperElement::monomial(const AlgebraSignature& sig, Monomial m, GaussianRational c) {
    SuperElement r(sig);
    r.add_term(m, c);
    return r;
}

void SuperElement::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (sig_.exact_polynomial_mode) {
        if (m.e < 0)
            throw std::domain_error("negative exponent in exact polynomial mode");
    } else if (m.e < sig_.e_min || m.e > sig_.e_max) {
        truncated_ = true;
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperElement SuperElement::operator-() const {
    SuperElement r(sig_);
    r.truncated_ = truncated_;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SuperElement SuperElement::operator+(const SuperElement& o) const {
    sig_.check_same(o.sig_);
    SuperElement r = *this;
    r.truncated_ = truncated_ || o.truncated_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SuperElement SuperElement::operator-(const SuperElement& o) const { return *this + (-o); }

SuperElement SuperElement::operator*(const SuperElement& o) const {
    sig_.check_same(o.sig_);
    SuperElement r(sig_);
    r.truncated_ = truncated_ || o.truncated_;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            int s = koszul_sign(ma.mask, mb.mask);
            if (s == 0) continue;
            GaussianRational c = ca * cb;
            if (s < 0) c = -c;
            r.add_term(Monomial(ma.e + mb.e, ma.mask | mb.mask), c);
        }
    }
    return r;
}

SuperElement SuperElement::operator*(const GaussianRational& c) const {
    SuperElement r(sig_);
    r.truncated_ = truncated_;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

SuperElement SuperElement::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    SuperElement r = one(sig_);
    SuperElement base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

SuperElement SuperElement::d_even() const {
    SuperElement r(sig_);
    r.truncated_ = truncated_;
    for (const auto& [m, c] : terms_) {
        if (m.e == 0) continue;
        r.add_term(Monomial(m.e - 1, m.mask), c * GaussianRational(m.e));
    }
    return r;
}

SuperElement SuperElement::d_odd(int g) const {
    if (!sig_.is_theta(g)) {
        if (sig_.is_eta(g)) throw std::invalid_argument("not a coordinate direction: eta parameters are constants");
        throw std::invalid_argument("odd generator out of range");
    }
    SuperElement r(sig_);
    r.truncated_ = truncated_;
    const std::uint32_t bit = 1u << g;
    for (const auto& [m, c] : terms_) {
        if (!(m.mask & bit)) continue;
        // Left derivative: commute th(g+1) to the front past lower-index
        // generators present in the monomial.
        int below = std::popcount(m.mask & (bit - 1));
        GaussianRational cc = (below & 1) ? -c : c;
        r.add_term(Monomial(m.e, m.mask & ~bit), cc);
    }
    return r;
}

SuperElement SuperElement::reduce() const {
    SuperElement r(sig_);
    r.truncated_ = truncated_;
    for (const auto& [m, c] : terms_)
        if (m.mask == 0) r.terms_.emplace(m, c);
    return r;
}

std::optional<int> SuperElement::parity() const {
    std::optional<int> p;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (!p)
            p = m.parity();
        else if (*p != m.parity())
            return std::nullopt;
    }
    return p ? p : std::optional<int>(0);
}

bool SuperElement::is_unit() const {
    SuperElement red = reduce();
    if (red.is_zero()) return false;
    if (sig_.exact_polynomial_mode)
        return red.terms_.size() == 1 && red.terms_.begin()->first.e == 0;
    return true;
}

SuperElement SuperElement::nilpotent_part() const {
    SuperElement r(sig_);
    r.truncated_ = truncated_;
    for (const auto& [m, c] : terms_)
        if (m.mask != 0) r.terms_.emplace(m, c);
    return r;
}

SuperElement SuperElement::coefficient_of_mask(std::uint32_t mask) const {
    // f = ... + c(z) * m_mask + ...  with m_mask in ascending generator
    // order; returns c(z).
    SuperElement r(sig_);
    for (const auto& [m, c] : terms_)
        if (m.mask == mask) r.add_term(Monomial(m.e, 0), c);
    return r;
}

GaussianRational SuperElement::constant_term() const {
    for (const auto& [m, c] : terms_)
        if (m.mask == 0 && m.e == 0) return c;
    return GaussianRational(0);
}

std::optional<int> SuperElement::reduced_min_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.mask == 0 && (!d || m.e < *d)) d = m.e;
    }
    return d;
}

SuperElement SuperElement::inverse() const {
    SuperElement red = reduce();
    if (red.is_zero()) throw NotInvertible("element is not a unit (nilpotent reduced part)");
    SuperElement red_inv(sig_);
    if (sig_.exact_polynomial_mode) {
        if (red.terms_.size() != 1 || red.terms_.begin()->first.e != 0)
            throw NotInvertible("not invertible in exact polynomial mode");
        red_inv = scalar(sig_, red.terms_.begin()->second.inverse());
    } else {
        // c*z^k * (1 + h) with h of strictly higher degree; geometric series
        // in h truncated to the window.
        int k = *red.reduced_min_degree();
        GaussianRational c;
        for (const auto& [m, cc] : red.terms_)
            if (m.e == k) { c = cc; break; }
        SuperElement lead_inv = z_pow(sig_, -k, c.inverse());
        SuperElement h = red * lead_inv - one(sig_);
        SuperElement acc = one(sig_);
        SuperElement p = one(sig_);
        int cap = (sig_.e_max - sig_.e_min) + 2;
        for (int it = 0; !h.is_zero(); ++it) {
            if (it > cap) throw NotInvertible("inverse series failed to terminate");
            p = p * (-h);
            if (p.is_zero()) break;
            acc += p;
        }
        red_inv = lead_inv * acc;
    }
    // Neumann correction for the nilpotent remainder.
    SuperElement n = nilpotent_part();
    if (n.is_zero()) return red_inv.with_truncated_flag(red_inv.truncated() || truncated_);
    SuperElement t = -(red_inv * n);
    SuperElement acc = one(sig_);
    SuperElement p = one(sig_);
    int cap = sig_.odd_count() + 2;
    for (int it = 0; ; ++it) {
        p = p * t;
        if (p.is_zero()) break;
        if (it > cap) throw NotInvertible("Neumann series failed to terminate");
        acc += p;
    }
    SuperElement r = acc * red_inv;
    return r.with_truncated_flag(r.truncated() || truncated_);
}

SuperElement SuperElement::exp() const {
    if (!is_even()) throw std::domain_error("exp of a non-even element");
    SuperElement acc = one(sig_);
    SuperElement p = one(sig_);
    Rational kfac = 1;
    int cap = sig_.exact_polynomial_mode ? 64 : (sig_.e_max - sig_.e_min) + sig_.odd_count() + 4;
    for (int k = 1;; ++k) {
        p = p * *this;
        if (p.is_zero()) break;
        if (k > cap) throw std::domain_error("exp series failed to terminate");
        kfac *= k;
        acc += p * GaussianRational(Rational(1) / kfac);
    }
    return acc;
}

SuperElement SuperElement::integrate_even() const {
    SuperElement r(sig_);
    r.truncated_ = truncated_;
    for (const auto& [m, c] : terms_) {
        if (m.e == -1)
            throw std::domain_error("no antiderivative: z^-1 term present");
        r.add_term(Monomial(m.e + 1, m.mask), c * GaussianRational(Rational(1, m.e + 1)));
    }
    return r;
}

SuperElement SuperElement::remap(const AlgebraSignature& to, const std::vector<int>& gen_map) const {
    if (static_cast<int>(gen_map.size()) != sig_.odd_count())
        throw std::invalid_argument("generator remap has wrong size");
    SuperElement r(to);
    r.truncated_ = truncated_;
    for (const auto& [m, c] : terms_) {
        std::uint32_t nm = 0;
        int sign = 1;
        // Rebuild the monomial generator by generator; count inversions the
        // remap introduces in the ascending order.
        std::vector<int> images;
        std::uint32_t mm = m.mask;
        while (mm) {
            int g = std::countr_zero(mm);
            mm &= mm - 1;
            int ng = gen_map.at(g);
            if (ng < 0 || ng >= to.odd_count())
                throw std::invalid_argument("generator remap target out of range");
            for (int prev : images)
                if (prev > ng) sign = -sign;
            images.push_back(ng);
            nm |= 1u << ng;
        }
        if (std::popcount(nm) != static_cast<int>(images.size()))
            throw std::invalid_argument("generator remap not injective on this element");
        r.add_term(Monomial(m.e, nm), sign < 0 ? -c : c);
    }
    return r;
}

std::string SuperElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        GaussianRational cc = c;
        bool negative = cc.im == 0 ? cc.re < 0 : (cc.re == 0 ? cc.im < 0 : false);
        if (negative) cc = -cc;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::vector<std::string> factors;
        bool mixed = cc.re != 0 && cc.im != 0;
        if (!(cc.is_one() && m != Monomial(0, 0))) {
            if (mixed && m != Monomial(0, 0))
                factors.push_back("(" + cc.str() + ")");
            else
                factors.push_back(cc.str());
        }
        if (m.e != 0) {
            std::string p = sig_.even_name;
            if (m.e != 1) p += "^" + std::to_string(m.e);
            factors.push_back(p);
        }
        std::uint32_t mm = m.mask;
        while (mm) {
            int g = std::countr_zero(mm);
            mm &= mm - 1;
            factors.push_back(sig_.generator_name(g));
        }
        if (factors.empty()) factors.push_back("1");
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

} // namespace supercurve
