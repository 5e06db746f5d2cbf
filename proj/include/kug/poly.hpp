#pragma once

// Exact univariate polynomials in q over Z and Q, rational functions with
// exactness-checked normalization, and q-adic split orders.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kug/errors.hpp"

namespace kug {

/// Dense polynomial, coefficient i multiplies q^i. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients.
template <class Coeff>
class Polynomial {
public:
    using coeff_type = Coeff;

    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Coeff& a) { return Polynomial(std::vector<Coeff>{a}); }
    static Polynomial one() { return constant(Coeff(1)); }

    // a * q^k
    static Polynomial monomial(const Coeff& a, std::size_t k) {
        std::vector<Coeff> c(k + 1, Coeff(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }

    // q - c
    static Polynomial linear_root(const Coeff& c) { return Polynomial({Coeff(-c), Coeff(1)}); }

    const std::vector<Coeff>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const Coeff& leading() const { return c_.back(); }

    Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }

    bool is_constant(const Coeff& a) const {
        return a == 0 ? c_.empty() : (c_.size() == 1 && c_[0] == a);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (Coeff& x : r.c_) x = -x;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Coeff& a) {
        if (a == 0) {
            c_.clear();
            return *this;
        }
        for (Coeff& x : c_) x *= a;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
    friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }

    // Multiplication by q^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Coeff> r(k, Coeff(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return Polynomial(std::move(r));
    }

    // Horner evaluation; the result type is wide enough for any coefficient ring here.
    template <class Value>
    Value eval(const Value& x) const {
        Value acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Value(*it);
        return acc;
    }

    template <class Other>
    Polynomial<Other> cast() const {
        std::vector<Other> r;
        r.reserve(c_.size());
        for (const Coeff& x : c_) r.emplace_back(x);
        return Polynomial<Other>(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPoly = Polynomial<mpz_class>;
using RatPoly = Polynomial<mpq_class>;

inline IntPoly q_power(std::size_t k) { return IntPoly::monomial(mpz_class(1), k); }

/// Exact evaluation at an integer point.
inline mpz_class eval_int(const IntPoly& a, const mpz_class& q0) { return a.eval<mpz_class>(q0); }

/// Quotient and remainder over Q.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    std::vector<mpq_class> rem = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db + 1), mpq_class(0));
    const mpq_class& lead = b.leading();
    for (long k = a.degree() - db; k >= 0; --k) {
        mpq_class t = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = t;
        if (t == 0) continue;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

/// Returns c with a = b * c. Any remainder or non-integral quotient coefficient
/// is an InvariantError: every division the pipeline performs is exact.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InputError("exact_div: division by the zero polynomial");
    auto [quot, rem] = divmod(a.cast<mpq_class>(), b.cast<mpq_class>());
    if (!rem.is_zero()) throw InvariantError("exact_div: inexact polynomial division");
    std::vector<mpz_class> out;
    out.reserve(quot.coeffs().size());
    for (std::size_t i = 0; i < quot.coeffs().size(); ++i) {
        const mpq_class& c = quot.coeffs()[i];
        if (c.get_den() != 1)
            throw InvariantError("exact_div: quotient coefficient of q^" + std::to_string(i) + " is " + c.get_str());
        out.push_back(c.get_num());
    }
    return IntPoly(std::move(out));
}

inline RatPoly make_monic(const RatPoly& a) {
    if (a.is_zero()) return a;
    mpq_class inv = 1 / a.leading();
    return a * inv;
}

/// Monic gcd over Q (zero if both inputs are zero).
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

/// num/den over Q, kept coprime with a monic denominator.
class RatFraction {
public:
    RatFraction() : num_(), den_(RatPoly::one()) {}
    RatFraction(RatPoly num) : num_(std::move(num)), den_(RatPoly::one()) {}
    RatFraction(const IntPoly& num) : RatFraction(num.cast<mpq_class>()) {}
    RatFraction(const IntPoly& num, const IntPoly& den) : RatFraction(num.cast<mpq_class>(), den.cast<mpq_class>()) {}

    RatFraction(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw InputError("fraction with zero denominator");
        normalize();
    }

    const RatPoly& num() const noexcept { return num_; }
    const RatPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool has_unit_denominator() const { return den_.is_constant(mpq_class(1)); }

    friend bool operator==(const RatFraction& a, const RatFraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFraction operator-() const { return RatFraction(-num_, den_, normalized_tag{}); }

    friend RatFraction operator+(const RatFraction& x, const RatFraction& y) {
        if (x.den_ == y.den_) return RatFraction(x.num_ + y.num_, x.den_);
        return RatFraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFraction operator-(const RatFraction& x, const RatFraction& y) { return x + (-y); }
    friend RatFraction operator*(const RatFraction& x, const RatFraction& y) {
        return RatFraction(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RatFraction operator/(const RatFraction& x, const RatFraction& y) {
        if (y.is_zero()) throw InputError("division by the zero fraction");
        return RatFraction(x.num_ * y.den_, x.den_ * y.num_);
    }

    RatFraction& operator+=(const RatFraction& o) { return *this = *this + o; }
    RatFraction& operator*=(const RatFraction& o) { return *this = *this * o; }

    RatFraction inverse() const { return RatFraction(den_, num_); }

private:
    struct normalized_tag {};
    RatFraction(RatPoly num, RatPoly den, normalized_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = RatPoly::one();
            return;
        }
        RatPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        mpq_class lead = den_.leading();
        if (lead != 1) {
            mpq_class inv = 1 / lead;
            num_ *= inv;
            den_ *= inv;
        }
    }

    RatPoly num_;
    RatPoly den_;
};

/// The assertion point for integrality: succeeds only for a unit denominator
/// and integral numerator coefficients.
inline IntPoly to_intpoly(const RatFraction& x) {
    if (!x.has_unit_denominator())
        throw InvariantError("to_intpoly: nontrivial denominator of degree " + std::to_string(x.den().degree()));
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < x.num().coeffs().size(); ++i) {
        const mpq_class& c = x.num().coeffs()[i];
        if (c.get_den() != 1)
            throw InvariantError("to_intpoly: coefficient of q^" + std::to_string(i) + " is " + c.get_str());
        out.push_back(c.get_num());
    }
    return IntPoly(std::move(out));
}

/// Coefficients of a in the basis (q - c)^i.
inline std::vector<mpz_class> rebase(const IntPoly& a, const mpz_class& c) {
    // Taylor shift: coefficients of a(x + c), by repeated synthetic division.
    std::vector<mpz_class> w = a.coeffs();
    const std::size_t d = w.size();
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = d - 1; j > i; --j) w[j - 1] += c * w[j];
    return w;
}

/// Inverse of rebase: sum_i b_i (q - c)^i expanded in the monomial basis.
inline IntPoly expand_from_basis(const std::vector<mpz_class>& b, const mpz_class& c) {
    IntPoly acc;
    const IntPoly shift = IntPoly::linear_root(c);
    for (auto it = b.rbegin(); it != b.rend(); ++it) acc = acc * shift + IntPoly::constant(*it);
    return acc;
}

/// A group order split as q^k times a polynomial with nonzero constant term,
/// so the p-part and p'-part can be read off structurally.
class QAdicOrder {
public:
    QAdicOrder() : k_(0), unit_(IntPoly::one()) {}

    QAdicOrder(long p_exponent, IntPoly prime_to_p) : k_(p_exponent), unit_(std::move(prime_to_p)) {
        if (k_ < 0) throw InvariantError("QAdicOrder: negative q-exponent");
        if (unit_.coeff(0) == 0) throw InvariantError("QAdicOrder: prime-to-p part has zero constant term");
    }

    long p_exponent() const noexcept { return k_; }
    const IntPoly& prime_to_p_part() const noexcept { return unit_; }
    IntPoly p_part() const { return q_power(static_cast<std::size_t>(k_)); }
    IntPoly polynomial() const { return unit_.shifted(static_cast<std::size_t>(k_)); }

    friend QAdicOrder operator*(const QAdicOrder& a, const QAdicOrder& b) {
        return QAdicOrder(a.k_ + b.k_, a.unit_ * b.unit_);
    }
    QAdicOrder& operator*=(const QAdicOrder& o) { return *this = *this * o; }
    friend bool operator==(const QAdicOrder& a, const QAdicOrder& b) { return a.k_ == b.k_ && a.unit_ == b.unit_; }

    mpz_class eval(const mpz_class& q0) const { return eval_int(polynomial(), q0); }

private:
    long k_;
    IntPoly unit_;
};

// -- text rendering ---------------------------------------------------------

namespace detail {

template <class Coeff>
std::string coeff_str(const Coeff& c) { return c.get_str(); }

} // namespace detail

/// Descending powers with explicit '*' and '^', e.g. "q^6 + 5*q^4 - 9*q^2 + 4*q".
template <class Coeff>
std::string to_string(const Polynomial<Coeff>& a, const std::string& var = "q") {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long i = a.degree(); i >= 0; --i) {
        Coeff c = a.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        const bool unit = (c == 1);
        if (i == 0) {
            out += detail::coeff_str(c);
            continue;
        }
        if (!unit) out += detail::coeff_str(c) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

inline std::string to_string(const RatFraction& x, const std::string& var = "q") {
    if (x.has_unit_denominator()) return to_string(x.num(), var);
    return "(" + to_string(x.num(), var) + ")/(" + to_string(x.den(), var) + ")";
}

} // namespace kug
