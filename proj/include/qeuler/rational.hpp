#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qeuler/errors.hpp"

namespace qeuler {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Arithmetic is exact; there is no rounding anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix freely
    Rational(int n) : v_(n) {}   // NOLINT
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "p", "p/q" or "-p/q" (base 10). Throws DomainError on malformed
    /// input or a zero denominator.
    static Rational from_string(std::string_view s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws DomainError on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Integer power. A negative exponent requires a nonzero base.
    Rational pow(long e) const;

    double to_double() const { return v_.get_d(); }

    /// "num/den" with the denominator omitted when it is 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;  // invariant: canonical (lowest terms, positive denominator)
};

mpz_class factorial_z(unsigned long n);
mpz_class binomial_z(unsigned long n, unsigned long k);

/// q-bracket [x]_q = (1 - q^x)/(1 - q), with the limit value x at q = 1.
/// Negative x requires q != 0.
Rational q_bracket(long x, const Rational& q);

/// q-Pochhammer (a : q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1}); empty product is 1.
Rational q_pochhammer(const Rational& a, const Rational& q, unsigned long n);

}  // namespace qeuler
