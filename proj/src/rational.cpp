#include "qeuler/rational.hpp"

#include <ostream>

namespace qeuler {

namespace {

mpq_class canonical(mpq_class v) {
    v.canonicalize();
    return v;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = canonical(mpq_class(num, den));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = canonical(mpq_class(num, den));
}

Rational Rational::from_string(std::string_view s) {
    // trim ASCII whitespace
    auto begin = s.find_first_not_of(" \t\r\n");
    auto end = s.find_last_not_of(" \t\r\n");
    if (begin == std::string_view::npos)
        throw DomainError("empty rational literal");
    std::string body(s.substr(begin, end - begin + 1));
    try {
        mpq_class v(body, 10);
        if (v.get_den() == 0) throw DomainError("rational literal with zero denominator: " + body);
        return Rational(canonical(std::move(v)));
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational literal: " + body);
    }
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DomainError("0 raised to a negative power");
        return Rational(0);
    }
    const auto ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
    if (e < 0) {
        // lowest terms and denominator sign are restored by the checked ctor
        return Rational(d, n);
    }
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

mpz_class factorial_z(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial_z(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational q_bracket(long x, const Rational& q) {
    if (q.is_one()) return Rational(x);
    if (q.is_zero() && x < 0)
        throw DomainError("[x]_q undefined for q = 0 and negative x");
    return (Rational(1) - q.pow(x)) / (Rational(1) - q);
}

Rational q_pochhammer(const Rational& a, const Rational& q, unsigned long n) {
    Rational prod(1);
    Rational aqk = a;  // a q^k
    for (unsigned long k = 0; k < n; ++k) {
        prod *= Rational(1) - aqk;
        aqk *= q;
    }
    return prod;
}

}  // namespace qeuler
