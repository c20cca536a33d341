#pragma once

#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

/// Power series in a formal variable t, truncated at a fixed order N:
/// coefficients are kept for t^0 .. t^N and every operation on two series of
/// order N yields a series of order N. Coefficients are plain Taylor
/// coefficients (of t^k, not t^k/k!).
class Series {
public:
    explicit Series(unsigned order) : c_(order + 1, Rational(0)) {}

    static Series constant(const Rational& c, unsigned order);

    /// e^{ct} truncated: coefficients c^k / k!.
    static Series exp_linear(const Rational& c, unsigned order);

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }

    const Rational& operator[](unsigned k) const { return c_[k]; }
    Rational& operator[](unsigned k) { return c_[k]; }

    const std::vector<Rational>& coefficients() const { return c_; }

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const Rational& scalar);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& c, Series s) { return s *= c; }

    /// Exact long division; the divisor must have a nonzero constant term,
    /// otherwise SingularSeriesError is thrown.
    friend Series operator/(const Series& u, const Series& v);

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    std::vector<Rational> c_;
};

}  // namespace qeuler
