#include "qeuler/series.hpp"

namespace qeuler {

namespace {

void require_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw DomainError("series order mismatch: " + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()));
}

}  // namespace

Series Series::constant(const Rational& c, unsigned order) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::exp_linear(const Rational& c, unsigned order) {
    Series s(order);
    s.c_[0] = Rational(1);
    for (unsigned k = 1; k <= order; ++k)
        s.c_[k] = s.c_[k - 1] * c / Rational(static_cast<long>(k));
    return s;
}

Series Series::operator-() const {
    Series r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) {
    require_same_order(*this, o);
    for (unsigned k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_same_order(*this, o);
    for (unsigned k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Series& Series::operator*=(const Rational& scalar) {
    for (auto& c : c_) c *= scalar;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    require_same_order(a, b);
    const unsigned n = a.order();
    Series r(n);
    // Cauchy product, truncated: coefficient k depends only on 0..k of each factor
    for (unsigned k = 0; k <= n; ++k) {
        Rational acc(0);
        for (unsigned i = 0; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
        r.c_[k] = acc;
    }
    return r;
}

Series& Series::operator*=(const Series& o) {
    *this = *this * o;
    return *this;
}

Series operator/(const Series& u, const Series& v) {
    require_same_order(u, v);
    if (v[0].is_zero())
        throw SingularSeriesError("series division by a series with zero constant term");
    const unsigned n = u.order();
    Series q(n);
    for (unsigned k = 0; k <= n; ++k) {
        Rational acc = u.c_[k];
        for (unsigned i = 0; i < k; ++i) acc -= q.c_[i] * v.c_[k - i];
        q.c_[k] = acc / v.c_[0];
    }
    return q;
}

}  // namespace qeuler
