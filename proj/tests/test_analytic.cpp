#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qeuler/analytic.hpp"
#include "qeuler/tables.hpp"

using qeuler::ComplexParams;
using qeuler::DirichletCharacter;
using qeuler::Rational;
using cd = std::complex<double>;

namespace {

ComplexParams make_params(cd q, unsigned r, double eps = 1e-12) {
    ComplexParams p;
    p.q = q;
    p.a.assign(r, 1);
    p.b.assign(r, 1);
    p.eps = eps;
    return p;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(qeuler::zeta_r({1, 0}, 1.0, make_params({1.0, 0.0}, 1)),
                    qeuler::DomainError);
    CHECK_THROWS_AS(qeuler::zeta_r({1, 0}, 0.0, make_params({0.5, 0.0}, 1)),
                    qeuler::DomainError);
    ComplexParams bad = make_params({0.5, 0.0}, 1);
    bad.eps = 0.0;
    CHECK_THROWS_AS(qeuler::zeta_r({1, 0}, 1.0, bad), qeuler::DomainError);
}

TEST_CASE("truncation plan: edge cases and monotonicity") {
    // q = 0 needs nothing beyond the all-zero shell
    const auto zero = qeuler::truncation_plan(make_params({0, 0}, 2), 1.0, 3, 1e-12);
    CHECK(zero.cutoffs == std::vector<long>{0, 0});
    CHECK(zero.tail_bound == 0.0);

    // the worked desk example: r = 1, q = 1/2, k = 1, eps = 1e-12
    const auto plan = qeuler::truncation_plan(make_params({0.5, 0.0}, 1), 1.0, 1, 1e-12);
    CHECK(plan.cutoffs[0] <= 60);
    CHECK(plan.tail_bound <= 1e-12);

    // doubling eps never increases the cutoff
    long prev = plan.cutoffs[0];
    for (double eps = 2e-12; eps < 1e-3; eps *= 2) {
        const auto p = qeuler::truncation_plan(make_params({0.5, 0.0}, 1), 1.0, 1, eps);
        CHECK(p.cutoffs[0] <= prev);
        prev = p.cutoffs[0];
    }

    CHECK_THROWS_AS(qeuler::truncation_plan(make_params({0.5, 0.0}, 1), 1.0, 1, 0.0),
                    qeuler::DomainError);
}

TEST_CASE("generating-function series vs closed form") {
    // t = 0 gives E_{0,q} = 2/(1+q)
    const auto at0 = qeuler::genfun_series({0, 0}, make_params({0.5, 0.0}, 1), 0.0);
    CHECK(std::abs(at0.value - cd(4.0 / 3.0, 0)) <= 1e-12);

    // q = 0 keeps only the all-zero index: 2^r e^{xt}
    const auto q0 = qeuler::genfun_series({0.3, 0.0}, make_params({0, 0}, 2), 1.0);
    CHECK(std::abs(q0.value - 4.0 * std::exp(cd(0.3, 0.0))) <= 1e-13);
    CHECK(q0.certificate.terms == 1);

    // the spot check from the definition
    const auto spot = qeuler::genfun_series({0.1, 0.0}, make_params({0.5, 0.0}, 1), 0.0);
    CHECK(std::abs(spot.value - 2.0 / (0.5 * std::exp(0.1) + 1.0)) <= 1e-12);

    // grid duality, real and complex q and t, r in {1, 2}
    for (unsigned r : {1u, 2u}) {
        for (cd q : {cd(0.3, 0.0), cd(0.5, 0.0), cd(0.5, 0.2)}) {
            for (cd t : {cd(0.1, 0.0), cd(0.3, 0.2)}) {
                for (double x : {0.0, 1.0}) {
                    const auto params = make_params(q, r);
                    const auto series = qeuler::genfun_series(t, params, x);
                    const auto closed = qeuler::genfun_closed_form(t, params, x);
                    CHECK(std::abs(series.value - closed) <= params.eps + 1e-13);
                }
            }
        }
    }

    // divergence: |q| e^{Re t} >= 1
    CHECK_THROWS_AS(qeuler::genfun_series({1.0, 0.0}, make_params({0.5, 0.0}, 1), 0.0),
                    qeuler::DivergenceError);
}

TEST_CASE("moment series") {
    // k = 1, x = 1, q = 1/2: 2 sum (n+1)(-1/2)^n = 2/(1+q)^2 = 8/9
    const auto m1 = qeuler::moment_series(1, 1.0, make_params({0.5, 0.0}, 1));
    CHECK(std::abs(m1.value - cd(8.0 / 9.0, 0)) <= 1e-11);

    // k = 0 factors into the geometric product 2^r / prod(1 + q^{b_j})
    const auto m0 = qeuler::moment_series(0, 1.0, make_params({0.5, 0.0}, 2));
    CHECK(std::abs(m0.value - cd(4.0 / 2.25, 0)) <= 1e-11);

    CHECK_THROWS_AS(qeuler::moment_series(1, -1.0, make_params({0.5, 0.0}, 1)),
                    qeuler::DomainError);

    // odd moments equal the exact table values within 1e-9
    for (unsigned r : {1u, 2u}) {
        for (long x : {0L, 1L}) {
            qeuler::QEulerSpec spec;
            spec.r = r;
            spec.a.assign(r, 1);
            spec.b.assign(r, 1);
            spec.q = Rational(1, 2);
            spec.x = Rational(x);
            const auto table = q_euler_table(spec, 7);
            for (unsigned k = 1; k <= 7; ++k) {
                const auto series =
                    qeuler::moment_series(k, static_cast<double>(x),
                                          make_params({0.5, 0.0}, r));
                const double residual =
                    std::abs(series.value - cd(table.values[k].to_double(), 0));
                if (k % 2 == 1) {
                    CHECK(residual <= 1e-9);
                } else {
                    MESSAGE("even-k moment residual, r=", r, " x=", x, " k=", k, ": ",
                            residual);
                }
            }
        }
    }
}

TEST_CASE("zeta_r interpolation and edge cases") {
    // s = -1: 8/9, equal to E_{1,q}(1) = E_{1,q} + E_{0,q}
    const auto z1 = qeuler::zeta_r({-1, 0}, 1.0, make_params({0.5, 0.0}, 1));
    CHECK(std::abs(z1.value - cd(8.0 / 9.0, 0)) <= 1e-11);

    // s = -2: 8/27 on both sides (even-n observation, asserted as a value)
    const auto z2 = qeuler::zeta_r({-2, 0}, 1.0, make_params({0.5, 0.0}, 1));
    CHECK(std::abs(z2.value - cd(8.0 / 27.0, 0)) <= 1e-11);

    // q = 0: the single surviving term 2^r x^{-s}
    const auto zq0 = qeuler::zeta_r({3, 0}, 2.0, make_params({0, 0}, 1));
    CHECK(std::abs(zq0.value - cd(0.25, 0)) <= 1e-14);

    // positive real part of s converges too
    const auto zpos = qeuler::zeta_r({2, 1}, 1.0, make_params({0.5, 0.0}, 2));
    CHECK(std::isfinite(zpos.value.real()));
    CHECK(zpos.certificate.tail_bound <= 1e-12);

    // interpolation grid: odd n asserted, q = 1/2, x in {1, 2}, r in {1, 2}
    for (unsigned r : {1u, 2u}) {
        for (long x : {1L, 2L}) {
            qeuler::QEulerSpec spec;
            spec.r = r;
            spec.a.assign(r, 1);
            spec.b.assign(r, 1);
            spec.q = Rational(1, 2);
            spec.x = Rational(x);
            const auto table = q_euler_table(spec, 7);
            for (unsigned n = 1; n <= 7; n += 2) {
                const auto z = qeuler::zeta_r({-static_cast<double>(n), 0},
                                              static_cast<double>(x),
                                              make_params({0.5, 0.0}, r));
                CHECK(std::abs(z.value - cd(table.values[n].to_double(), 0)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("dirichlet_l: reduction, interpolation, moment consistency") {
    const auto chi3 = DirichletCharacter::quadratic(3);

    // trivial character: L_r(s) = (-1)^r q^{sum b_j} zeta_r(s, sum a_j)
    const auto triv = DirichletCharacter::trivial();
    for (unsigned r : {1u, 2u}) {
        const auto params = make_params({0.4, 0.0}, r);
        for (cd s : {cd(-1, 0), cd(0, 0), cd(2, 1)}) {
            const auto lval = qeuler::dirichlet_l(s, triv, params);
            const auto zval = qeuler::zeta_r(s, static_cast<double>(r), params);
            const double qpow = std::pow(0.4, static_cast<double>(r));
            const cd reduced = (r % 2 == 0 ? 1.0 : -1.0) * qpow * zval.value;
            CHECK(std::abs(lval.value - reduced) <= 1e-10);
        }
    }

    // same reduction with heterogeneous weights: shift n_j = m_j + 1
    {
        ComplexParams params;
        params.q = {0.4, 0.0};
        params.a = {1, 2};
        params.b = {2, 1};
        const auto s = cd(-2, 0.5);
        const auto lval = qeuler::dirichlet_l(s, triv, params);
        const auto zval = qeuler::zeta_r(s, 3.0, params);  // x = a_1 + a_2
        const cd reduced = std::pow(0.4, 3.0) * zval.value;  // q^{b_1 + b_2}, (-1)^2
        CHECK(std::abs(lval.value - reduced) <= 1e-10);
    }

    // chi mod 3 at s = 0, q = 1/2: -4/3 = E_{0,chi,q}
    const auto l0 = qeuler::dirichlet_l({0, 0}, chi3, make_params({0.5, 0.0}, 1));
    CHECK(std::abs(l0.value - cd(-4.0 / 3.0, 0)) <= 1e-11);

    // twisted interpolation grid: odd k <= 5 against the exact twisted table
    for (unsigned r : {1u, 2u}) {
        qeuler::QEulerSpec spec;
        spec.r = r;
        spec.a.assign(r, 1);
        spec.b.assign(r, 1);
        spec.q = Rational(1, 2);
        spec.x = Rational(0);
        const auto exact = generalized_q_euler_table(chi3, spec, 5);
        for (unsigned k = 1; k <= 5; k += 2) {
            const auto lval = qeuler::dirichlet_l({-static_cast<double>(k), 0}, chi3,
                                                  make_params({0.5, 0.0}, r));
            CHECK(std::abs(lval.value - cd(exact[k].to_double(), 0)) <= 1e-9);
        }
    }

    // twisted moment series (the restored-exponent reading) agrees with L(-k)
    for (unsigned k = 0; k <= 5; ++k) {
        const auto params = make_params({0.5, 0.0}, 2);
        const auto lval = qeuler::dirichlet_l({-static_cast<double>(k), 0}, chi3, params);
        const auto mval = qeuler::moment_series_char(k, chi3, params);
        CHECK(std::abs(lval.value - mval.value) <= 2 * params.eps);
    }

    // complex character in the analytic pipeline
    const auto chi5 = DirichletCharacter::from_table(
        5, std::vector<cd>{{0, 0}, {1, 0}, {0, 1}, {0, -1}, {-1, 0}});
    const auto lc = qeuler::dirichlet_l({-1, 0}, chi5, make_params({0.3, 0.0}, 1));
    CHECK(std::isfinite(lc.value.real()));
    CHECK(std::abs(lc.value.imag()) > 1e-6);  // genuinely complex output
}

TEST_CASE("certificate soundness: doubled cutoffs move less than the bound") {
    auto doubled = [](const std::vector<long>& c) {
        std::vector<long> out(c);
        for (auto& v : out) v = 2 * v + 1;
        return out;
    };

    for (unsigned r : {1u, 2u}) {
        const auto params = make_params({0.5, 0.0}, r, 1e-10);

        const auto z = qeuler::zeta_r({-3, 0}, 1.0, params);
        auto big = doubled(z.certificate.cutoffs);
        const auto z2 = qeuler::zeta_r({-3, 0}, 1.0, params, &big);
        CHECK(std::abs(z2.value - z.value) <= z.certificate.tail_bound);

        const auto m = qeuler::moment_series(3, 1.0, params);
        big = doubled(m.certificate.cutoffs);
        const auto m2 = qeuler::moment_series(3, 1.0, params, &big);
        CHECK(std::abs(m2.value - m.value) <= m.certificate.tail_bound);

        const auto g = qeuler::genfun_series({0.2, 0.1}, params, 1.0);
        big = doubled(g.certificate.cutoffs);
        const auto g2 = qeuler::genfun_series({0.2, 0.1}, params, 1.0, &big);
        CHECK(std::abs(g2.value - g.value) <= g.certificate.tail_bound);

        const auto chi = DirichletCharacter::quadratic(3);
        const auto l = qeuler::dirichlet_l({-2, 0}, chi, params);
        big = doubled(l.certificate.cutoffs);
        const auto l2 = qeuler::dirichlet_l({-2, 0}, chi, params, &big);
        CHECK(std::abs(l2.value - l.value) <= l.certificate.tail_bound);
    }
}

TEST_CASE("repeated evaluation is bit-identical") {
    const auto params = make_params({0.5, 0.2}, 2);
    const auto a = qeuler::zeta_r({-3, 0.7}, 1.5, params);
    const auto b = qeuler::zeta_r({-3, 0.7}, 1.5, params);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.certificate.terms == b.certificate.terms);
}
