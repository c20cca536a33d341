#include <doctest.h>

#include <complex>
#include <numeric>
#include <sstream>

#include "qeuler/character.hpp"

using qeuler::DirichletCharacter;
using qeuler::Rational;

TEST_CASE("trivial character") {
    const auto chi = DirichletCharacter::trivial();
    CHECK(chi.conductor() == 1);
    CHECK(chi.is_primitive());
    CHECK(chi.is_real());
    CHECK(chi.eval_exact(0) == Rational(1));
    CHECK(chi.eval_exact(17) == Rational(1));
}

TEST_CASE("quadratic characters match the Legendre tables") {
    const auto chi3 = DirichletCharacter::quadratic(3);
    CHECK(chi3.eval_int(0) == 0);
    CHECK(chi3.eval_int(1) == 1);
    CHECK(chi3.eval_int(2) == -1);

    const auto chi5 = DirichletCharacter::quadratic(5);
    CHECK(chi5.eval_int(1) == 1);
    CHECK(chi5.eval_int(2) == -1);
    CHECK(chi5.eval_int(3) == -1);
    CHECK(chi5.eval_int(4) == 1);

    CHECK_THROWS_AS(DirichletCharacter::quadratic(9), qeuler::DomainError);
    CHECK_THROWS_AS(DirichletCharacter::quadratic(2), qeuler::DomainError);
}

TEST_CASE("periodic extension and multiplicativity") {
    const auto chi = DirichletCharacter::quadratic(3);
    CHECK(chi.eval_int(7) == 1);   // 7 = 1 mod 3
    CHECK(chi.eval_int(6) == 0);   // gcd(6,3) > 1
    for (unsigned long n = 0; n < 30; ++n) CHECK(chi.eval_int(n + 3) == chi.eval_int(n));
    for (unsigned long m = 1; m < 20; ++m)
        for (unsigned long n = 1; n < 20; ++n)
            CHECK(chi.eval_int(m * n) == chi.eval_int(m) * chi.eval_int(n));
}

TEST_CASE("orthogonality over one period") {
    for (long p : {3L, 5L, 7L, 11L}) {
        const auto chi = DirichletCharacter::quadratic(p);
        Rational sum(0);
        for (long n = 0; n < p; ++n) sum += chi.eval_exact(static_cast<unsigned long>(n));
        CHECK(sum == Rational(0));
    }
    // conductor-1 character sums to f = 1 over its period
    Rational sum(0);
    const auto triv = DirichletCharacter::trivial();
    sum += triv.eval_exact(0);
    CHECK(sum == Rational(1));
}

TEST_CASE("table constructor enforces the character axioms") {
    CHECK_NOTHROW(DirichletCharacter::from_table(
        3, std::vector<Rational>{Rational(0), Rational(1), Rational(-1)}));

    // principal table mod 3 has true conductor 1: strict rejects, permissive tags
    const std::vector<Rational> principal{Rational(0), Rational(1), Rational(1)};
    CHECK_THROWS_AS(DirichletCharacter::from_table(3, principal, /*strict=*/true),
                    qeuler::InvalidCharacterError);
    const auto tagged = DirichletCharacter::from_table(3, principal, /*strict=*/false);
    CHECK(tagged.conductor() == 3);
    CHECK(tagged.true_conductor() == 1);
    CHECK_FALSE(tagged.is_primitive());

    // zero in the wrong place
    CHECK_THROWS_AS(DirichletCharacter::from_table(
                        3, std::vector<Rational>{Rational(1), Rational(1), Rational(-1)}),
                    qeuler::InvalidCharacterError);

    // multiplicativity violation carries the witnessing pair
    try {
        DirichletCharacter::from_table(
            5, std::vector<Rational>{Rational(0), Rational(1), Rational(1), Rational(1),
                                     Rational(-1)});
        FAIL("expected InvalidCharacterError");
    } catch (const qeuler::InvalidCharacterError& e) {
        CHECK(e.m >= 1);
        CHECK(e.n >= 1);
    }

    // even or non-positive conductors are out
    CHECK_THROWS_AS(DirichletCharacter::from_table(
                        2, std::vector<Rational>{Rational(0), Rational(1)}),
                    qeuler::InvalidCharacterError);

    // wrong table length
    CHECK_THROWS_AS(DirichletCharacter::from_table(
                        3, std::vector<Rational>{Rational(0), Rational(1)}),
                    qeuler::InvalidCharacterError);
}

TEST_CASE("analytic mode admits complex characters") {
    using cd = std::complex<double>;
    // the order-4 character mod 5: chi(2) = i
    const std::vector<cd> table{{0, 0}, {1, 0}, {0, 1}, {0, -1}, {-1, 0}};
    const auto chi = DirichletCharacter::from_table(5, table);
    CHECK_FALSE(chi.is_real());
    CHECK(chi.is_primitive());
    CHECK(chi.eval(2) == cd(0, 1));
    CHECK(chi.eval(7) == cd(0, 1));
    CHECK_THROWS_AS(chi.eval_exact(2), qeuler::WrongPipelineError);

    // breaking multiplicativity by flipping one value
    std::vector<cd> bad = table;
    bad[3] = cd(0, 1);
    CHECK_THROWS_AS(DirichletCharacter::from_table(5, bad),
                    qeuler::InvalidCharacterError);

    // a non-root-of-unity magnitude
    std::vector<cd> scaled = table;
    for (auto& v : scaled) v *= 0.5;
    CHECK_THROWS_AS(DirichletCharacter::from_table(5, scaled),
                    qeuler::InvalidCharacterError);
}

TEST_CASE("file loading: real and complex tables") {
    {
        std::istringstream in("3\n0 1 -1\n");
        const auto chi = DirichletCharacter::load(in);
        CHECK(chi.is_real());
        CHECK(chi.conductor() == 3);
        CHECK(chi.eval_int(2) == -1);
    }
    {
        std::istringstream in("5\n0 1 0,1 0,-1 -1\n");
        const auto chi = DirichletCharacter::load(in);
        CHECK_FALSE(chi.is_real());
        CHECK(chi.eval(2) == std::complex<double>(0, 1));
    }
    {
        std::istringstream in("3\n0 1\n");  // truncated
        CHECK_THROWS_AS(DirichletCharacter::load(in), qeuler::DomainError);
    }
    {
        std::istringstream in("3\n0 1 x\n");
        CHECK_THROWS_AS(DirichletCharacter::load(in), qeuler::Error);
    }
}
