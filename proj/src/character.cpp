#include "qeuler/character.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>

namespace qeuler {

namespace {

constexpr double kTol = 1e-12;  // analytic-mode comparison tolerance

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

long mul_mod(long a, long b, long m) {
    return static_cast<long>((static_cast<unsigned long long>(a) * b) % m);
}

// exponent of (Z/f)^*: lcm of the multiplicative orders of all units
long group_exponent(long f) {
    if (f == 1) return 1;
    long lambda = 1;
    for (long u = 1; u < f; ++u) {
        if (std::gcd(u, f) != 1) continue;
        long ord = 1, x = u;
        while (x != 1) {
            x = mul_mod(x, u, f);
            ++ord;
        }
        lambda = std::lcm(lambda, ord);
    }
    return lambda;
}

std::complex<double> pow_int(std::complex<double> z, long e) {
    std::complex<double> r(1.0, 0.0);
    for (long i = 0; i < e; ++i) r *= z;
    return r;
}

}  // namespace

DirichletCharacter DirichletCharacter::trivial() {
    DirichletCharacter chi;
    chi.f_ = 1;
    chi.true_f_ = 1;
    chi.real_ = true;
    chi.rvals_ = {1};
    return chi;
}

DirichletCharacter DirichletCharacter::from_table(long f, std::vector<Rational> values,
                                                  bool strict) {
    DirichletCharacter chi;
    chi.f_ = f;
    chi.real_ = true;
    chi.rvals_.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Rational& v = values[i];
        if (v == Rational(0))
            chi.rvals_.push_back(0);
        else if (v == Rational(1))
            chi.rvals_.push_back(1);
        else if (v == Rational(-1))
            chi.rvals_.push_back(-1);
        else
            throw InvalidCharacterError("real character value at index " +
                                        std::to_string(i) + " is not in {-1, 0, 1}: " +
                                        v.str());
    }
    chi.validate(strict);
    return chi;
}

DirichletCharacter DirichletCharacter::from_table(long f,
                                                  std::vector<std::complex<double>> values,
                                                  bool strict) {
    DirichletCharacter chi;
    chi.f_ = f;
    chi.real_ = false;
    chi.cvals_ = std::move(values);
    chi.validate(strict);
    return chi;
}

DirichletCharacter DirichletCharacter::quadratic(long p) {
    if (!is_odd_prime(p)) throw DomainError("quadratic character needs an odd prime, got " +
                                            std::to_string(p));
    std::vector<Rational> values(static_cast<std::size_t>(p), Rational(0));
    // Euler's criterion: n^{(p-1)/2} mod p is 1 on residues, p-1 on non-residues
    const long e = (p - 1) / 2;
    for (long n = 1; n < p; ++n) {
        long x = 1;
        for (long i = 0; i < e; ++i) x = mul_mod(x, n, p);
        values[static_cast<std::size_t>(n)] = (x == 1) ? Rational(1) : Rational(-1);
    }
    return from_table(p, std::move(values), /*strict=*/true);
}

DirichletCharacter DirichletCharacter::load(std::istream& in, bool strict) {
    long f = 0;
    if (!(in >> f)) throw DomainError("character file: missing conductor line");
    std::vector<std::string> tokens;
    tokens.reserve(static_cast<std::size_t>(f > 0 ? f : 0));
    std::string tok;
    for (long i = 0; i < f; ++i) {
        if (!(in >> tok))
            throw DomainError("character file: expected " + std::to_string(f) +
                              " values, got " + std::to_string(i));
        tokens.push_back(tok);
    }
    const bool complex_mode =
        std::any_of(tokens.begin(), tokens.end(),
                    [](const std::string& t) { return t.find(',') != std::string::npos; });
    if (!complex_mode) {
        std::vector<Rational> values;
        values.reserve(tokens.size());
        for (const auto& t : tokens) values.push_back(Rational::from_string(t));
        return from_table(f, std::move(values), strict);
    }
    auto parse_part = [](const std::string& part, const std::string& tok) {
        std::size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size())
            throw DomainError("character file: malformed value '" + tok + "'");
        return v;
    };
    std::vector<std::complex<double>> values;
    values.reserve(tokens.size());
    for (const auto& t : tokens) {
        const auto comma = t.find(',');
        try {
            if (comma == std::string::npos) {
                values.emplace_back(parse_part(t, t), 0.0);
            } else {
                values.emplace_back(parse_part(t.substr(0, comma), t),
                                    parse_part(t.substr(comma + 1), t));
            }
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception&) {
            throw DomainError("character file: malformed value '" + t + "'");
        }
    }
    return from_table(f, std::move(values), strict);
}

void DirichletCharacter::validate(bool strict) {
    if (f_ < 1 || f_ % 2 == 0)
        throw InvalidCharacterError("conductor must be an odd positive integer, got " +
                                    std::to_string(f_));
    const std::size_t n = real_ ? rvals_.size() : cvals_.size();
    if (n != static_cast<std::size_t>(f_))
        throw InvalidCharacterError("value table has length " + std::to_string(n) +
                                    ", conductor is " + std::to_string(f_));

    auto value = [&](long i) -> std::complex<double> {
        return real_ ? std::complex<double>(rvals_[static_cast<std::size_t>(i)], 0.0)
                     : cvals_[static_cast<std::size_t>(i)];
    };
    auto is_zero = [&](long i) {
        return real_ ? rvals_[static_cast<std::size_t>(i)] == 0
                     : std::abs(value(i)) <= kTol;
    };

    if (f_ == 1) {
        if (is_zero(0) || std::abs(value(0) - 1.0) > kTol)
            throw InvalidCharacterError("conductor-1 character must have value 1");
        true_f_ = 1;
        return;
    }

    // zero set: chi(n) = 0 exactly when gcd(n, f) > 1
    for (long i = 0; i < f_; ++i) {
        const bool coprime = std::gcd(i, f_) == 1;
        if (coprime && is_zero(i))
            throw InvalidCharacterError("chi(" + std::to_string(i) +
                                        ") = 0 on a unit residue");
        if (!coprime && !is_zero(i))
            throw InvalidCharacterError("chi(" + std::to_string(i) +
                                        ") must vanish (gcd with conductor > 1)");
    }

    if (std::abs(value(1) - 1.0) > (real_ ? 0.0 : kTol))
        throw InvalidCharacterError("chi(1) must be 1");

    // complete multiplicativity on unit residues
    for (long m = 1; m < f_; ++m) {
        if (std::gcd(m, f_) != 1) continue;
        for (long k = m; k < f_; ++k) {
            if (std::gcd(k, f_) != 1) continue;
            const auto lhs = value(mul_mod(m, k, f_));
            const auto rhs = value(m) * value(k);
            const bool bad = real_ ? lhs != rhs : std::abs(lhs - rhs) > kTol;
            if (bad)
                throw InvalidCharacterError(
                    "multiplicativity fails: chi(" + std::to_string(m) + "*" +
                        std::to_string(k) + " mod " + std::to_string(f_) +
                        ") != chi(" + std::to_string(m) + ")*chi(" + std::to_string(k) + ")",
                    m, k);
        }
    }

    // every nonzero value is a root of unity of order dividing the group exponent
    const long lambda = group_exponent(f_);
    for (long u = 1; u < f_; ++u) {
        if (std::gcd(u, f_) != 1) continue;
        if (real_) {
            // {-1, 1}^lambda = 1 since lambda is even for odd f >= 3
            const int v = rvals_[static_cast<std::size_t>(u)];
            long x = 1;
            for (long i = 0; i < lambda; ++i) x *= v;
            if (x != 1)
                throw InvalidCharacterError("chi(" + std::to_string(u) +
                                            ") is not a root of unity of order dividing " +
                                            std::to_string(lambda));
        } else {
            if (std::abs(pow_int(value(u), lambda) - 1.0) > kTol)
                throw InvalidCharacterError("chi(" + std::to_string(u) +
                                            ")^" + std::to_string(lambda) +
                                            " != 1 within tolerance");
        }
    }

    compute_true_conductor();
    if (strict && true_f_ != f_)
        throw InvalidCharacterError("table is not primitive: true conductor is " +
                                    std::to_string(true_f_) + " < " + std::to_string(f_));
}

void DirichletCharacter::compute_true_conductor() {
    // smallest divisor d of f such that chi is trivial on units congruent to 1 mod d
    auto value = [&](long i) -> std::complex<double> {
        return real_ ? std::complex<double>(rvals_[static_cast<std::size_t>(i)], 0.0)
                     : cvals_[static_cast<std::size_t>(i)];
    };
    for (long d = 1; d <= f_; ++d) {
        if (f_ % d != 0) continue;
        bool ok = true;
        for (long u = 1; u < f_ && ok; ++u) {
            if (std::gcd(u, f_) != 1 || u % d != 1 % d) continue;
            if (std::abs(value(u) - 1.0) > (real_ ? 0.0 : kTol)) ok = false;
        }
        if (ok) {
            true_f_ = d;
            return;
        }
    }
    true_f_ = f_;
}

Rational DirichletCharacter::eval_exact(unsigned long n) const {
    return Rational(eval_int(n));
}

int DirichletCharacter::eval_int(unsigned long n) const {
    if (!real_)
        throw WrongPipelineError("complex-valued character used in the exact pipeline");
    return rvals_[n % static_cast<unsigned long>(f_)];
}

std::complex<double> DirichletCharacter::eval(unsigned long n) const {
    const auto i = n % static_cast<unsigned long>(f_);
    if (real_) return {static_cast<double>(rvals_[i]), 0.0};
    return cvals_[i];
}

}  // namespace qeuler
