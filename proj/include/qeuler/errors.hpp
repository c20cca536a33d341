#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically invalid input: 0^{-1}, non-prime modulus, x <= 0 for zeta,
// conductor mismatch, series order mismatch, malformed rational strings, ...
struct DomainError : Error {
    using Error::Error;
};

// Division by a power series whose constant term is zero.
struct SingularSeriesError : Error {
    using Error::Error;
};

// Parameter bundle whose generating function is singular at t = 0,
// i.e. q^{b_j} = -1 for some j.
struct SingularSpecError : Error {
    using Error::Error;
};

// Character table that violates a character axiom. For multiplicativity
// failures the witnessing residue pair (m, n) is carried along.
struct InvalidCharacterError : Error {
    long long m = -1;
    long long n = -1;

    explicit InvalidCharacterError(const std::string& what) : Error(what) {}
    InvalidCharacterError(const std::string& what, long long m_, long long n_)
        : Error(what), m(m_), n(n_) {}
};

// A complex-valued character fed into the exact (rational) pipeline.
struct WrongPipelineError : Error {
    using Error::Error;
};

// reduce_mod of a rational whose denominator is divisible by p.
struct NonUnitDenominatorError : Error {
    using Error::Error;
};

// Fermionic partial sums did not agree at consecutive levels by N_max.
// Carries the last two level residues as decimal strings.
struct NotStabilizedError : Error {
    std::string last_residue;
    std::string previous_residue;
    unsigned last_level = 0;

    NotStabilizedError(const std::string& what, std::string prev,
                       std::string last, unsigned level)
        : Error(what),
          last_residue(std::move(last)),
          previous_residue(std::move(prev)),
          last_level(level) {}
};

// Analytic series evaluated outside its region of absolute convergence.
struct DivergenceError : Error {
    using Error::Error;
};

}  // namespace qeuler
