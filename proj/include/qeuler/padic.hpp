#pragma once

#include <gmpxx.h>

#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

/// Element of Z/p^M carrying its precision M. All arithmetic stays mod p^M.
class PadicResidue {
public:
    PadicResidue(long p, unsigned precision, mpz_class value);

    long p() const { return p_; }
    unsigned precision() const { return M_; }
    const mpz_class& value() const { return v_; }
    const mpz_class& modulus() const { return mod_; }

    /// Multiplicative inverse; defined exactly when the value is a unit mod p.
    PadicResidue inverse() const;

    /// Base-p digits, least significant first, exactly M of them.
    std::vector<long> digits() const;

    friend bool operator==(const PadicResidue& a, const PadicResidue& b) {
        return a.p_ == b.p_ && a.M_ == b.M_ && a.v_ == b.v_;
    }
    friend bool operator!=(const PadicResidue& a, const PadicResidue& b) {
        return !(a == b);
    }

private:
    long p_;
    unsigned M_;
    mpz_class mod_;  // p^M
    mpz_class v_;    // in [0, p^M)
};

/// One-variable fermionic integrand y -> q^{b y} (x + a y)^n over the domain
/// X_d. q must be an integer with q = 1 (mod p) so that q^j is plain modular
/// exponentiation; d must be coprime to p.
struct IntegrandSpec {
    unsigned n = 0;   // moment
    long x = 0;       // integer shift
    mpz_class q = 1;  // q = 1 (mod p)
    long a = 1;
    long b = 1;
    long d = 1;       // domain X_d

    void validate(long p) const;
};

/// mu_q mass of the cylinder j + dp^N Z_p: q^j / [dp^N]_q.
Rational measure_value(unsigned long j, unsigned N, long p, long d, const Rational& q);

/// Level-N q-Riemann sum of the fermionic integral:
/// sum_{j=0}^{dp^N - 1} (-1)^j q^{b j} (x + a j)^n   (mod p^M).
PadicResidue fermionic_partial_sum(const IntegrandSpec& spec, long p, unsigned N,
                                   unsigned M);

struct StabilizedIntegral {
    PadicResidue residue;
    unsigned level;  // first N with S_N = S_{N+1} (mod p^M)
};

/// First partial sum whose level-N and level-(N+1) values agree mod p^M.
/// Throws NotStabilizedError (carrying the last two residues) if no agreement
/// occurs by N_max.
StabilizedIntegral stabilized_integral(const IntegrandSpec& spec, long p, unsigned M,
                                       unsigned N_max);

/// Rational -> Z/p^M bridge: numerator * denominator^{-1} mod p^M.
/// The denominator must be a unit mod p.
PadicResidue reduce_mod(const Rational& v, long p, unsigned M);

/// r-fold fermionic integral of q^{sum b_j y_j} (x + sum a_j y_j)^n, evaluated
/// through the product structure of the generating function: the multinomial
/// expansion reduces it to one-variable stabilized moment integrals.
StabilizedIntegral multivariate_stabilized_integral(const std::vector<long>& a,
                                                    const std::vector<long>& b,
                                                    unsigned n, long x,
                                                    const mpz_class& q, long p,
                                                    unsigned M, unsigned N_max);

}  // namespace qeuler
