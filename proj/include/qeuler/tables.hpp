#pragma once

#include <vector>

#include "qeuler/character.hpp"
#include "qeuler/rational.hpp"
#include "qeuler/series.hpp"

namespace qeuler {

/// Parameter bundle naming one family E_{n,q}^{(r)}(x | a; b): order r,
/// exponent weights a_1..a_r and b_1..b_r (positive integers), the rational
/// parameter q, and the polynomial shift x.
struct QEulerSpec {
    unsigned r = 1;
    std::vector<long> a;  // length r, all >= 1
    std::vector<long> b;  // length r, all >= 1
    Rational q;
    Rational x;

    /// Throws DomainError on shape violations and SingularSpecError when some
    /// generating-function denominator vanishes at t = 0 (q^{b_j} = -1).
    void validate() const;
};

struct QEulerTable {
    QEulerSpec spec;
    std::vector<Rational> values;  // values[n] = E_{n,q}^{(r)}(x | a; b)
};

/// E_{n,q}^{(r)}(x | a; b) for n = 0..n_max, extracted from the generating
/// function 2^r e^{xt} / prod_j (q^{b_j} e^{a_j t} + 1). The n! scaling from
/// Taylor coefficients to q-Euler values is applied here and only here.
QEulerTable q_euler_table(const QEulerSpec& spec, unsigned n_max);

/// Coefficient lists of the polynomials E_{n,q}^{(r)}(x | a; b) in x:
/// coefficient of x^m in polynomial n is C(n,m) E_{n-m,q}^{(r)}(0 | a; b).
/// spec.x is ignored.
std::vector<std::vector<Rational>> q_euler_polynomials(const QEulerSpec& spec,
                                                       unsigned n_max);

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x);

/// Character-twisted numbers E_{n,chi,q}^{(r)}(a; b) for n = 0..n_max:
/// finite numerator sum over [0, f)^r of
///   2^r (-1)^{sum n_j} q^{sum b_j n_j} prod_j chi(n_j) e^{(sum a_j n_j) t}
/// divided by prod_j (q^{f b_j} e^{f a_j t} + 1). Requires a real-mode chi;
/// spec.x must be zero (the twisted family has no shift).
std::vector<Rational> generalized_q_euler_table(const DirichletCharacter& chi,
                                                const QEulerSpec& spec, unsigned n_max);

/// LHS - RHS of the distribution identity: LHS is E_{n,chi,q}^{(r)} and RHS is
///   f^n sum_{n_1..n_r=0}^{f-1} (-1)^{sum n_j} prod_j chi(n_j) q^{sum b_j n_j}
///       E_{n,q^f}^{(r)}((sum_j a_j n_j)/f | a; b),
/// the two sides computed by independent routes. f must equal the conductor
/// of chi. Exact zero is the pass condition for odd n.
Rational distribution_identity_residual(const DirichletCharacter& chi,
                                        const QEulerSpec& spec, long f, unsigned n);

}  // namespace qeuler
