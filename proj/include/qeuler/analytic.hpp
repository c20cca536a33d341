#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qeuler/character.hpp"
#include "qeuler/errors.hpp"

namespace qeuler {

/// Parameters of the complex-domain r-fold alternating series. |q| < 1 is the
/// standing assumption; a and b are the positive integer exponent weights.
struct ComplexParams {
    std::complex<double> q;
    std::vector<long> a;
    std::vector<long> b;
    double eps = 1e-12;

    unsigned r() const { return static_cast<unsigned>(a.size()); }
    void validate() const;
};

/// Truncation evidence for one evaluation: the per-dimension index cutoffs
/// actually used, a rigorous upper bound on the absolute value of everything
/// discarded, and the number of terms summed.
struct TruncationCertificate {
    std::vector<long> cutoffs;
    double tail_bound = 0.0;
    unsigned long long terms = 0;
};

struct AnalyticResult {
    std::complex<double> value;
    TruncationCertificate certificate;
};

/// Cutoff plan for series whose non-geometric factor is polynomially bounded,
/// |weight| <= (x + sum a_j n_j)^K on the tail. Chooses a shell budget B with
/// the geometric-majorant tail bound below eps and returns cutoffs
/// N_j = B / b_j. Doubling eps never increases the cutoffs.
TruncationCertificate truncation_plan(const ComplexParams& params, double x, long K,
                                      double eps);

/// Cutoff plan for the exponential-weight series (the generating function):
/// per-dimension geometric ratios w_j = |q|^{b_j} e^{a_j Re t}, each required
/// to be < 1 (otherwise DivergenceError).
TruncationCertificate truncation_plan_exp(const ComplexParams& params, double x,
                                          std::complex<double> t, double eps);

/// r-fold series of the generating function at the point t:
///   2^r sum (-1)^{sum n_j} q^{sum b_j n_j} e^{(sum a_j n_j + x) t}.
/// Must match genfun_closed_form within the certificate bound.
AnalyticResult genfun_series(std::complex<double> t, const ComplexParams& params,
                             double x,
                             const std::vector<long>* cutoffs_override = nullptr);

/// 2^r e^{xt} / prod_j (q^{b_j} e^{a_j t} + 1), evaluated directly.
std::complex<double> genfun_closed_form(std::complex<double> t,
                                        const ComplexParams& params, double x);

/// Moment series 2^r sum (-1)^{sum n_j} q^{sum b_j n_j} (sum a_j n_j + x)^k,
/// indices from 0. The all-zero term uses the 0^0 = 1 convention.
AnalyticResult moment_series(unsigned k, double x, const ComplexParams& params,
                             const std::vector<long>* cutoffs_override = nullptr);

/// Character-twisted moment series, indices from 1:
///   2^r sum (-1)^{sum n_j} q^{sum b_j n_j} prod chi(n_j) (sum a_j n_j)^k.
AnalyticResult moment_series_char(unsigned k, const DirichletCharacter& chi,
                                  const ComplexParams& params,
                                  const std::vector<long>* cutoffs_override = nullptr);

/// Hurwitz-type q-zeta function:
///   2^r sum_{n_j >= 0} (-1)^{sum n_j} q^{sum b_j n_j} (sum a_j n_j + x)^{-s},
/// absolutely convergent for every complex s since |q| < 1. Requires x > 0.
AnalyticResult zeta_r(std::complex<double> s, double x, const ComplexParams& params,
                      const std::vector<long>* cutoffs_override = nullptr);

/// Multivariate Dirichlet L-function:
///   2^r sum_{n_j >= 1} (-1)^{sum n_j} q^{sum b_j n_j} prod chi(n_j)
///       (sum a_j n_j)^{-s}.
AnalyticResult dirichlet_l(std::complex<double> s, const DirichletCharacter& chi,
                           const ComplexParams& params,
                           const std::vector<long>* cutoffs_override = nullptr);

}  // namespace qeuler
