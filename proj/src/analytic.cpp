#include "qeuler/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace qeuler {

namespace {

using complex_ld = std::complex<long double>;

std::complex<double> pow_int(std::complex<double> z, long e) {
    std::complex<double> r(1.0, 0.0);
    for (long i = 0; i < e; ++i) r *= z;
    return r;
}

complex_ld pow_int(complex_ld z, long e) {
    complex_ld r(1.0L, 0.0L);
    for (long i = 0; i < e; ++i) r *= z;
    return r;
}

double pow_int(double z, long e) {
    double r = 1.0;
    for (long i = 0; i < e; ++i) r *= z;
    return r;
}

long double pow_int(long double z, long e) {
    long double r = 1.0L;
    for (long i = 0; i < e; ++i) r *= z;
    return r;
}

// Neumaier-compensated accumulator; the alternating r-fold sums cancel
// heavily, so the summation error must stay far below the tail bounds
struct CompensatedSum {
    long double sum = 0.0L;
    long double comp = 0.0L;

    void add(long double x) {
        const long double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    long double result() const { return sum + comp; }
};

// smallest shell budget B such that the lattice tail beyond { sum b_j n_j <= B }
// is below eps, using the majorant
//   sum_{m > B} (m+1)^L z^m <= z^{B+1} (B+L+2)^L / (1-z)^{L+1}
// (termwise domination of m^L by (B'+L)^L C(m-B'+L, L) for m >= B')
double power_tail_bound(unsigned r, double z, double c, long K, long B) {
    if (z == 0.0) return 0.0;
    const long L = K + static_cast<long>(r) - 1;
    return std::ldexp(1.0, static_cast<int>(r)) * pow_int(c, K) *
           std::pow(z, static_cast<double>(B + 1)) *
           std::pow(static_cast<double>(B + L + 2), static_cast<double>(L)) /
           std::pow(1.0 - z, static_cast<double>(L + 1));
}

// weight majorant constant: x + sum a_j n_j <= c (1 + m) on the shell
// sum b_j n_j = m, with c = max(1, x, max a / min b)
double weight_scale(const ComplexParams& P, double x) {
    const long max_a = *std::max_element(P.a.begin(), P.a.end());
    const long min_b = *std::min_element(P.b.begin(), P.b.end());
    return std::max({1.0, x, static_cast<double>(max_a) / static_cast<double>(min_b)});
}

// lexicographic box sum over n in prod_j [start, cutoffs_j]; Weight maps the
// linear form sum a_j n_j to the non-geometric factor of the term
template <typename Weight>
std::complex<double> box_sum(const ComplexParams& P, const std::vector<long>& cutoffs,
                             long start, const DirichletCharacter* chi, Weight&& weight,
                             unsigned long long& terms) {
    const unsigned r = P.r();
    const complex_ld q(P.q.real(), P.q.imag());
    // per-dimension tables of q^{b_j n}, and character values when twisted
    std::vector<std::vector<complex_ld>> qpow(r), chival(r);
    for (unsigned j = 0; j < r; ++j) {
        const auto qb = pow_int(q, P.b[j]);
        qpow[j].resize(static_cast<std::size_t>(std::max<long>(cutoffs[j], 0)) + 1);
        qpow[j][0] = 1.0L;
        for (std::size_t n = 1; n < qpow[j].size(); ++n) qpow[j][n] = qpow[j][n - 1] * qb;
        if (chi) {
            chival[j].resize(qpow[j].size());
            for (std::size_t n = 0; n < chival[j].size(); ++n) {
                const auto v = chi->eval(n);
                chival[j][n] = complex_ld(v.real(), v.imag());
            }
        }
    }

    terms = 0;
    for (unsigned j = 0; j < r; ++j)
        if (cutoffs[j] < start) return {0.0, 0.0};  // empty box

    CompensatedSum re, im;
    std::vector<long> n(r, start);
    while (true) {
        long A = 0, parity = 0;
        complex_ld factor(1.0L, 0.0L);
        for (unsigned j = 0; j < r; ++j) {
            A += P.a[j] * n[j];
            parity += n[j];
            factor *= qpow[j][static_cast<std::size_t>(n[j])];
            if (chi) factor *= chival[j][static_cast<std::size_t>(n[j])];
        }
        complex_ld term = factor * weight(A);
        if (parity % 2 != 0) term = -term;
        re.add(term.real());
        im.add(term.imag());
        ++terms;

        unsigned j = 0;
        while (j < r && ++n[j] > cutoffs[j]) n[j++] = start;
        if (j == r) break;
    }
    const long double scale = std::ldexp(1.0L, static_cast<int>(r));
    return {static_cast<double>(scale * re.result()),
            static_cast<double>(scale * im.result())};
}

// certificate for an explicitly requested box: the bound is recomputed at the
// largest shell budget the box is guaranteed to cover
TruncationCertificate override_certificate(const ComplexParams& P, double x, long K,
                                           const std::vector<long>& cutoffs) {
    long B = -1;
    for (unsigned j = 0; j < P.r(); ++j) {
        const long covered = P.b[j] * (cutoffs[j] + 1) - 1;
        B = (B < 0) ? covered : std::min(B, covered);
    }
    TruncationCertificate cert;
    cert.cutoffs = cutoffs;
    cert.tail_bound = power_tail_bound(P.r(), std::abs(P.q), weight_scale(P, x), K,
                                       std::max<long>(B, 0));
    return cert;
}

TruncationCertificate plan_or_override(const ComplexParams& P, double x, long K,
                                       const std::vector<long>* cutoffs_override) {
    if (!cutoffs_override) return truncation_plan(P, x, K, P.eps);
    if (cutoffs_override->size() != P.r())
        throw DomainError("cutoff override has wrong dimension");
    return override_certificate(P, x, K, *cutoffs_override);
}

long zeta_weight_exponent(std::complex<double> s) {
    return std::max(0L, static_cast<long>(std::ceil(-s.real())));
}

}  // namespace

void ComplexParams::validate() const {
    if (a.empty() || a.size() != b.size())
        throw DomainError("params need matching nonempty a and b");
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] < 1 || b[j] < 1)
            throw DomainError("exponent weights a_j, b_j must be positive integers");
    if (!(std::abs(q) < 1.0))
        throw DomainError("|q| must be strictly less than 1, got |q| = " +
                          std::to_string(std::abs(q)));
    if (!(eps > 0.0)) throw DomainError("truncation tolerance eps must be positive");
}

TruncationCertificate truncation_plan(const ComplexParams& params, double x, long K,
                                      double eps) {
    params.validate();
    if (!(eps > 0.0)) throw DomainError("truncation tolerance eps must be positive");
    if (K < 0) throw DomainError("weight exponent must be >= 0");
    const double z = std::abs(params.q);
    const double c = weight_scale(params, x);

    TruncationCertificate cert;
    cert.cutoffs.resize(params.r());
    constexpr long kMaxBudget = 2'000'000;
    long B = 0;
    for (; B <= kMaxBudget; ++B) {
        const double bound = power_tail_bound(params.r(), z, c, K, B);
        if (bound <= eps) {
            cert.tail_bound = bound;
            break;
        }
    }
    if (B > kMaxBudget)
        throw DomainError("truncation plan exceeds the supported term budget");
    for (unsigned j = 0; j < params.r(); ++j) cert.cutoffs[j] = B / params.b[j];
    return cert;
}

namespace {

struct ExpMajorant {
    std::vector<double> w;  // per-dimension geometric ratios, all < 1
    double full;            // 2^r e^{x Re t} / prod_j (1 - w_j)
};

ExpMajorant exp_majorant(const ComplexParams& P, double x, std::complex<double> t) {
    const unsigned r = P.r();
    const double z = std::abs(P.q);
    ExpMajorant m;
    m.w.resize(r);
    for (unsigned j = 0; j < r; ++j) {
        m.w[j] = pow_int(z, P.b[j]) * std::exp(P.a[j] * t.real());
        if (!(m.w[j] < 1.0))
            throw DivergenceError("series diverges: |q|^b_" + std::to_string(j + 1) +
                                  " e^{a_" + std::to_string(j + 1) + " Re t} = " +
                                  std::to_string(m.w[j]) + " >= 1");
    }
    m.full = std::ldexp(1.0, static_cast<int>(r)) * std::exp(x * t.real());
    for (unsigned j = 0; j < r; ++j) m.full /= 1.0 - m.w[j];
    return m;
}

// union bound over the box complement: sum_j full * w_j^{N_j + 1}
double exp_tail_bound(const ExpMajorant& m, const std::vector<long>& cutoffs) {
    double bound = 0.0;
    for (std::size_t j = 0; j < m.w.size(); ++j)
        bound += m.full * std::pow(m.w[j], static_cast<double>(cutoffs[j] + 1));
    return bound;
}

}  // namespace

TruncationCertificate truncation_plan_exp(const ComplexParams& params, double x,
                                          std::complex<double> t, double eps) {
    params.validate();
    if (!(eps > 0.0)) throw DomainError("truncation tolerance eps must be positive");
    const unsigned r = params.r();
    const ExpMajorant m = exp_majorant(params, x, t);

    TruncationCertificate cert;
    cert.cutoffs.resize(r);
    for (unsigned j = 0; j < r; ++j) {
        // give each dimension an eps/r share of the budget
        double tail = m.full * m.w[j];
        long N = 0;
        while (tail > eps / r && tail > 0.0) {
            tail *= m.w[j];
            ++N;
        }
        cert.cutoffs[j] = N;
    }
    cert.tail_bound = exp_tail_bound(m, cert.cutoffs);
    return cert;
}

AnalyticResult genfun_series(std::complex<double> t, const ComplexParams& params,
                             double x, const std::vector<long>* cutoffs_override) {
    params.validate();
    TruncationCertificate cert = truncation_plan_exp(params, x, t, params.eps);
    if (cutoffs_override) {
        if (cutoffs_override->size() != params.r())
            throw DomainError("cutoff override has wrong dimension");
        cert.cutoffs = *cutoffs_override;
        cert.tail_bound = exp_tail_bound(exp_majorant(params, x, t), cert.cutoffs);
    }
    AnalyticResult res;
    const complex_ld t_ld(t.real(), t.imag());
    res.value = box_sum(
        params, cert.cutoffs, 0, nullptr,
        [&](long A) {
            return std::exp(t_ld * (static_cast<long double>(A) +
                                    static_cast<long double>(x)));
        },
        cert.terms);
    res.certificate = std::move(cert);
    return res;
}

std::complex<double> genfun_closed_form(std::complex<double> t,
                                        const ComplexParams& params, double x) {
    params.validate();
    std::complex<double> denom(1.0, 0.0);
    for (unsigned j = 0; j < params.r(); ++j)
        denom *= pow_int(params.q, params.b[j]) *
                     std::exp(static_cast<double>(params.a[j]) * t) +
                 1.0;
    return std::ldexp(1.0, static_cast<int>(params.r())) * std::exp(x * t) / denom;
}

AnalyticResult moment_series(unsigned k, double x, const ComplexParams& params,
                             const std::vector<long>* cutoffs_override) {
    params.validate();
    if (x < 0.0) throw DomainError("moment series needs x >= 0");
    TruncationCertificate cert =
        plan_or_override(params, x, static_cast<long>(k), cutoffs_override);
    AnalyticResult res;
    res.value = box_sum(
        params, cert.cutoffs, 0, nullptr,
        [&](long A) {
            // integer power with the 0^0 = 1 convention
            return complex_ld(pow_int(static_cast<long double>(A) +
                                          static_cast<long double>(x),
                                      static_cast<long>(k)),
                              0.0L);
        },
        cert.terms);
    res.certificate = std::move(cert);
    return res;
}

AnalyticResult moment_series_char(unsigned k, const DirichletCharacter& chi,
                                  const ComplexParams& params,
                                  const std::vector<long>* cutoffs_override) {
    params.validate();
    TruncationCertificate cert =
        plan_or_override(params, 0.0, static_cast<long>(k), cutoffs_override);
    AnalyticResult res;
    res.value = box_sum(
        params, cert.cutoffs, 1, &chi,
        [&](long A) {
            return complex_ld(pow_int(static_cast<long double>(A),
                                      static_cast<long>(k)),
                              0.0L);
        },
        cert.terms);
    res.certificate = std::move(cert);
    return res;
}

AnalyticResult zeta_r(std::complex<double> s, double x, const ComplexParams& params,
                      const std::vector<long>* cutoffs_override) {
    params.validate();
    if (!(x > 0.0)) throw DomainError("zeta_r needs x > 0");
    TruncationCertificate cert =
        plan_or_override(params, x, zeta_weight_exponent(s), cutoffs_override);
    AnalyticResult res;
    const complex_ld s_ld(s.real(), s.imag());
    res.value = box_sum(
        params, cert.cutoffs, 0, nullptr,
        [&](long A) {
            // (A + x)^{-s} on the principal branch; the base is a positive real
            return std::exp(-s_ld * std::log(static_cast<long double>(A) +
                                             static_cast<long double>(x)));
        },
        cert.terms);
    res.certificate = std::move(cert);
    return res;
}

AnalyticResult dirichlet_l(std::complex<double> s, const DirichletCharacter& chi,
                           const ComplexParams& params,
                           const std::vector<long>* cutoffs_override) {
    params.validate();
    TruncationCertificate cert =
        plan_or_override(params, 0.0, zeta_weight_exponent(s), cutoffs_override);
    AnalyticResult res;
    const complex_ld s_ld(s.real(), s.imag());
    res.value = box_sum(
        params, cert.cutoffs, 1, &chi,
        [&](long A) {
            return std::exp(-s_ld * std::log(static_cast<long double>(A)));
        },
        cert.terms);
    res.certificate = std::move(cert);
    return res;
}

}  // namespace qeuler
