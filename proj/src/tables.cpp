#include "qeuler/tables.hpp"

#include <string>

namespace qeuler {

namespace {

// prod_j (q^{s b_j} e^{s a_j t} + 1), the generating-function denominator with
// integer stretch s (s = 1 plain, s = f twisted)
Series denominator_series(const QEulerSpec& spec, long stretch, unsigned order) {
    Series denom = Series::constant(Rational(1), order);
    for (unsigned j = 0; j < spec.r; ++j) {
        Series factor = spec.q.pow(stretch * spec.b[j]) *
                        Series::exp_linear(Rational(stretch * spec.a[j]), order);
        factor[0] += Rational(1);
        denom *= factor;
    }
    return denom;
}

std::vector<Rational> extract_values(const Series& s, unsigned n_max) {
    std::vector<Rational> values;
    values.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        values.push_back(Rational(factorial_z(n)) * s[n]);
    return values;
}

// iterate all index tuples (n_1..n_r) in [0, f)^r
template <typename F>
void for_each_tuple(unsigned r, long f, F&& body) {
    std::vector<long> idx(r, 0);
    while (true) {
        body(idx);
        unsigned j = 0;
        while (j < r && ++idx[j] == f) idx[j++] = 0;
        if (j == r) break;
    }
}

}  // namespace

void QEulerSpec::validate() const {
    if (r < 1) throw DomainError("spec order r must be >= 1");
    if (a.size() != r || b.size() != r)
        throw DomainError("spec needs exactly r entries in a and b");
    for (unsigned j = 0; j < r; ++j) {
        if (a[j] < 1 || b[j] < 1)
            throw DomainError("spec exponents a_j, b_j must be positive integers");
        if (q.pow(b[j]) == Rational(-1))
            throw SingularSpecError("singular spec: 1 + q^b_" + std::to_string(j + 1) +
                                    " = 0 at q = " + q.str());
    }
}

QEulerTable q_euler_table(const QEulerSpec& spec, unsigned n_max) {
    spec.validate();
    const Series numer =
        Rational(2).pow(spec.r) * Series::exp_linear(spec.x, n_max);
    const Series genfun = numer / denominator_series(spec, 1, n_max);
    return {spec, extract_values(genfun, n_max)};
}

std::vector<std::vector<Rational>> q_euler_polynomials(const QEulerSpec& spec,
                                                       unsigned n_max) {
    QEulerSpec base = spec;
    base.x = Rational(0);
    const QEulerTable table = q_euler_table(base, n_max);
    std::vector<std::vector<Rational>> polys(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        polys[n].resize(n + 1);
        for (unsigned m = 0; m <= n; ++m)
            polys[n][m] = Rational(binomial_z(n, m)) * table.values[n - m];
    }
    return polys;
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Rational> generalized_q_euler_table(const DirichletCharacter& chi,
                                                const QEulerSpec& spec, unsigned n_max) {
    spec.validate();
    if (!chi.is_real())
        throw WrongPipelineError(
            "generalized_q_euler_table needs a real-mode character; "
            "complex characters belong to the analytic pipeline");
    if (!spec.x.is_zero())
        throw DomainError("the character-twisted family carries no shift; spec.x must be 0");
    const long f = chi.conductor();
    for (unsigned j = 0; j < spec.r; ++j)
        if (spec.q.pow(f * spec.b[j]) == Rational(-1))
            throw SingularSpecError("singular twisted spec: 1 + q^{f b_" +
                                    std::to_string(j + 1) + "} = 0");

    Series numer(n_max);
    for_each_tuple(spec.r, f, [&](const std::vector<long>& idx) {
        Rational coeff(1);
        long sum_b = 0, sum_a = 0, sum_idx = 0;
        for (unsigned j = 0; j < spec.r; ++j) {
            coeff *= chi.eval_exact(static_cast<unsigned long>(idx[j]));
            sum_b += spec.b[j] * idx[j];
            sum_a += spec.a[j] * idx[j];
            sum_idx += idx[j];
        }
        if (coeff.is_zero()) return;
        if (sum_idx % 2 != 0) coeff = -coeff;
        coeff *= spec.q.pow(sum_b);
        numer += coeff * Series::exp_linear(Rational(sum_a), n_max);
    });
    numer *= Rational(2).pow(spec.r);

    const Series genfun = numer / denominator_series(spec, f, n_max);
    return extract_values(genfun, n_max);
}

Rational distribution_identity_residual(const DirichletCharacter& chi,
                                        const QEulerSpec& spec, long f, unsigned n) {
    if (f != chi.conductor())
        throw DomainError("distribution identity: f = " + std::to_string(f) +
                          " does not match the character conductor " +
                          std::to_string(chi.conductor()));
    QEulerSpec base = spec;
    base.x = Rational(0);
    const Rational lhs = generalized_q_euler_table(chi, base, n)[n];

    QEulerSpec lifted = base;
    lifted.q = spec.q.pow(f);
    const auto polys = q_euler_polynomials(lifted, n);

    Rational rhs(0);
    for_each_tuple(spec.r, f, [&](const std::vector<long>& idx) {
        Rational coeff(1);
        long sum_b = 0, sum_a = 0, sum_idx = 0;
        for (unsigned j = 0; j < spec.r; ++j) {
            coeff *= chi.eval_exact(static_cast<unsigned long>(idx[j]));
            sum_b += spec.b[j] * idx[j];
            sum_a += spec.a[j] * idx[j];
            sum_idx += idx[j];
        }
        if (coeff.is_zero()) return;
        if (sum_idx % 2 != 0) coeff = -coeff;
        coeff *= spec.q.pow(sum_b);
        rhs += coeff * evaluate_polynomial(polys[n], Rational(sum_a, f));
    });
    rhs *= Rational(f).pow(n);

    return lhs - rhs;
}

}  // namespace qeuler
