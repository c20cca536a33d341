#include "qeuler/padic.hpp"

#include <numeric>
#include <string>

namespace qeuler {

namespace {

mpz_class pow_z(long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

mpz_class mod_norm(mpz_class v, const mpz_class& m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

}  // namespace

PadicResidue::PadicResidue(long p, unsigned precision, mpz_class value)
    : p_(p), M_(precision), mod_(pow_z(p, precision)) {
    if (!is_odd_prime(p)) throw DomainError("residue modulus needs an odd prime, got " +
                                            std::to_string(p));
    if (precision < 1) throw DomainError("residue precision must be >= 1");
    v_ = mod_norm(std::move(value), mod_);
}

PadicResidue PadicResidue::inverse() const {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), v_.get_mpz_t(), mod_.get_mpz_t()) == 0)
        throw NonUnitDenominatorError("residue " + v_.get_str() +
                                      " is not a unit mod " + std::to_string(p_));
    return PadicResidue(p_, M_, std::move(inv));
}

std::vector<long> PadicResidue::digits() const {
    std::vector<long> ds;
    ds.reserve(M_);
    mpz_class rest = v_;
    for (unsigned i = 0; i < M_; ++i) {
        mpz_class digit = rest % p_;
        ds.push_back(digit.get_si());
        rest /= p_;
    }
    return ds;
}

void IntegrandSpec::validate(long p) const {
    if (!is_odd_prime(p)) throw DomainError("p must be an odd prime, got " +
                                            std::to_string(p));
    if (a < 1 || b < 1) throw DomainError("integrand exponents a, b must be >= 1");
    if (d < 1 || std::gcd(d, p) != 1)
        throw DomainError("domain parameter d must be positive and coprime to p");
    if ((q - 1) % p != 0)
        throw DomainError("q must satisfy q = 1 (mod p) for p-adic convergence; got q = " +
                          q.get_str() + ", p = " + std::to_string(p));
}

Rational measure_value(unsigned long j, unsigned N, long p, long d, const Rational& q) {
    if (!is_odd_prime(p)) throw DomainError("p must be an odd prime");
    if (d < 1 || std::gcd(d, p) != 1)
        throw DomainError("d must be positive and coprime to p");
    const mpz_class count = d * pow_z(p, N);  // dp^N cylinders at level N
    if (mpz_class(j) >= count)
        throw DomainError("cylinder index out of range: j = " + std::to_string(j));
    Rational bracket;  // [dp^N]_q
    if (q.is_one()) {
        bracket = Rational(count);
    } else {
        mpz_class qn_num, qn_den;  // q^count
        mpz_pow_ui(qn_num.get_mpz_t(), q.num().get_mpz_t(), count.get_ui());
        mpz_pow_ui(qn_den.get_mpz_t(), q.den().get_mpz_t(), count.get_ui());
        bracket = (Rational(1) - Rational(qn_num, qn_den)) / (Rational(1) - q);
    }
    if (bracket.is_zero())
        throw DomainError("[dp^N]_q vanishes; the measure is undefined at q = " + q.str());
    return q.pow(static_cast<long>(j)) / bracket;
}

namespace {

// sum_{j=0}^{count-1} (-1)^j q^{b j} (x + a j)^n (mod p^M), running state kept
// incrementally so stabilized_integral can extend the same sum level by level
struct FermionicSum {
    FermionicSum(const IntegrandSpec& spec, long p, unsigned M)
        : spec_(spec), mod_(pow_z(p, M)) {
        qb_step_ = mod_norm(mpz_class(1), mod_);
        mpz_class qmod = mod_norm(spec.q, mod_);
        for (long i = 0; i < spec.b; ++i) qb_step_ = qb_step_ * qmod % mod_;
        qpow_ = 1;
        base_ = mod_norm(mpz_class(spec.x), mod_);
        astep_ = mod_norm(mpz_class(spec.a), mod_);
        sum_ = 0;
        next_j_ = 0;
    }

    void extend_to(const mpz_class& count) {
        mpz_class term, basepow;
        while (next_j_ < count) {
            mpz_powm_ui(basepow.get_mpz_t(), base_.get_mpz_t(), spec_.n, mod_.get_mpz_t());
            term = qpow_ * basepow % mod_;
            if (mpz_odd_p(next_j_.get_mpz_t()))
                sum_ = mod_norm(sum_ - term, mod_);
            else
                sum_ = mod_norm(sum_ + term, mod_);
            qpow_ = qpow_ * qb_step_ % mod_;
            base_ = (base_ + astep_) % mod_;
            ++next_j_;
        }
    }

    const mpz_class& value() const { return sum_; }

private:
    IntegrandSpec spec_;
    mpz_class mod_, qb_step_, qpow_, base_, astep_, sum_, next_j_;
};

}  // namespace

PadicResidue fermionic_partial_sum(const IntegrandSpec& spec, long p, unsigned N,
                                   unsigned M) {
    spec.validate(p);
    if (N < 1) throw DomainError("level N must be >= 1");
    FermionicSum sum(spec, p, M);
    sum.extend_to(spec.d * pow_z(p, N));
    return PadicResidue(p, M, sum.value());
}

StabilizedIntegral stabilized_integral(const IntegrandSpec& spec, long p, unsigned M,
                                       unsigned N_max) {
    spec.validate(p);
    if (N_max < 2) throw DomainError("stabilization needs N_max >= 2");
    FermionicSum sum(spec, p, M);
    sum.extend_to(spec.d * pow_z(p, 1));
    mpz_class prev = sum.value();  // S_N
    mpz_class before_prev;         // S_{N-1}
    for (unsigned N = 1; N < N_max; ++N) {
        sum.extend_to(spec.d * pow_z(p, N + 1));
        if (sum.value() == prev)
            return {PadicResidue(p, M, prev), N};
        before_prev = prev;
        prev = sum.value();
    }
    throw NotStabilizedError(
        "fermionic integral did not stabilize mod " + std::to_string(p) + "^" +
            std::to_string(M) + " by level " + std::to_string(N_max),
        before_prev.get_str(), prev.get_str(), N_max);
}

PadicResidue reduce_mod(const Rational& v, long p, unsigned M) {
    if (v.den() % p == 0)
        throw NonUnitDenominatorError("denominator of " + v.str() +
                                      " is divisible by p = " + std::to_string(p));
    const mpz_class mod = pow_z(p, M);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), v.den().get_mpz_t(), mod.get_mpz_t());
    return PadicResidue(p, M, v.num() * inv);
}

StabilizedIntegral multivariate_stabilized_integral(const std::vector<long>& a,
                                                    const std::vector<long>& b,
                                                    unsigned n, long x,
                                                    const mpz_class& q, long p,
                                                    unsigned M, unsigned N_max) {
    if (a.empty() || a.size() != b.size())
        throw DomainError("multivariate integral needs matching nonempty a and b");
    const auto r = a.size();
    const mpz_class mod = pow_z(p, M);

    // one-variable moments mu_j(k) = integal of q^{b_j y} y^k, k = 0..n
    unsigned level = 1;
    std::vector<std::vector<mpz_class>> mu(r);
    for (std::size_t j = 0; j < r; ++j) {
        mu[j].resize(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            IntegrandSpec one{k, 0, q, 1, b[j], 1};
            const auto res = stabilized_integral(one, p, M, N_max);
            mu[j][k] = res.residue.value();
            level = std::max(level, res.level);
        }
    }

    // multinomial expansion of (x + sum a_j y_j)^n over the factorized moments
    const mpz_class xmod = mod_norm(mpz_class(x), mod);
    std::vector<mpz_class> xpow(n + 1), apow_flat((n + 1) * r);
    xpow[0] = mod_norm(mpz_class(1), mod);
    for (unsigned k = 1; k <= n; ++k) xpow[k] = xpow[k - 1] * xmod % mod;
    for (std::size_t j = 0; j < r; ++j) {
        apow_flat[j] = mod_norm(mpz_class(1), mod);
        for (unsigned k = 1; k <= n; ++k)
            apow_flat[k * r + j] = apow_flat[(k - 1) * r + j] * a[j] % mod;
    }

    mpz_class total = 0;
    std::vector<unsigned> ks(r, 0);
    // enumerate k_1..k_r with sum <= n; k_0 = n - sum goes to the x factor
    auto recurse = [&](auto&& self, std::size_t j, unsigned used,
                       const mpz_class& coeff) -> void {
        if (j == r) {
            mpz_class term = coeff * xpow[n - used] % mod;
            for (std::size_t i = 0; i < r; ++i)
                term = term * apow_flat[ks[i] * r + i] % mod * mu[i][ks[i]] % mod;
            total = (total + term) % mod;
            return;
        }
        for (unsigned k = 0; used + k <= n; ++k) {
            ks[j] = k;
            self(self, j + 1, used + k, coeff * binomial_z(n - used, k) % mod);
        }
    };
    recurse(recurse, 0, 0, mpz_class(1));

    return {PadicResidue(p, M, total), level};
}

}  // namespace qeuler
