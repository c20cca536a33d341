#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

/// Dirichlet character of odd conductor f, stored as its length-f value table.
///
/// Two value domains are supported. Real ("quadratic") characters take values
/// in {-1, 0, 1} and may feed the exact rational pipeline; analytic characters
/// take complex values on the unit circle and are only admitted by the
/// complex-series pipeline. Real characters work in both.
class DirichletCharacter {
public:
    /// The conductor-1 character: chi(n) = 1 for every n (including the stored
    /// chi(0) = 1, which is only reachable through the finite twisted sums,
    /// where f = 1 forces the single index 0).
    static DirichletCharacter trivial();

    /// Builds and fully validates a character from an explicit value table.
    /// strict = true additionally rejects tables whose true conductor is
    /// smaller than f (non-primitive tables).
    static DirichletCharacter from_table(long f, std::vector<Rational> values,
                                         bool strict = true);
    static DirichletCharacter from_table(long f,
                                         std::vector<std::complex<double>> values,
                                         bool strict = true);

    /// Legendre-symbol character mod an odd prime p.
    static DirichletCharacter quadratic(long p);

    /// Text format: first line f, second line f whitespace-separated values,
    /// each "0", "1", "-1", or "re,im".
    static DirichletCharacter load(std::istream& in, bool strict = true);

    long conductor() const { return f_; }

    /// Conductor of the primitive character inducing this table; equals
    /// conductor() exactly when the table is primitive.
    long true_conductor() const { return true_f_; }
    bool is_primitive() const { return true_f_ == f_; }

    bool is_real() const { return real_; }

    /// Periodic extension: value at n mod f. Real mode only.
    Rational eval_exact(unsigned long n) const;
    int eval_int(unsigned long n) const;

    /// Periodic extension, any mode.
    std::complex<double> eval(unsigned long n) const;

private:
    DirichletCharacter() = default;

    void validate(bool strict);
    void compute_true_conductor();

    long f_ = 1;
    long true_f_ = 1;
    bool real_ = true;
    std::vector<int> rvals_;                    // real mode, values in {-1,0,1}
    std::vector<std::complex<double>> cvals_;   // analytic mode
};

}  // namespace qeuler
