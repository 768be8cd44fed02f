#pragma once

#include <complex>
#include <vector>

#include <gmpxx.h>

#include "gdet/error.hpp"

namespace gdet {

/// Exact rational scalar. GMP keeps these canonical (reduced, positive
/// denominator) under arithmetic.
using Rational = mpq_class;

/// Euler's totient, by trial-division factorization.
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, ascending, monic.
/// Computed as (x^n - 1) / prod of the lower cyclotomic polynomials.
/// Throws errc::domain for n <= 0.
std::vector<mpz_class> cyclotomic_polynomial(int n);

/// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1)
/// reduced modulo the N-th cyclotomic polynomial. The representation is
/// canonical: two values are equal exactly when their coordinate vectors
/// are. zeta_N stands for exp(2*pi*i/N).
///
/// The level N is fixed by the ambient group of a computation; mixing
/// levels raises errc::level_mismatch. Values are immutable.
class CycNumber {
  public:
    static CycNumber zero(int level);
    static CycNumber one(int level);
    static CycNumber from_rational(int level, const Rational& q);
    /// zeta_order^exponent embedded at the given level, i.e.
    /// zeta_level^(exponent * level / order). Requires order | level,
    /// otherwise errc::level_mismatch. Negative exponents are fine.
    static CycNumber root_of_unity(int level, int order, long exponent);

    int level() const { return level_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;        // all coordinates beyond the first vanish
    const Rational& rational_part() const { return coords_[0]; }

    CycNumber operator+(const CycNumber& rhs) const;
    CycNumber operator-(const CycNumber& rhs) const;
    CycNumber operator-() const;
    CycNumber operator*(const CycNumber& rhs) const;
    CycNumber scaled(const Rational& q) const;
    /// Field inverse via the extended Euclidean algorithm against the
    /// minimal polynomial. Throws errc::division_by_zero on zero.
    CycNumber inverse() const;
    CycNumber pow(unsigned long e) const;

    bool operator==(const CycNumber& rhs) const {
        return level_ == rhs.level_ && coords_ == rhs.coords_;
    }

    /// Floating-point image under zeta_N -> exp(2*pi*i/N). Display only;
    /// nothing in the library depends on this.
    std::complex<double> to_complex() const;

  private:
    CycNumber(int level, std::vector<Rational> coords)
        : level_(level), coords_(std::move(coords)) {}

    static void check_levels(const CycNumber& a, const CycNumber& b);

    int level_;
    std::vector<Rational> coords_;
};

inline CycNumber operator*(const Rational& q, const CycNumber& z) { return z.scaled(q); }

}  // namespace gdet
