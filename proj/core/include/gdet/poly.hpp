#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gdet/cyclotomic.hpp"

namespace gdet {

/// Exponent vector over the variable set {x_g}, indexed by the canonical
/// element order of the ambient group.
class Monomial {
  public:
    explicit Monomial(int nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

    int nvars() const { return static_cast<int>(exps_.size()); }
    unsigned exponent(int var) const { return exps_[var]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    int total_degree() const;
    Monomial times(const Monomial& rhs) const;

    bool operator==(const Monomial&) const = default;

  private:
    std::vector<unsigned> exps_;
};

/// Graded lexicographic, larger first; drives the canonical term order.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q(zeta_N). Terms are kept in
/// descending graded-lex order with no zero coefficients, so equal
/// polynomials have identical term maps.
class Poly {
  public:
    using TermMap = std::map<Monomial, CycNumber, GradedLexGreater>;

    Poly(int nvars, int level) : nvars_(nvars), level_(level) {}

    static Poly variable(int nvars, int level, int var);
    static Poly constant(int nvars, int level, const CycNumber& c);
    static Poly constant(int nvars, int level, const Rational& q);
    /// Normalizes: zero coefficients are dropped.
    static Poly from_terms(int nvars, int level, TermMap terms);

    int nvars() const { return nvars_; }
    int level() const { return level_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator-() const;
    Poly operator*(const Poly& rhs) const;
    Poly scaled(const CycNumber& c) const;
    bool operator==(const Poly& rhs) const;

    /// Max total degree over the terms; nullopt for the zero polynomial
    /// (the minus-infinity sentinel).
    std::optional<int> total_degree() const;
    /// All terms share the total degree; vacuously true for zero.
    bool is_homogeneous() const;

    /// Exact evaluation. The assignment must cover every variable that
    /// appears with a nonzero exponent (errc::incomplete_assignment) and
    /// its values must live at the polynomial's level.
    CycNumber eval(const std::map<int, CycNumber>& assignment) const;

  private:
    void check_compatible(const Poly& rhs) const;

    int nvars_;
    int level_;
    TermMap terms_;
};

}  // namespace gdet
