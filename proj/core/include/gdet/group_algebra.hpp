#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gdet/character.hpp"
#include "gdet/group.hpp"
#include "gdet/poly.hpp"

namespace gdet {

/// An element sum_g A_g * g of the group algebra with polynomial
/// coefficients. Coefficients are keyed by canonical element index and
/// zero polynomials are never stored.
class AlgElement {
  public:
    AlgElement(Group group, int level) : group_(std::move(group)), level_(level) {}

    static AlgElement from_coefficients(Group group, int level, std::map<long, Poly> coeffs);

    const Group& group() const { return group_; }
    int level() const { return level_; }
    const std::map<long, Poly>& coefficients() const { return coeffs_; }
    Poly coefficient(long element_index) const;  // zero polynomial if absent
    bool is_zero() const { return coeffs_.empty(); }

    /// Group elements carrying a nonzero coefficient, ascending.
    std::vector<long> support() const;

    AlgElement operator+(const AlgElement& rhs) const;
    /// Convolution: the coefficient of k is sum over gh = k of A_g * B_h.
    AlgElement operator*(const AlgElement& rhs) const;
    bool operator==(const AlgElement& rhs) const;

  private:
    void check_compatible(const AlgElement& rhs) const;

    Group group_;
    int level_;
    std::map<long, Poly> coeffs_;
};

/// 1 * e, the multiplicative identity.
AlgElement algebra_one(const Group& g, int level);

/// sum_g chi(g) * x_g * g; without a character, sum_g x_g * g.
AlgElement generic_element(const Group& g, const std::optional<Character>& chi = std::nullopt);

/// The coefficient-twisting automorphism: sum A_g g -> sum chi(g) A_g g.
AlgElement twist(const Character& chi, const AlgElement& a);

/// The algebra map sending every group element to 1; collapses an algebra
/// element to the plain sum of its coefficient polynomials.
Poly collapse(const AlgElement& a);

/// Convolution of scalar coefficient vectors, indexed by canonical element
/// order; the group-algebra product with numeric coefficients.
std::vector<CycNumber> scalar_convolve(const Group& g, const std::vector<CycNumber>& a,
                                       const std::vector<CycNumber>& b);

}  // namespace gdet
