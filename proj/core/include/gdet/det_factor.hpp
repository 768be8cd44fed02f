#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gdet/group_algebra.hpp"

namespace gdet {

/// The matrix (x_{g h^-1})_{g,h} under the canonical numbering. Entries
/// store the variable index; every row and column is a permutation of the
/// variable set.
struct GroupMatrix {
    Group group;
    std::vector<std::vector<long>> entries;  // entries[row][col]
};

GroupMatrix group_matrix(const Group& g);

/// Orders above this default are too large for the permutation-sum
/// determinant (8! terms at 8).
inline constexpr int kDefaultOracleBound = 8;

/// Permutation-sum (Leibniz) expansion of the group matrix, exact and
/// deliberately naive: it never touches character or factorization code,
/// so it can referee them. Throws errc::oracle_bound above the bound.
Poly leibniz_determinant(const GroupMatrix& m, int oracle_bound = kDefaultOracleBound);

enum class VerifyStatus {
    oracle_verified,       // compared exactly against the Leibniz expansion
    unverified_by_oracle,  // group order above the oracle bound
    identity_checked,      // verified by an exact algebraic identity instead
};

std::string_view to_string(VerifyStatus s);

/// A factorization Theta(G) = prod_i f_i with the subgroup coefficients
/// A_h that build the factors f_i = sum_h chi_i(h) A_h.
struct Factorization {
    Group group;
    Subgroup subgroup;
    std::vector<std::pair<long, Poly>> coefficients;  // (member index, A_h)
    std::vector<Poly> factors;                        // |H| of them
    Poly product;                                     // expanded, == Theta(G)
    VerifyStatus status;
};

/// The same factorization before collapsing: Theta(G) e as a product of
/// |H| algebra elements supported on H.
struct ExtendedFactorization {
    Group group;
    Subgroup subgroup;
    std::vector<std::pair<long, Poly>> coefficients;  // (member index, A_h)
    std::vector<Character> rep_characters;            // dual coset representatives
    std::vector<AlgElement> factors;                  // twist(chi_i, sum A_h h)
    AlgElement product;                               // == Theta(G) * e
    Poly determinant;                                 // the coefficient at e
    VerifyStatus status;
};

/// Factorization engine for one group. The Leibniz determinant is expanded
/// once at construction when the order is within the oracle bound; all
/// results produced afterwards are cross-checked against it.
class FactorEngine {
  public:
    explicit FactorEngine(Group group, int oracle_bound = kDefaultOracleBound);

    const Group& group() const { return group_; }
    int oracle_bound() const { return oracle_bound_; }
    bool oracle_available() const { return oracle_.has_value(); }
    const Poly& oracle_determinant() const;

    /// The classical factorization into |G| linear forms (the H = G case).
    Factorization dedekind() const;

    /// Product of sum_g chi(g) x_g g over the annihilator of h. Its support
    /// is contained in h (anything else raises errc::internal_consistency)
    /// and each coefficient A_h is homogeneous of degree [G:H]. For h = G
    /// this is literally sum_h x_h h.
    AlgElement subgroup_coefficients(const Subgroup& h) const;

    /// Theta(G) e = prod over the restricted dual of h, in the group
    /// algebra. Support {e} and agreement of the coefficient with the
    /// oracle are enforced (errc::theorem_violation on failure).
    ExtendedFactorization extended(const Subgroup& h) const;
    /// Same, with caller-chosen dual coset representatives; the result does
    /// not depend on the choice.
    ExtendedFactorization extended(const Subgroup& h, const std::vector<Character>& reps) const;

    /// Theta(G) = prod of the |H| collapsed factors, as scalar polynomials.
    Factorization generalized(const Subgroup& h) const;
    /// Collapse an already-computed extension instead of recomputing it.
    Factorization generalized_from(const ExtendedFactorization& ext) const;

    /// Inverse of sum_g x_g g for scalar x_g with Theta(G) != 0:
    /// the product of the nontrivially twisted elements divided by the
    /// determinant. Throws errc::singular_element (naming the vanishing
    /// factor's character) when Theta = 0; the returned coefficients are
    /// verified by exact round-trip multiplication.
    std::vector<CycNumber> inverse(const std::vector<CycNumber>& assignment) const;

  private:
    void check_subgroup(const Subgroup& h) const;

    Group group_;
    int oracle_bound_;
    std::optional<Poly> oracle_;
};

}  // namespace gdet
