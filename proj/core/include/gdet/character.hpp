#pragma once

#include <optional>
#include <vector>

#include "gdet/cyclotomic.hpp"
#include "gdet/group.hpp"

namespace gdet {

/// A degree-one representation of a finite abelian group, indexed by a
/// residue tuple (a_1, ..., a_r):
///
///   chi(g) = prod_i zeta_{m_i}^(a_i * g_i)
///
/// realized at level N = exponent of the group. Distinct indices give
/// distinct characters, and the full set of indices is the dual group.
class Character {
  public:
    Character(Group group, const Element& index);

    const Group& group() const { return group_; }
    const Element& index() const { return index_; }
    long index_position() const { return index_position_; }
    bool is_trivial() const { return index_position_ == 0; }

    CycNumber operator()(const Element& g) const;
    CycNumber eval_at(long element_index) const;

    /// Pointwise product and inverse; the dual group operation.
    Character operator*(const Character& rhs) const;
    Character inverted() const;

    bool operator==(const Character& rhs) const {
        return group_ == rhs.group_ && index_position_ == rhs.index_position_;
    }

  private:
    Group group_;
    Element index_;
    long index_position_;
    std::vector<long> weights_;  // per-coordinate exponent factors N/m_i * a_i
};

/// An ordered set of characters of one group (by index, canonical order).
struct DualSet {
    Group group;
    std::vector<Character> characters;

    long size() const { return static_cast<long>(characters.size()); }
};

/// All |G| characters.
DualSet dual_group(const Group& g);

/// The characters trivial on every member of h, found by filtering the
/// full dual; size [G:H]. Throws errc::subgroup_mismatch.
DualSet annihilator(const Group& g, const Subgroup& h);

/// One character per left coset of the annihilator of h inside the dual,
/// each the canonically smallest index of its coset; |H| of them.
std::vector<Character> dual_coset_reps(const Group& g, const Subgroup& h);

/// A character of a subgroup, stored as its value list on the members.
class RestrictedCharacter {
  public:
    RestrictedCharacter(Subgroup sub, std::vector<CycNumber> values);

    const Subgroup& subgroup() const { return sub_; }
    /// Values aligned with subgroup().members().
    const std::vector<CycNumber>& values() const { return values_; }
    CycNumber operator()(const Element& h) const;
    CycNumber value_at(long parent_element_index) const;

    bool operator==(const RestrictedCharacter& rhs) const {
        return sub_ == rhs.sub_ && values_ == rhs.values_;
    }

  private:
    Subgroup sub_;
    std::vector<CycNumber> values_;
};

/// Restrictions of the coset representatives to h. Together these are the
/// whole dual of h; a duplicate restriction would contradict the coset
/// decomposition and raises errc::internal_consistency.
std::vector<RestrictedCharacter> restrict_characters(const std::vector<Character>& reps,
                                                     const Subgroup& h);

/// A character trivial on h with chi(g) != 1, for g outside h. For the
/// trivial subgroup the index is written down directly from a nonzero
/// coordinate of g; otherwise the annihilator (the lifted dual of G/H) is
/// scanned in canonical order. Throws errc::no_separator when g is in h.
Character separating_character(const Group& g, const Subgroup& h, const Element& elem);

}  // namespace gdet
