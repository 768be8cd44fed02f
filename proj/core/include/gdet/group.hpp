#pragma once

#include <compare>
#include <vector>

#include "gdet/error.hpp"

namespace gdet {

/// A residue tuple (a_1, ..., a_r) with 0 <= a_i < m_i.
struct Element {
    std::vector<int> coords;

    Element() = default;
    explicit Element(std::vector<int> c) : coords(std::move(c)) {}

    auto operator<=>(const Element&) const = default;
};

/// A finite abelian group presented as Z/m_1 x ... x Z/m_r.
///
/// Elements carry a canonical total order: lexicographic on tuples, identity
/// first. Internally an element is addressed by its position in that order
/// (mixed-radix index with the last coordinate varying fastest). All values
/// are immutable after construction.
class Group {
  public:
    /// Throws errc::invalid_group on an empty sequence or a modulus <= 0.
    explicit Group(std::vector<int> moduli);

    int rank() const { return static_cast<int>(moduli_.size()); }
    const std::vector<int>& moduli() const { return moduli_; }
    long order() const { return order_; }

    /// The exponent N = lcm(m_1, ..., m_r); the cyclotomic level for all
    /// character values of this group.
    int exponent() const { return exponent_; }

    Element element_at(long index) const;
    long index_of(const Element& e) const;  // strict: residues must be reduced
    Element reduce(const Element& e) const; // maps arbitrary ints into range

    long identity() const { return 0; }
    long multiply(long a, long b) const;
    long inverse(long a) const;
    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;

    bool operator==(const Group& other) const { return moduli_ == other.moduli_; }

  private:
    void check_index(long i) const;

    std::vector<int> moduli_;
    std::vector<long> strides_;
    long order_ = 1;
    int exponent_ = 1;
};

/// A subgroup given by its closed member set, ordered as in the parent.
class Subgroup {
  public:
    /// Smallest subgroup containing the generators; empty set gives {e}.
    /// Throws errc::invalid_element for a generator outside the group.
    static Subgroup closure(const Group& g, const std::vector<Element>& generators);
    static Subgroup trivial(const Group& g);
    static Subgroup full(const Group& g);

    const Group& parent() const { return parent_; }
    /// Ascending canonical indices; the identity (index 0) comes first.
    const std::vector<long>& members() const { return members_; }
    const std::vector<Element>& generators() const { return generators_; }
    long order() const { return static_cast<long>(members_.size()); }
    long index() const { return parent_.order() / order(); }
    bool contains(long element_index) const;
    bool is_full() const { return order() == parent_.order(); }

    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && members_ == other.members_;
    }

  private:
    Subgroup(Group parent, std::vector<long> members, std::vector<Element> generators);

    Group parent_;
    std::vector<long> members_;
    std::vector<char> mask_;
    std::vector<Element> generators_;
};

/// G/H with deterministic coset representatives: each coset is represented
/// by its canonically smallest element, so the identity coset is first.
class QuotientGroup {
  public:
    /// Throws errc::subgroup_mismatch when h does not live in g.
    QuotientGroup(const Group& g, Subgroup h);

    const Group& parent() const { return parent_; }
    const Subgroup& sub() const { return sub_; }
    /// Element indices of the representatives, ascending.
    const std::vector<long>& coset_reps() const { return reps_; }
    long order() const { return static_cast<long>(reps_.size()); }

    /// Representative of the coset of g (an element index of the parent).
    long project(long element_index) const;
    /// Induced operation on representatives: project(rep_a * rep_b).
    long multiply(long rep_a, long rep_b) const;

  private:
    Group parent_;
    Subgroup sub_;
    std::vector<long> reps_;
    std::vector<long> projection_;  // element index -> representative index
};

/// Every subgroup of g, ordered by (order, member list). Intended for the
/// desk-scale sweeps used throughout verification.
std::vector<Subgroup> all_subgroups(const Group& g);

}  // namespace gdet
