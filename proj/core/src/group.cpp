#include "gdet/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace gdet {

namespace {

std::string tuple_text(const std::vector<int>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

}  // namespace

Group::Group(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty())
        throw Error(errc::invalid_group, "group needs at least one cyclic factor");
    for (int m : moduli_) {
        if (m <= 0)
            throw Error(errc::invalid_group,
                        "modulus must be positive, got " + std::to_string(m));
    }
    strides_.assign(moduli_.size(), 1);
    for (int i = static_cast<int>(moduli_.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * moduli_[i + 1];
    order_ = strides_[0] * moduli_[0];
    exponent_ = 1;
    for (int m : moduli_) exponent_ = std::lcm(exponent_, m);
}

void Group::check_index(long i) const {
    if (i < 0 || i >= order_)
        throw Error(errc::invalid_element,
                    "element index " + std::to_string(i) + " outside group of order " +
                        std::to_string(order_));
}

Element Group::element_at(long index) const {
    check_index(index);
    std::vector<int> c(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        c[i] = static_cast<int>(index / strides_[i]);
        index %= strides_[i];
    }
    return Element(std::move(c));
}

long Group::index_of(const Element& e) const {
    if (e.coords.size() != moduli_.size())
        throw Error(errc::invalid_element,
                    "element " + tuple_text(e.coords) + " has rank " +
                        std::to_string(e.coords.size()) + ", group has rank " +
                        std::to_string(moduli_.size()));
    long index = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (e.coords[i] < 0 || e.coords[i] >= moduli_[i])
            throw Error(errc::invalid_element,
                        "residue " + std::to_string(e.coords[i]) + " out of range mod " +
                            std::to_string(moduli_[i]));
        index += strides_[i] * e.coords[i];
    }
    return index;
}

Element Group::reduce(const Element& e) const {
    if (e.coords.size() != moduli_.size())
        throw Error(errc::invalid_element,
                    "element " + tuple_text(e.coords) + " has rank " +
                        std::to_string(e.coords.size()) + ", group has rank " +
                        std::to_string(moduli_.size()));
    std::vector<int> c(e.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        int m = moduli_[i];
        c[i] = ((e.coords[i] % m) + m) % m;
    }
    return Element(std::move(c));
}

long Group::multiply(long a, long b) const {
    check_index(a);
    check_index(b);
    long result = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        int ca = static_cast<int>(a / strides_[i]) % moduli_[i];
        int cb = static_cast<int>(b / strides_[i]) % moduli_[i];
        result += strides_[i] * ((ca + cb) % moduli_[i]);
    }
    return result;
}

long Group::inverse(long a) const {
    check_index(a);
    long result = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        int ca = static_cast<int>(a / strides_[i]) % moduli_[i];
        result += strides_[i] * ((moduli_[i] - ca) % moduli_[i]);
    }
    return result;
}

Element Group::multiply(const Element& a, const Element& b) const {
    return element_at(multiply(index_of(a), index_of(b)));
}

Element Group::inverse(const Element& a) const {
    return element_at(inverse(index_of(a)));
}

Subgroup::Subgroup(Group parent, std::vector<long> members, std::vector<Element> generators)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      generators_(std::move(generators)) {
    mask_.assign(parent_.order(), 0);
    for (long m : members_) mask_[m] = 1;
}

Subgroup Subgroup::closure(const Group& g, const std::vector<Element>& generators) {
    std::vector<long> gens;
    gens.reserve(generators.size());
    for (const Element& e : generators) gens.push_back(g.index_of(e));

    // fixpoint closure under multiplication by the generators
    std::vector<char> seen(g.order(), 0);
    std::vector<long> frontier{g.identity()};
    seen[g.identity()] = 1;
    while (!frontier.empty()) {
        long current = frontier.back();
        frontier.pop_back();
        for (long gen : gens) {
            long next = g.multiply(current, gen);
            if (!seen[next]) {
                seen[next] = 1;
                frontier.push_back(next);
            }
        }
    }
    // a finite closed subset containing e and closed under the generators is
    // automatically closed under inversion
    std::vector<long> members;
    for (long i = 0; i < g.order(); ++i)
        if (seen[i]) members.push_back(i);
    return Subgroup(g, std::move(members), generators);
}

Subgroup Subgroup::trivial(const Group& g) { return closure(g, {}); }

Subgroup Subgroup::full(const Group& g) {
    std::vector<Element> gens;
    for (int i = 0; i < g.rank(); ++i) {
        std::vector<int> c(g.rank(), 0);
        if (g.moduli()[i] > 1) {
            c[i] = 1;
            gens.push_back(Element(std::move(c)));
        }
    }
    Subgroup h = closure(g, gens);
    return h;
}

bool Subgroup::contains(long element_index) const {
    if (element_index < 0 || element_index >= static_cast<long>(mask_.size()))
        throw Error(errc::invalid_element, "element index outside parent group");
    return mask_[element_index] != 0;
}

QuotientGroup::QuotientGroup(const Group& g, Subgroup h) : parent_(g), sub_(std::move(h)) {
    if (!(sub_.parent() == parent_))
        throw Error(errc::subgroup_mismatch, "subgroup belongs to a different group");
    projection_.assign(parent_.order(), -1);
    for (long i = 0; i < parent_.order(); ++i) {
        if (projection_[i] >= 0) continue;
        // first unassigned element of a coset is its minimum in canonical order
        long rep_pos = static_cast<long>(reps_.size());
        reps_.push_back(i);
        for (long m : sub_.members()) projection_[parent_.multiply(i, m)] = rep_pos;
    }
}

long QuotientGroup::project(long element_index) const {
    if (element_index < 0 || element_index >= static_cast<long>(projection_.size()))
        throw Error(errc::invalid_element, "element index outside parent group");
    return reps_[projection_[element_index]];
}

long QuotientGroup::multiply(long rep_a, long rep_b) const {
    return project(parent_.multiply(rep_a, rep_b));
}

std::vector<Subgroup> all_subgroups(const Group& g) {
    // breadth-first walk of the subgroup lattice: adjoin one element at a
    // time and close, deduplicating on the member set
    std::set<std::vector<long>> seen;
    std::vector<Subgroup> result;
    std::vector<Subgroup> frontier{Subgroup::trivial(g)};
    seen.insert(frontier.front().members());
    result.push_back(frontier.front());

    while (!frontier.empty()) {
        Subgroup current = frontier.back();
        frontier.pop_back();
        for (long i = 1; i < g.order(); ++i) {
            if (current.contains(i)) continue;
            std::vector<Element> gens = current.generators();
            gens.push_back(g.element_at(i));
            Subgroup bigger = Subgroup::closure(g, gens);
            if (seen.insert(bigger.members()).second) {
                result.push_back(bigger);
                frontier.push_back(bigger);
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members() < b.members();
    });
    return result;
}

}  // namespace gdet
