#include "gdet/character.hpp"

#include <algorithm>
#include <string>

namespace gdet {

Character::Character(Group group, const Element& index)
    : group_(std::move(group)), index_(group_.reduce(index)) {
    index_position_ = group_.index_of(index_);
    const int n = group_.exponent();
    weights_.resize(group_.rank());
    for (int i = 0; i < group_.rank(); ++i)
        weights_[i] = static_cast<long>(index_.coords[i]) * (n / group_.moduli()[i]);
}

CycNumber Character::eval_at(long element_index) const {
    const Element g = group_.element_at(element_index);
    const int n = group_.exponent();
    long e = 0;
    for (int i = 0; i < group_.rank(); ++i)
        e = (e + weights_[i] * g.coords[i]) % n;
    return CycNumber::root_of_unity(n, n, e);
}

CycNumber Character::operator()(const Element& g) const {
    return eval_at(group_.index_of(g));
}

Character Character::operator*(const Character& rhs) const {
    if (!(group_ == rhs.group_))
        throw Error(errc::subgroup_mismatch, "characters of different groups");
    return Character(group_, group_.multiply(index_, rhs.index_));
}

Character Character::inverted() const {
    return Character(group_, group_.inverse(index_));
}

DualSet dual_group(const Group& g) {
    DualSet dual{g, {}};
    dual.characters.reserve(g.order());
    for (long i = 0; i < g.order(); ++i)
        dual.characters.emplace_back(g, g.element_at(i));
    return dual;
}

namespace {

bool trivial_on(const Character& chi, const Subgroup& h) {
    const CycNumber one = CycNumber::one(chi.group().exponent());
    for (long m : h.members())
        if (!(chi.eval_at(m) == one)) return false;
    return true;
}

void check_subgroup(const Group& g, const Subgroup& h) {
    if (!(h.parent() == g))
        throw Error(errc::subgroup_mismatch, "subgroup belongs to a different group");
}

}  // namespace

DualSet annihilator(const Group& g, const Subgroup& h) {
    check_subgroup(g, h);
    DualSet result{g, {}};
    for (long i = 0; i < g.order(); ++i) {
        Character chi(g, g.element_at(i));
        if (trivial_on(chi, h)) result.characters.push_back(std::move(chi));
    }
    return result;
}

std::vector<Character> dual_coset_reps(const Group& g, const Subgroup& h) {
    check_subgroup(g, h);
    const DualSet ann = annihilator(g, h);
    std::vector<char> seen(g.order(), 0);
    std::vector<Character> reps;
    for (long i = 0; i < g.order(); ++i) {
        if (seen[i]) continue;
        Character chi(g, g.element_at(i));
        // mark chi * annihilator; scanning ascending makes chi the coset minimum
        for (const Character& psi : ann.characters)
            seen[g.multiply(i, psi.index_position())] = 1;
        reps.push_back(std::move(chi));
    }
    if (static_cast<long>(reps.size()) != h.order())
        throw Error(errc::internal_consistency,
                    "dual coset count " + std::to_string(reps.size()) +
                        " differs from |H| = " + std::to_string(h.order()));
    return reps;
}

RestrictedCharacter::RestrictedCharacter(Subgroup sub, std::vector<CycNumber> values)
    : sub_(std::move(sub)), values_(std::move(values)) {
    if (static_cast<long>(values_.size()) != sub_.order())
        throw Error(errc::internal_consistency, "restriction value count != subgroup order");
}

CycNumber RestrictedCharacter::value_at(long parent_element_index) const {
    const std::vector<long>& members = sub_.members();
    auto it = std::lower_bound(members.begin(), members.end(), parent_element_index);
    if (it == members.end() || *it != parent_element_index)
        throw Error(errc::invalid_element, "element not in the subgroup");
    return values_[it - members.begin()];
}

CycNumber RestrictedCharacter::operator()(const Element& h) const {
    return value_at(sub_.parent().index_of(h));
}

std::vector<RestrictedCharacter> restrict_characters(const std::vector<Character>& reps,
                                                     const Subgroup& h) {
    std::vector<RestrictedCharacter> result;
    result.reserve(reps.size());
    for (const Character& chi : reps) {
        check_subgroup(chi.group(), h);
        std::vector<CycNumber> values;
        values.reserve(h.order());
        for (long m : h.members()) values.push_back(chi.eval_at(m));
        RestrictedCharacter restricted(h, std::move(values));
        for (const RestrictedCharacter& prev : result)
            if (prev == restricted)
                throw Error(errc::internal_consistency,
                            "coset representatives restricted to equal characters on H");
        result.push_back(std::move(restricted));
    }
    return result;
}

Character separating_character(const Group& g, const Subgroup& h, const Element& elem) {
    check_subgroup(g, h);
    const long target = g.index_of(g.reduce(elem));
    if (h.contains(target))
        throw Error(errc::no_separator, "element lies in the subgroup; nothing separates it");

    const CycNumber one = CycNumber::one(g.exponent());
    if (h.order() == 1) {
        // direct construction: a unit index at any nonzero coordinate of g
        const Element e = g.element_at(target);
        for (int i = 0; i < g.rank(); ++i) {
            if (e.coords[i] == 0) continue;
            std::vector<int> idx(g.rank(), 0);
            idx[i] = 1;
            Character chi(g, Element(std::move(idx)));
            if (!(chi.eval_at(target) == one)) return chi;
        }
    }
    for (const Character& chi : annihilator(g, h).characters)
        if (!(chi.eval_at(target) == one)) return chi;
    throw Error(errc::internal_consistency,
                "no separating character found for an element outside the subgroup");
}

}  // namespace gdet
