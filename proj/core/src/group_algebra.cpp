#include "gdet/group_algebra.hpp"

#include <string>

namespace gdet {

AlgElement AlgElement::from_coefficients(Group group, int level, std::map<long, Poly> coeffs) {
    AlgElement a(std::move(group), level);
    for (auto& [idx, poly] : coeffs) {
        if (idx < 0 || idx >= a.group_.order())
            throw Error(errc::invalid_element, "coefficient key outside the group");
        if (poly.nvars() != a.group_.order())
            throw Error(errc::invalid_element,
                        "coefficient polynomial over the wrong variable set");
        if (poly.level() != level)
            throw Error(errc::level_mismatch, "coefficient polynomial at a different level");
        if (!poly.is_zero()) a.coeffs_.emplace(idx, std::move(poly));
    }
    return a;
}

Poly AlgElement::coefficient(long element_index) const {
    auto it = coeffs_.find(element_index);
    if (it != coeffs_.end()) return it->second;
    return Poly(static_cast<int>(group_.order()), level_);
}

std::vector<long> AlgElement::support() const {
    std::vector<long> s;
    s.reserve(coeffs_.size());
    for (const auto& [idx, poly] : coeffs_) s.push_back(idx);
    return s;
}

void AlgElement::check_compatible(const AlgElement& rhs) const {
    if (!(group_ == rhs.group_))
        throw Error(errc::subgroup_mismatch, "algebra elements over different groups");
    if (level_ != rhs.level_)
        throw Error(errc::level_mismatch, "algebra elements at different levels");
}

AlgElement AlgElement::operator+(const AlgElement& rhs) const {
    check_compatible(rhs);
    AlgElement result = *this;
    for (const auto& [idx, poly] : rhs.coeffs_) {
        auto it = result.coeffs_.find(idx);
        if (it == result.coeffs_.end()) {
            result.coeffs_.emplace(idx, poly);
        } else {
            Poly sum = it->second + poly;
            if (sum.is_zero())
                result.coeffs_.erase(it);
            else
                it->second = std::move(sum);
        }
    }
    return result;
}

AlgElement AlgElement::operator*(const AlgElement& rhs) const {
    check_compatible(rhs);
    AlgElement result(group_, level_);
    for (const auto& [ga, pa] : coeffs_) {
        for (const auto& [gb, pb] : rhs.coeffs_) {
            long k = group_.multiply(ga, gb);
            Poly prod = pa * pb;
            if (prod.is_zero()) continue;
            auto it = result.coeffs_.find(k);
            if (it == result.coeffs_.end()) {
                result.coeffs_.emplace(k, std::move(prod));
            } else {
                Poly sum = it->second + prod;
                if (sum.is_zero())
                    result.coeffs_.erase(it);
                else
                    it->second = std::move(sum);
            }
        }
    }
    return result;
}

bool AlgElement::operator==(const AlgElement& rhs) const {
    return group_ == rhs.group_ && level_ == rhs.level_ && coeffs_ == rhs.coeffs_;
}

AlgElement algebra_one(const Group& g, int level) {
    std::map<long, Poly> coeffs;
    coeffs.emplace(g.identity(), Poly::constant(static_cast<int>(g.order()), level, Rational(1)));
    return AlgElement::from_coefficients(g, level, std::move(coeffs));
}

AlgElement generic_element(const Group& g, const std::optional<Character>& chi) {
    if (chi && !(chi->group() == g))
        throw Error(errc::subgroup_mismatch, "character of a different group");
    const int n = static_cast<int>(g.order());
    const int level = g.exponent();
    std::map<long, Poly> coeffs;
    for (long i = 0; i < g.order(); ++i) {
        Poly xi = Poly::variable(n, level, static_cast<int>(i));
        if (chi) xi = xi.scaled(chi->eval_at(i));
        coeffs.emplace(i, std::move(xi));
    }
    return AlgElement::from_coefficients(g, level, std::move(coeffs));
}

AlgElement twist(const Character& chi, const AlgElement& a) {
    if (!(chi.group() == a.group()))
        throw Error(errc::subgroup_mismatch, "character of a different group");
    std::map<long, Poly> coeffs;
    for (const auto& [idx, poly] : a.coefficients())
        coeffs.emplace(idx, poly.scaled(chi.eval_at(idx)));
    return AlgElement::from_coefficients(a.group(), a.level(), std::move(coeffs));
}

Poly collapse(const AlgElement& a) {
    Poly sum(static_cast<int>(a.group().order()), a.level());
    for (const auto& [idx, poly] : a.coefficients()) sum = sum + poly;
    return sum;
}

std::vector<CycNumber> scalar_convolve(const Group& g, const std::vector<CycNumber>& a,
                                       const std::vector<CycNumber>& b) {
    if (static_cast<long>(a.size()) != g.order() || static_cast<long>(b.size()) != g.order())
        throw Error(errc::invalid_element, "coefficient vector length differs from |G|");
    std::vector<CycNumber> result;
    result.reserve(g.order());
    for (long k = 0; k < g.order(); ++k) result.push_back(CycNumber::zero(a[0].level()));
    for (long i = 0; i < g.order(); ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; j < g.order(); ++j) {
            if (b[j].is_zero()) continue;
            long k = g.multiply(i, j);
            result[k] = result[k] + a[i] * b[j];
        }
    }
    return result;
}

}  // namespace gdet
