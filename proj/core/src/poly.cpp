#include "gdet/poly.hpp"

#include <string>

namespace gdet {

int Monomial::total_degree() const {
    int d = 0;
    for (unsigned e : exps_) d += static_cast<int>(e);
    return d;
}

Monomial Monomial::times(const Monomial& rhs) const {
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.exps_[i];
    return Monomial(std::move(e));
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
}

Poly Poly::variable(int nvars, int level, int var) {
    if (var < 0 || var >= nvars)
        throw Error(errc::invalid_element, "variable index " + std::to_string(var) +
                                               " outside 0.." + std::to_string(nvars - 1));
    std::vector<unsigned> e(nvars, 0);
    e[var] = 1;
    Poly p(nvars, level);
    p.terms_.emplace(Monomial(std::move(e)), CycNumber::one(level));
    return p;
}

Poly Poly::constant(int nvars, int level, const CycNumber& c) {
    Poly p(nvars, level);
    if (c.level() != level)
        throw Error(errc::level_mismatch, "constant coefficient at a different level");
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

Poly Poly::constant(int nvars, int level, const Rational& q) {
    return constant(nvars, level, CycNumber::from_rational(level, q));
}

Poly Poly::from_terms(int nvars, int level, TermMap terms) {
    Poly p(nvars, level);
    for (auto& [mono, coeff] : terms) {
        if (mono.nvars() != nvars)
            throw Error(errc::invalid_element, "monomial has the wrong variable count");
        if (coeff.level() != level)
            throw Error(errc::level_mismatch, "coefficient at a different level");
        if (!coeff.is_zero()) p.terms_.emplace(mono, coeff);
    }
    return p;
}

void Poly::check_compatible(const Poly& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw Error(errc::invalid_element,
                    "polynomials over different variable sets (" + std::to_string(nvars_) +
                        " vs " + std::to_string(rhs.nvars_) + " variables)");
    if (level_ != rhs.level_)
        throw Error(errc::level_mismatch,
                    "polynomials at different cyclotomic levels " + std::to_string(level_) +
                        " and " + std::to_string(rhs.level_));
}

Poly Poly::operator+(const Poly& rhs) const {
    check_compatible(rhs);
    Poly result = *this;
    for (const auto& [mono, coeff] : rhs.terms_) {
        auto it = result.terms_.find(mono);
        if (it == result.terms_.end()) {
            result.terms_.emplace(mono, coeff);
        } else {
            CycNumber sum = it->second + coeff;
            if (sum.is_zero())
                result.terms_.erase(it);
            else
                it->second = sum;
        }
    }
    return result;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator-() const {
    Poly result(nvars_, level_);
    for (const auto& [mono, coeff] : terms_) result.terms_.emplace(mono, -coeff);
    return result;
}

Poly Poly::operator*(const Poly& rhs) const {
    check_compatible(rhs);
    Poly result(nvars_, level_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m = ma.times(mb);
            CycNumber c = ca * cb;
            auto it = result.terms_.find(m);
            if (it == result.terms_.end()) {
                if (!c.is_zero()) result.terms_.emplace(std::move(m), std::move(c));
            } else {
                CycNumber sum = it->second + c;
                if (sum.is_zero())
                    result.terms_.erase(it);
                else
                    it->second = sum;
            }
        }
    }
    return result;
}

Poly Poly::scaled(const CycNumber& c) const {
    if (c.level() != level_)
        throw Error(errc::level_mismatch, "scale factor at a different level");
    Poly result(nvars_, level_);
    if (c.is_zero()) return result;
    for (const auto& [mono, coeff] : terms_) {
        CycNumber p = coeff * c;
        if (!p.is_zero()) result.terms_.emplace(mono, std::move(p));
    }
    return result;
}

bool Poly::operator==(const Poly& rhs) const {
    return nvars_ == rhs.nvars_ && level_ == rhs.level_ && terms_ == rhs.terms_;
}

std::optional<int> Poly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // first term is maximal in graded-lex, hence of maximal total degree
    return terms_.begin()->first.total_degree();
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total_degree();
    return terms_.rbegin()->first.total_degree() == d;
}

CycNumber Poly::eval(const std::map<int, CycNumber>& assignment) const {
    CycNumber acc = CycNumber::zero(level_);
    for (const auto& [mono, coeff] : terms_) {
        CycNumber term = coeff;
        for (int v = 0; v < nvars_; ++v) {
            unsigned e = mono.exponent(v);
            if (e == 0) continue;
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw Error(errc::incomplete_assignment,
                            "no value for variable " + std::to_string(v));
            if (it->second.level() != level_)
                throw Error(errc::level_mismatch, "assignment value at a different level");
            term = term * it->second.pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace gdet
