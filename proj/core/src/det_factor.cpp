#include "gdet/det_factor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gdet {

GroupMatrix group_matrix(const Group& g) {
    GroupMatrix m{g, {}};
    m.entries.assign(g.order(), std::vector<long>(g.order(), 0));
    for (long row = 0; row < g.order(); ++row)
        for (long col = 0; col < g.order(); ++col)
            m.entries[row][col] = g.multiply(row, g.inverse(col));
    return m;
}

Poly leibniz_determinant(const GroupMatrix& m, int oracle_bound) {
    const long n = m.group.order();
    if (n > oracle_bound)
        throw Error(errc::oracle_bound, "group order " + std::to_string(n) +
                                            " above the oracle bound " +
                                            std::to_string(oracle_bound));
    const int level = m.group.exponent();
    const int nvars = static_cast<int>(n);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Monomial, Rational, GradedLexGreater> acc;
    do {
        int inversions = 0;
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<unsigned> exps(nvars, 0);
        for (long row = 0; row < n; ++row) ++exps[m.entries[row][perm[row]]];
        Monomial mono(std::move(exps));
        Rational& slot = acc[mono];
        if (inversions % 2 == 0)
            slot += 1;
        else
            slot -= 1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Poly::TermMap terms;
    for (auto& [mono, q] : acc)
        if (q != 0) terms.emplace(mono, CycNumber::from_rational(level, q));
    return Poly::from_terms(nvars, level, std::move(terms));
}

std::string_view to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::oracle_verified: return "oracle-verified";
        case VerifyStatus::unverified_by_oracle: return "unverified-by-oracle";
        case VerifyStatus::identity_checked: return "identity-checked";
    }
    return "unknown";
}

FactorEngine::FactorEngine(Group group, int oracle_bound)
    : group_(std::move(group)), oracle_bound_(oracle_bound) {
    if (group_.order() <= oracle_bound_)
        oracle_ = leibniz_determinant(group_matrix(group_), oracle_bound_);
}

const Poly& FactorEngine::oracle_determinant() const {
    if (!oracle_)
        throw Error(errc::oracle_bound,
                    "group order " + std::to_string(group_.order()) +
                        " above the oracle bound " + std::to_string(oracle_bound_));
    return *oracle_;
}

void FactorEngine::check_subgroup(const Subgroup& h) const {
    if (!(h.parent() == group_))
        throw Error(errc::subgroup_mismatch, "subgroup belongs to a different group");
}

AlgElement FactorEngine::subgroup_coefficients(const Subgroup& h) const {
    check_subgroup(h);
    AlgElement product = algebra_one(group_, group_.exponent());
    for (const Character& chi : annihilator(group_, h).characters)
        product = product * generic_element(group_, chi);
    for (long idx : product.support()) {
        if (!h.contains(idx))
            throw Error(errc::internal_consistency,
                        "annihilator product escaped the subgroup at element index " +
                            std::to_string(idx));
    }
    return product;
}

ExtendedFactorization FactorEngine::extended(const Subgroup& h) const {
    return extended(h, dual_coset_reps(group_, h));
}

ExtendedFactorization FactorEngine::extended(const Subgroup& h,
                                             const std::vector<Character>& reps) const {
    check_subgroup(h);
    if (static_cast<long>(reps.size()) != h.order())
        throw Error(errc::subgroup_mismatch,
                    "need exactly |H| = " + std::to_string(h.order()) +
                        " dual coset representatives, got " + std::to_string(reps.size()));
    const CycNumber one = CycNumber::one(group_.exponent());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const Character ratio = reps[i] * reps[j].inverted();
            bool trivial = true;
            for (long m : h.members())
                if (!(ratio.eval_at(m) == one)) {
                    trivial = false;
                    break;
                }
            if (trivial)
                throw Error(errc::subgroup_mismatch,
                            "representatives share a dual coset of the annihilator");
        }
    }

    ExtendedFactorization out{group_, h, {}, reps, {}, AlgElement(group_, group_.exponent()),
                              Poly(static_cast<int>(group_.order()), group_.exponent()),
                              VerifyStatus::unverified_by_oracle};

    const AlgElement alpha = subgroup_coefficients(h);
    for (long idx : alpha.support()) out.coefficients.emplace_back(idx, alpha.coefficient(idx));

    out.factors.reserve(reps.size());
    for (const Character& chi : reps) {
        if (!(chi.group() == group_))
            throw Error(errc::subgroup_mismatch, "representative of a different group");
        out.factors.push_back(twist(chi, alpha));
    }

    AlgElement product = algebra_one(group_, group_.exponent());
    for (const AlgElement& factor : out.factors) product = product * factor;
    out.product = product;

    const std::vector<long> support = product.support();
    if (support.size() != 1 || support[0] != group_.identity())
        throw Error(errc::theorem_violation,
                    "extended factorization product is not supported on {e}");
    out.determinant = product.coefficient(group_.identity());

    if (oracle_) {
        if (!(out.determinant == *oracle_))
            throw Error(errc::theorem_violation,
                        "extended factorization coefficient differs from the Leibniz expansion");
        out.status = VerifyStatus::oracle_verified;
    }
    return out;
}

Factorization FactorEngine::generalized(const Subgroup& h) const {
    return generalized_from(extended(h));
}

Factorization FactorEngine::generalized_from(const ExtendedFactorization& ext) const {
    if (!(ext.group == group_))
        throw Error(errc::subgroup_mismatch, "extension built for a different group");
    Factorization out{group_,      ext.subgroup, ext.coefficients, {},
                      Poly(static_cast<int>(group_.order()), group_.exponent()),
                      ext.status};
    out.factors.reserve(ext.factors.size());
    for (const AlgElement& factor : ext.factors) out.factors.push_back(collapse(factor));

    Poly product = Poly::constant(static_cast<int>(group_.order()), group_.exponent(),
                                  Rational(1));
    for (const Poly& f : out.factors) product = product * f;
    out.product = std::move(product);

    // collapsing is multiplicative, so the scalar product must reproduce
    // the determinant found in the algebra
    if (!(out.product == ext.determinant))
        throw Error(errc::theorem_violation,
                    "collapsed factor product differs from the determinant");
    if (oracle_ && !(out.product == *oracle_))
        throw Error(errc::theorem_violation,
                    "factor product differs from the Leibniz expansion");
    return out;
}

Factorization FactorEngine::dedekind() const { return generalized(Subgroup::full(group_)); }

std::vector<CycNumber> FactorEngine::inverse(const std::vector<CycNumber>& assignment) const {
    const long n = group_.order();
    const int level = group_.exponent();
    if (static_cast<long>(assignment.size()) != n)
        throw Error(errc::incomplete_assignment,
                    "assignment must give a value for each of the " + std::to_string(n) +
                        " group elements");
    for (const CycNumber& v : assignment)
        if (v.level() != level)
            throw Error(errc::level_mismatch, "assignment value at a different level");

    const DualSet dual = dual_group(group_);

    // Theta under the assignment, as the product of the evaluated linear
    // forms; a vanishing factor pinpoints the singularity
    CycNumber theta = CycNumber::one(level);
    for (const Character& chi : dual.characters) {
        CycNumber form = CycNumber::zero(level);
        for (long g = 0; g < n; ++g) form = form + chi.eval_at(g) * assignment[g];
        if (form.is_zero()) {
            std::string idx_text;
            for (std::size_t i = 0; i < chi.index().coords.size(); ++i) {
                if (i) idx_text += ",";
                idx_text += std::to_string(chi.index().coords[i]);
            }
            throw Error(errc::singular_element,
                        "determinant vanishes: the factor of character chi(" + idx_text +
                            ") is zero under this assignment");
        }
        theta = theta * form;
    }

    // product of the nontrivially twisted elements, with scalar coefficients
    std::vector<CycNumber> numerator(n, CycNumber::zero(level));
    numerator[group_.identity()] = CycNumber::one(level);
    for (const Character& chi : dual.characters) {
        if (chi.is_trivial()) continue;
        std::vector<CycNumber> twisted;
        twisted.reserve(n);
        for (long g = 0; g < n; ++g) twisted.push_back(chi.eval_at(g) * assignment[g]);
        numerator = scalar_convolve(group_, numerator, twisted);
    }

    const CycNumber theta_inv = theta.inverse();
    std::vector<CycNumber> result;
    result.reserve(n);
    for (long g = 0; g < n; ++g) result.push_back(numerator[g] * theta_inv);

    // exact round trip: (sum x_g g) * result must be 1 * e
    const std::vector<CycNumber> check = scalar_convolve(group_, assignment, result);
    for (long g = 0; g < n; ++g) {
        const bool want_one = (g == group_.identity());
        if (want_one ? !check[g].is_one() : !check[g].is_zero())
            throw Error(errc::theorem_violation, "inverse round-trip product is not e");
    }
    return result;
}

}  // namespace gdet
