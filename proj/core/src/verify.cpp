#include "gdet/verify.hpp"

#include <random>

namespace gdet {

namespace {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long num_span = 9, long den_span = 4) {
    long num = static_cast<long>(rng() % (2 * num_span + 1)) - num_span;
    long den = static_cast<long>(rng() % den_span) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Poly random_poly(Rng& rng, const Group& g) {
    const int nvars = static_cast<int>(g.order());
    const int level = g.exponent();
    Poly::TermMap terms;
    const int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
        std::vector<unsigned> exps(nvars, 0);
        const int factors = static_cast<int>(rng() % 3);
        for (int f = 0; f < factors; ++f) ++exps[rng() % nvars];
        CycNumber c = CycNumber::from_rational(level, random_rational(rng));
        Monomial mono(std::move(exps));
        auto it = terms.find(mono);
        if (it == terms.end())
            terms.emplace(std::move(mono), std::move(c));
        else
            it->second = it->second + c;
    }
    return Poly::from_terms(nvars, level, std::move(terms));
}

AlgElement random_element(Rng& rng, const Group& g) {
    std::map<long, Poly> coeffs;
    for (long i = 0; i < g.order(); ++i)
        if (rng() % 2) coeffs.emplace(i, random_poly(rng, g));
    return AlgElement::from_coefficients(g, g.exponent(), std::move(coeffs));
}

AlgElement random_element_on(Rng& rng, const Group& g, const std::vector<long>& support) {
    std::map<long, Poly> coeffs;
    for (long i : support) coeffs.emplace(i, random_poly(rng, g));
    return AlgElement::from_coefficients(g, g.exponent(), std::move(coeffs));
}

Character random_character(Rng& rng, const Group& g) {
    return Character(g, g.element_at(static_cast<long>(rng() % g.order())));
}

struct Reporter {
    std::vector<PropertyResult> results;

    template <typename Fn>
    void run(const std::string& name, Fn&& fn) {
        PropertyResult r;
        r.name = name;
        try {
            r.pass = fn(r.detail);
        } catch (const Error& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }

    void skip(const std::string& name, const std::string& why) {
        results.push_back(PropertyResult{name, true, true, why});
    }
};

}  // namespace

std::vector<PropertyResult> verify_group(const Group& g, const VerifyOptions& opt) {
    Reporter rep;
    Rng rng(opt.seed);
    const int level = g.exponent();
    const CycNumber one = CycNumber::one(level);
    const std::vector<Subgroup> subgroups = all_subgroups(g);
    const FactorEngine engine(g, opt.oracle_bound);

    rep.run("lagrange", [&](std::string& detail) {
        for (const Subgroup& h : subgroups)
            if (h.order() * h.index() != g.order()) return false;
        detail = std::to_string(subgroups.size()) + " subgroups";
        return true;
    });

    rep.run("annihilator-size", [&](std::string& detail) {
        for (const Subgroup& h : subgroups)
            if (annihilator(g, h).size() != h.index()) {
                detail = "wrong size at a subgroup of order " + std::to_string(h.order());
                return false;
            }
        return true;
    });

    rep.run("dual-coset-reps", [&](std::string&) {
        for (const Subgroup& h : subgroups)
            if (static_cast<long>(dual_coset_reps(g, h).size()) != h.order()) return false;
        return true;
    });

    rep.run("restricted-dual", [&](std::string&) {
        for (const Subgroup& h : subgroups) {
            const auto restricted = restrict_characters(dual_coset_reps(g, h), h);
            for (std::size_t i = 0; i < restricted.size(); ++i)
                for (std::size_t j = i + 1; j < restricted.size(); ++j)
                    if (restricted[i] == restricted[j]) return false;
            for (const RestrictedCharacter& chi : restricted)
                for (long a : h.members())
                    for (long b : h.members()) {
                        const CycNumber lhs = chi.value_at(g.multiply(a, b));
                        const CycNumber rhs = chi.value_at(a) * chi.value_at(b);
                        if (!(lhs == rhs)) return false;
                    }
        }
        return true;
    });

    rep.run("separating-character", [&](std::string&) {
        for (const Subgroup& h : subgroups)
            for (long i = 0; i < g.order(); ++i) {
                if (h.contains(i)) continue;
                const Character chi = separating_character(g, h, g.element_at(i));
                if (chi.eval_at(i) == one) return false;
                for (long m : h.members())
                    if (!(chi.eval_at(m) == one)) return false;
            }
        return true;
    });

    rep.run("twist-composition", [&](std::string&) {
        for (int t = 0; t < opt.random_trials; ++t) {
            const Character chi = random_character(rng, g);
            const Character psi = random_character(rng, g);
            const AlgElement a = random_element(rng, g);
            if (!(twist(chi, twist(psi, a)) == twist(chi * psi, a))) return false;
        }
        return true;
    });

    rep.run("twist-multiplicative", [&](std::string&) {
        for (int t = 0; t < opt.random_trials; ++t) {
            const Character chi = random_character(rng, g);
            const AlgElement a = random_element(rng, g);
            const AlgElement b = random_element(rng, g);
            if (!(twist(chi, a * b) == twist(chi, a) * twist(chi, b))) return false;
        }
        return true;
    });

    rep.run("fixed-point-support", [&](std::string&) {
        for (const Subgroup& h : subgroups) {
            const DualSet ann = annihilator(g, h);
            // supported on H -> fixed by the whole annihilator
            const AlgElement on_h = random_element_on(rng, g, h.members());
            for (const Character& chi : ann.characters)
                if (!(twist(chi, on_h) == on_h)) return false;
            // support leaking out of H -> some annihilator member moves it;
            // the leaked coefficient must actually be nonzero
            if (h.is_full()) continue;
            std::vector<long> outside;
            for (long i = 0; i < g.order(); ++i)
                if (!h.contains(i)) outside.push_back(i);
            Poly leak_coeff = random_poly(rng, g);
            while (leak_coeff.is_zero()) leak_coeff = random_poly(rng, g);
            std::map<long, Poly> leak_coeffs;
            leak_coeffs.emplace(outside[rng() % outside.size()], std::move(leak_coeff));
            AlgElement leaking =
                AlgElement::from_coefficients(g, g.exponent(), std::move(leak_coeffs));
            bool moved = false;
            for (const Character& chi : ann.characters)
                if (!(twist(chi, leaking) == leaking)) {
                    moved = true;
                    break;
                }
            if (!moved) return false;
        }
        return true;
    });

    rep.run("coefficient-degree", [&](std::string&) {
        for (const Subgroup& h : subgroups) {
            const AlgElement alpha = engine.subgroup_coefficients(h);
            for (const auto& [idx, poly] : alpha.coefficients()) {
                if (!h.contains(idx)) return false;
                if (!poly.is_homogeneous()) return false;
                if (poly.total_degree() != std::optional<int>(static_cast<int>(h.index())))
                    return false;
            }
        }
        return true;
    });

    rep.run("extended-identity", [&](std::string& detail) {
        for (const Subgroup& h : subgroups) {
            const ExtendedFactorization ext = engine.extended(h);
            if (static_cast<long>(ext.factors.size()) != h.order()) return false;
            // support {e} and oracle agreement enforced inside extended()
        }
        if (!engine.oracle_available())
            detail = "support identity only; order above oracle bound";
        return true;
    });

    if (engine.oracle_available()) {
        rep.run("generalized-oracle", [&](std::string&) {
            for (const Subgroup& h : subgroups) {
                const Factorization fact = engine.generalized(h);
                if (!(fact.product == engine.oracle_determinant())) return false;
            }
            return true;
        });
    } else {
        rep.skip("generalized-oracle",
                 "order " + std::to_string(g.order()) + " above oracle bound " +
                     std::to_string(opt.oracle_bound));
    }

    rep.run("representative-independence", [&](std::string&) {
        for (const Subgroup& h : subgroups) {
            const ExtendedFactorization canonical = engine.extended(h);
            const DualSet ann = annihilator(g, h);
            std::vector<Character> shuffled;
            shuffled.reserve(canonical.rep_characters.size());
            for (const Character& chi : canonical.rep_characters)
                shuffled.push_back(chi *
                                   ann.characters[rng() % ann.characters.size()]);
            const ExtendedFactorization other = engine.extended(h, shuffled);
            if (!(other.product == canonical.product)) return false;
            if (!(other.determinant == canonical.determinant)) return false;
        }
        return true;
    });

    rep.run("inverse-round-trip", [&](std::string& detail) {
        int singular = 0;
        for (int t = 0; t < opt.inverse_trials; ++t) {
            std::vector<CycNumber> assignment;
            assignment.reserve(g.order());
            for (long i = 0; i < g.order(); ++i)
                assignment.push_back(CycNumber::from_rational(level, random_rational(rng, 5)));
            try {
                engine.inverse(assignment);  // round trip enforced inside
            } catch (const Error& e) {
                if (e.code() == errc::singular_element) {
                    ++singular;
                    continue;
                }
                throw;
            }
        }
        detail = std::to_string(opt.inverse_trials - singular) + " inverted, " +
                 std::to_string(singular) + " singular draws skipped";
        return true;
    });

    return rep.results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    for (const PropertyResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace gdet
