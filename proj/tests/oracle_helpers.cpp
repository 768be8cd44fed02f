#include "oracle_helpers.hpp"

#include <stdexcept>

namespace gdet_test {

using gdet::AlgElement;
using gdet::CycNumber;
using gdet::Group;
using gdet::GroupMatrix;
using gdet::Monomial;
using gdet::Poly;
using gdet::Rational;
using gdet::Subgroup;

namespace {

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

using ZPoly = std::vector<mpz_class>;

ZPoly x_power_minus_one(int d) {
    ZPoly p(d + 1, mpz_class(0));
    p[0] = -1;
    p[d] = 1;
    return p;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// exact division by a monic-after-normalization polynomial with integer
// quotient; the Moebius numerator is always divisible by the denominator
ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly rem = a;
    if (b.back() == 0) throw std::logic_error("divisor not normalized");
    ZPoly quot(a.size() - b.size() + 1, mpz_class(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        mpz_class c = rem[k + b.size() - 1] / b.back();
        quot[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
    }
    for (const mpz_class& c : rem)
        if (c != 0) throw std::logic_error("division was not exact");
    return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_by_moebius(int n) {
    ZPoly numerator{mpz_class(1)};
    ZPoly denominator{mpz_class(1)};
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(n / d);
        if (mu == 1) numerator = mul(numerator, x_power_minus_one(d));
        if (mu == -1) denominator = mul(denominator, x_power_minus_one(d));
    }
    return divide_exact(numerator, denominator);
}

std::vector<CycNumber> solve_convolution_inverse(const GroupMatrix& matrix,
                                                 const std::vector<CycNumber>& values) {
    const long n = matrix.group.order();
    const int level = values.at(0).level();
    // augmented system rows: [ M | unit_e ]
    std::vector<std::vector<CycNumber>> rows;
    rows.reserve(n);
    for (long r = 0; r < n; ++r) {
        std::vector<CycNumber> row;
        row.reserve(n + 1);
        for (long c = 0; c < n; ++c) row.push_back(values.at(matrix.entries[r][c]));
        row.push_back(r == matrix.group.identity() ? CycNumber::one(level)
                                                   : CycNumber::zero(level));
        rows.push_back(std::move(row));
    }
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long r = col; r < n; ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular system in test oracle");
        std::swap(rows[col], rows[pivot]);
        const CycNumber inv = rows[col][col].inverse();
        for (long c = col; c <= n; ++c) rows[col][c] = rows[col][c] * inv;
        for (long r = 0; r < n; ++r) {
            if (r == col || rows[r][col].is_zero()) continue;
            const CycNumber factor = rows[r][col];
            for (long c = col; c <= n; ++c)
                rows[r][c] = rows[r][c] - factor * rows[col][c];
        }
    }
    std::vector<CycNumber> solution;
    solution.reserve(n);
    for (long r = 0; r < n; ++r) solution.push_back(rows[r][n]);
    return solution;
}

std::vector<std::vector<CycNumber>> brute_force_subgroup_dual(const Subgroup& h) {
    const Group& g = h.parent();
    const long size = h.order();
    const std::vector<long>& members = h.members();

    // exponent of H = lcm of member orders inside the parent
    long exp_h = 1;
    for (long m : members) {
        long ord = 1;
        long acc = m;
        while (acc != g.identity()) {
            acc = g.multiply(acc, m);
            ++ord;
        }
        exp_h = std::lcm(exp_h, ord);
    }

    // position of each product inside the member list, for the check below
    std::vector<long> member_pos(g.order(), -1);
    for (long i = 0; i < size; ++i) member_pos[members[i]] = i;

    std::vector<std::vector<CycNumber>> result;
    std::vector<long> digits(size, 0);  // candidate exponents, digits[0] for e
    for (;;) {
        bool multiplicative = true;
        for (long i = 0; i < size && multiplicative; ++i)
            for (long j = 0; j < size; ++j) {
                long k = member_pos[g.multiply(members[i], members[j])];
                if ((digits[i] + digits[j]) % exp_h != digits[k]) {
                    multiplicative = false;
                    break;
                }
            }
        if (multiplicative && digits[0] == 0) {
            std::vector<CycNumber> map;
            map.reserve(size);
            for (long i = 0; i < size; ++i)
                map.push_back(
                    CycNumber::root_of_unity(g.exponent(), static_cast<int>(exp_h), digits[i]));
            result.push_back(std::move(map));
        }
        // odometer over all exponent tuples
        long pos = size - 1;
        while (pos >= 0) {
            if (++digits[pos] < exp_h) break;
            digits[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return result;
}

Rational random_rational(Rng& rng, long num_span, long den_span) {
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

AlgElement random_alg_element(Rng& rng, const Group& g) {
    std::map<long, Poly> coeffs;
    for (long i = 0; i < g.order(); ++i)
        if (rng() % 2) coeffs.emplace(i, random_poly(rng, g));
    return AlgElement::from_coefficients(g, g.exponent(), std::move(coeffs));
}

}  // namespace gdet_test
