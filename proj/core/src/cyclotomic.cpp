#include "gdet/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace gdet {

int euler_phi(int n) {
    if (n <= 0) throw Error(errc::domain, "totient of non-positive integer");
    int result = n;
    int m = n;
    for (int p = 2; static_cast<long>(p) * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// dense integer polynomials, ascending coefficients, used only to build
// the cyclotomic minimal polynomials
using ZPoly = std::vector<mpz_class>;

// quotient of a by monic b; division is exact for the cyclotomic recursion
ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly rem = a;
    ZPoly quot(a.size() - b.size() + 1, mpz_class(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        mpz_class c = rem[k + b.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_class t = c * b[j];
            rem[k + j] -= t;
        }
    }
    return quot;
}

const ZPoly& cyclotomic_cached(int n) {
    static std::map<int, ZPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    // recursive fill over divisors, all under the one lock taken above
    auto fill = [](int m, auto&& self) -> const ZPoly& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        if (m == 1) {
            return cache.emplace(1, ZPoly{mpz_class(-1), mpz_class(1)}).first->second;
        }
        ZPoly numerator(m + 1, mpz_class(0));
        numerator[0] = -1;
        numerator[m] = 1;
        ZPoly result = numerator;
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            result = divide_exact(result, self(d, self));
        }
        return cache.emplace(m, std::move(result)).first->second;
    };
    return fill(n, fill);
}

// per-level reduction data: minimal polynomial and the reduced coordinates
// of zeta^k for every k needed by products and root embeddings
struct FieldTable {
    int n = 1;
    int phi = 1;
    ZPoly min_poly;
    std::vector<std::vector<Rational>> power;  // power[k] = coords of zeta^k
};

const FieldTable& field_table(int n) {
    if (n <= 0) throw Error(errc::domain, "cyclotomic level must be positive");
    static std::map<int, std::unique_ptr<FieldTable>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto table = std::make_unique<FieldTable>();
    table->n = n;
    table->phi = euler_phi(n);
    table->min_poly = cyclotomic_cached(n);
    const int phi = table->phi;
    const int limit = std::max(n, 2 * phi - 1);
    table->power.reserve(limit);
    for (int k = 0; k < limit; ++k) {
        if (k < phi) {
            std::vector<Rational> unit(phi, Rational(0));
            unit[k] = 1;
            table->power.push_back(std::move(unit));
        } else {
            // zeta^k = zeta * zeta^(k-1), then eliminate the phi-th
            // coordinate with zeta^phi = -(min_poly - x^phi)
            const std::vector<Rational>& prev = table->power[k - 1];
            std::vector<Rational> next(phi, Rational(0));
            for (int j = 0; j + 1 < phi; ++j) next[j + 1] = prev[j];
            const Rational& top = prev[phi - 1];
            if (top != 0) {
                for (int j = 0; j < phi; ++j) {
                    Rational t = top * Rational(table->min_poly[j]);
                    next[j] -= t;
                }
            }
            table->power.push_back(std::move(next));
        }
    }
    const FieldTable& ref = *table;
    cache.emplace(n, std::move(table));
    return ref;
}

// dense rational polynomials for the extended Euclidean inverse
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_sub_scaled(const QPoly& a, const QPoly& b, const Rational& c, int shift) {
    QPoly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, Rational(0));
    for (std::size_t j = 0; j < b.size(); ++j) {
        Rational t = c * b[j];
        r[j + shift] -= t;
    }
    trim(r);
    return r;
}

// division with remainder; returns (quotient, remainder)
std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
    QPoly quot;
    trim(a);
    if (a.size() < b.size()) return {quot, a};
    quot.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        int shift = static_cast<int>(a.size() - b.size());
        quot[shift] = c;
        a = q_sub_scaled(a, b, c, shift);
        if (a.empty()) break;
    }
    return {quot, a};
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            Rational t = a[i] * b[j];
            r[i + j] += t;
        }
    }
    return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Rational(0));
    for (std::size_t j = 0; j < b.size(); ++j) r[j] -= b[j];
    trim(r);
    return r;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
    if (n <= 0) throw Error(errc::domain, "cyclotomic polynomial needs n >= 1");
    return cyclotomic_cached(n);
}

CycNumber CycNumber::zero(int level) {
    const FieldTable& f = field_table(level);
    return CycNumber(level, std::vector<Rational>(f.phi, Rational(0)));
}

CycNumber CycNumber::one(int level) { return from_rational(level, Rational(1)); }

CycNumber CycNumber::from_rational(int level, const Rational& q) {
    const FieldTable& f = field_table(level);
    std::vector<Rational> c(f.phi, Rational(0));
    c[0] = q;
    return CycNumber(level, std::move(c));
}

CycNumber CycNumber::root_of_unity(int level, int order, long exponent) {
    const FieldTable& f = field_table(level);
    if (order <= 0 || level % order != 0)
        throw Error(errc::level_mismatch,
                    "root of unity of order " + std::to_string(order) +
                        " does not embed at level " + std::to_string(level));
    long e = ((exponent % order) + order) % order;
    long k = e * (level / order);  // exponent of zeta_level, already < level
    return CycNumber(level, f.power[k]);
}

void CycNumber::check_levels(const CycNumber& a, const CycNumber& b) {
    if (a.level_ != b.level_)
        throw Error(errc::level_mismatch,
                    "mixed cyclotomic levels " + std::to_string(a.level_) + " and " +
                        std::to_string(b.level_));
}

bool CycNumber::is_zero() const {
    for (const Rational& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycNumber::is_one() const {
    if (coords_[0] != 1) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

CycNumber CycNumber::operator+(const CycNumber& rhs) const {
    check_levels(*this, rhs);
    std::vector<Rational> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coords_[i];
    return CycNumber(level_, std::move(c));
}

CycNumber CycNumber::operator-(const CycNumber& rhs) const {
    check_levels(*this, rhs);
    std::vector<Rational> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coords_[i];
    return CycNumber(level_, std::move(c));
}

CycNumber CycNumber::operator-() const {
    std::vector<Rational> c(coords_);
    for (Rational& x : c) x = -x;
    return CycNumber(level_, std::move(c));
}

CycNumber CycNumber::scaled(const Rational& q) const {
    std::vector<Rational> c(coords_);
    for (Rational& x : c) x *= q;
    return CycNumber(level_, std::move(c));
}

CycNumber CycNumber::operator*(const CycNumber& rhs) const {
    check_levels(*this, rhs);
    const FieldTable& f = field_table(level_);
    const int phi = f.phi;
    // convolution, then reduce the overflow coordinates with the power table
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (int i = 0; i < phi; ++i) {
        if (coords_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (rhs.coords_[j] == 0) continue;
            Rational t = coords_[i] * rhs.coords_[j];
            conv[i + j] += t;
        }
    }
    std::vector<Rational> c(conv.begin(), conv.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0) continue;
        const std::vector<Rational>& red = f.power[k];
        for (int j = 0; j < phi; ++j) {
            Rational t = conv[k] * red[j];
            c[j] += t;
        }
    }
    return CycNumber(level_, std::move(c));
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw Error(errc::division_by_zero, "inverse of zero");
    const FieldTable& f = field_table(level_);

    // extended gcd of the coordinate polynomial with the minimal polynomial;
    // the gcd is a nonzero constant because the minimal polynomial is
    // irreducible and our degree is smaller
    QPoly a(coords_);
    trim(a);
    QPoly m(f.min_poly.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = Rational(f.min_poly[i]);

    QPoly r0 = m, r1 = a;
    QPoly s0 = {}, s1 = {Rational(1)};  // s tracks the coefficient of a
    while (!r1.empty() && r1.size() > 1) {
        auto [q, r2] = q_divmod(r0, r1);
        QPoly s2 = q_sub(s0, q_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty())
        throw Error(errc::internal_consistency, "zero gcd while inverting a nonzero value");
    const Rational g = r1[0];
    std::vector<Rational> c(f.phi, Rational(0));
    auto [drop, reduced] = q_divmod(s1, m);
    (void)drop;
    for (std::size_t i = 0; i < reduced.size(); ++i) c[i] = reduced[i] / g;
    return CycNumber(level_, std::move(c));
}

CycNumber CycNumber::pow(unsigned long e) const {
    CycNumber result = one(level_);
    CycNumber base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        base = base * base;
        e >>= 1UL;
    }
    return result;
}

std::complex<double> CycNumber::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (coords_[k] == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / level_;
        acc += coords_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

}  // namespace gdet
