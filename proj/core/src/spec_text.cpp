#include "gdet/spec_text.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace gdet {

namespace {

// minimal cursor-based scanner shared by all the little grammars
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    void skip_ws() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool try_consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (peek() != c)
            throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }

    long integer(const char* what) {
        skip_ws();
        std::size_t start = pos;
        if (peek() == '-' || peek() == '+') ++pos;
        std::size_t digits = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError(std::string("expected ") + what, start);
        long value = 0;
        bool negative = text[start] == '-';
        for (std::size_t i = digits; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000000L) throw ParseError("integer too large", start);
        }
        return negative ? -value : value;
    }

    Rational rational(const char* what) {
        skip_ws();
        std::size_t start = pos;
        long num = integer(what);
        if (try_consume('/')) {
            long den = integer("denominator");
            if (den <= 0) throw ParseError("denominator must be positive", start);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }
};

Element scan_element(Scanner& s, const Group& g) {
    s.skip_ws();
    std::vector<int> coords;
    if (s.peek() == '(') {
        s.expect('(', "'('");
        coords.push_back(static_cast<int>(s.integer("residue")));
        while (s.try_consume(',')) coords.push_back(static_cast<int>(s.integer("residue")));
        s.expect(')', "')'");
    } else {
        if (g.rank() != 1)
            throw ParseError("bare integer element needs a rank-1 group", s.pos);
        coords.push_back(static_cast<int>(s.integer("residue")));
    }
    if (static_cast<int>(coords.size()) != g.rank())
        throw ParseError("element has " + std::to_string(coords.size()) +
                             " coordinates, group has rank " + std::to_string(g.rank()),
                         s.pos);
    return g.reduce(Element(std::move(coords)));
}

}  // namespace

Group parse_group(std::string_view text) {
    Scanner s{text};
    std::vector<int> moduli;
    for (;;) {
        s.skip_ws();
        if (s.peek() != 'Z') throw ParseError("expected 'Z'", s.pos);
        ++s.pos;
        long m = s.integer("modulus");
        if (m <= 0) throw ParseError("modulus must be positive", s.pos);
        moduli.push_back(static_cast<int>(m));
        s.skip_ws();
        if (s.done()) break;
        if (s.peek() != 'x') throw ParseError("expected 'x' between cyclic factors", s.pos);
        ++s.pos;
    }
    return Group(std::move(moduli));
}

std::string format_group(const Group& g) {
    std::string out;
    for (int i = 0; i < g.rank(); ++i) {
        if (i) out += "x";
        out += "Z" + std::to_string(g.moduli()[i]);
    }
    return out;
}

Element parse_element(std::string_view text, const Group& g) {
    Scanner s{text};
    Element e = scan_element(s, g);
    s.skip_ws();
    if (!s.done()) throw ParseError("trailing characters after element", s.pos);
    return e;
}

std::vector<Element> parse_generators(std::string_view text, const Group& g) {
    std::vector<Element> gens;
    Scanner s{text};
    s.skip_ws();
    if (s.done()) return gens;
    for (;;) {
        gens.push_back(scan_element(s, g));
        s.skip_ws();
        if (s.done()) break;
        s.expect(';', "';' between generators");
    }
    return gens;
}

std::vector<Rational> parse_assignment(std::string_view text, const Group& g) {
    std::vector<Rational> values(g.order());
    std::vector<char> assigned(g.order(), 0);
    Scanner s{text};
    s.skip_ws();
    for (;;) {
        s.skip_ws();
        if (s.peek() != 'x') throw ParseError("expected variable 'x<element>'", s.pos);
        ++s.pos;
        Element e = scan_element(s, g);
        long idx = g.index_of(e);
        s.expect('=', "'='");
        Rational q = s.rational("rational value");
        if (assigned[idx])
            throw ParseError("duplicate value for " + format_element(g, idx), s.pos);
        assigned[idx] = 1;
        values[idx] = q;
        s.skip_ws();
        if (s.done()) break;
        s.expect(';', "';' between assignments");
    }
    for (long i = 0; i < g.order(); ++i)
        if (!assigned[i])
            throw Error(errc::incomplete_assignment,
                        "no value for " + format_element(g, i));
    return values;
}

std::string format_element(const Group& g, long element_index) {
    const Element e = g.element_at(element_index);
    if (g.rank() == 1) return std::to_string(e.coords[0]);
    std::string out = "(";
    for (int i = 0; i < g.rank(); ++i) {
        if (i) out += ",";
        out += std::to_string(e.coords[i]);
    }
    return out + ")";
}

std::vector<std::string> variable_names(const Group& g) {
    std::vector<std::string> names;
    names.reserve(g.order());
    for (long i = 0; i < g.order(); ++i) names.push_back("x[" + format_element(g, i) + "]");
    return names;
}

std::string to_canonical_text(const CycNumber& z) {
    std::string out = "[";
    const std::vector<Rational>& c = z.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += c[i].get_str();
    }
    return out + "]";
}

std::string to_canonical_text(const Poly& p, const Group& g) {
    if (p.is_zero()) return "0";
    const std::vector<std::string> names = variable_names(g);
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        if (!first) out += " + ";
        first = false;
        out += to_canonical_text(coeff);
        for (int v = 0; v < mono.nvars(); ++v) {
            unsigned e = mono.exponent(v);
            if (e == 0) continue;
            out += "*" + names[v];
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

CycNumber scan_cyc(Scanner& s, int level) {
    s.expect('[', "'[' opening a coefficient");
    std::vector<Rational> coords;
    coords.push_back(s.rational("rational"));
    while (s.try_consume(',')) coords.push_back(s.rational("rational"));
    s.expect(']', "']' closing a coefficient");
    const CycNumber shape = CycNumber::zero(level);
    if (coords.size() != shape.coords().size())
        throw ParseError("coefficient has " + std::to_string(coords.size()) +
                             " coordinates, level " + std::to_string(level) + " needs " +
                             std::to_string(shape.coords().size()),
                         s.pos);
    CycNumber acc = CycNumber::from_rational(level, coords[0]);
    for (std::size_t k = 1; k < coords.size(); ++k) {
        if (coords[k] == 0) continue;
        CycNumber basis = CycNumber::root_of_unity(level, level, static_cast<long>(k));
        acc = acc + basis.scaled(coords[k]);
    }
    return acc;
}

}  // namespace

CycNumber parse_cyc(std::string_view text, int level) {
    Scanner s{text};
    CycNumber z = scan_cyc(s, level);
    s.skip_ws();
    if (!s.done()) throw ParseError("trailing characters after coefficient", s.pos);
    return z;
}

Poly parse_poly(std::string_view text, const Group& g, int level) {
    const int nvars = static_cast<int>(g.order());
    Scanner s{text};
    s.skip_ws();
    if (s.peek() == '0') {
        ++s.pos;
        s.skip_ws();
        if (!s.done()) throw ParseError("trailing characters after zero polynomial", s.pos);
        return Poly(nvars, level);
    }

    Poly::TermMap terms;
    for (;;) {
        CycNumber coeff = scan_cyc(s, level);
        std::vector<unsigned> exps(nvars, 0);
        while (s.try_consume('*')) {
            s.skip_ws();
            if (s.peek() != 'x') throw ParseError("expected variable 'x[...]'", s.pos);
            ++s.pos;
            s.expect('[', "'['");
            Element e = scan_element(s, g);
            s.expect(']', "']'");
            long var = g.index_of(e);
            unsigned power = 1;
            if (s.try_consume('^')) {
                long p = s.integer("exponent");
                if (p <= 0) throw ParseError("exponent must be positive", s.pos);
                power = static_cast<unsigned>(p);
            }
            exps[var] += power;
        }
        Monomial mono(std::move(exps));
        auto it = terms.find(mono);
        if (it == terms.end())
            terms.emplace(std::move(mono), std::move(coeff));
        else
            it->second = it->second + coeff;

        s.skip_ws();
        if (s.done()) break;
        s.expect('+', "'+' between terms");
    }
    return Poly::from_terms(nvars, level, std::move(terms));
}

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string root_symbol(int level) {
    return level == 3 ? std::string("w") : "z" + std::to_string(level);
}

// q * zeta^k with k > 0, e.g. "w", "-z8^3", "2/3*w^2"
std::string scaled_root_text(const Rational& q, int level, int k) {
    std::string sym = root_symbol(level);
    if (k > 1) sym += "^" + std::to_string(k);
    if (q == 1) return sym;
    if (q == -1) return "-" + sym;
    return rational_text(q) + "*" + sym;
}

// try to recognize z as q * zeta^k; the reduced powers can have several
// nonzero coordinates, so compare against each reduced power directly
bool as_scaled_root(const CycNumber& z, Rational& q_out, int& k_out) {
    const int level = z.level();
    for (int k = 1; k < level; ++k) {
        const CycNumber root = CycNumber::root_of_unity(level, level, k);
        const std::vector<Rational>& r = root.coords();
        const std::vector<Rational>& v = z.coords();
        std::size_t pivot = r.size();
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == r.size() || v[pivot] == 0) continue;
        Rational q = v[pivot] / r[pivot];
        bool match = true;
        for (std::size_t i = 0; i < r.size(); ++i) {
            Rational expect = q * r[i];
            if (v[i] != expect) {
                match = false;
                break;
            }
        }
        if (match) {
            q_out = q;
            k_out = k;
            return true;
        }
    }
    return false;
}

}  // namespace

std::string to_pretty_text(const CycNumber& z) {
    if (z.is_rational()) return rational_text(z.rational_part());
    Rational q;
    int k = 0;
    if (as_scaled_root(z, q, k)) return scaled_root_text(q, z.level(), k);

    // general sum over the power basis
    std::string out;
    const std::vector<Rational>& c = z.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        std::string piece = (i == 0) ? rational_text(c[i])
                                     : scaled_root_text(c[i], z.level(), static_cast<int>(i));
        if (out.empty()) {
            out = piece;
        } else if (piece.starts_with('-')) {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

std::string to_pretty_text(const Poly& p, const Group& g) {
    if (p.is_zero()) return "0";
    const std::vector<std::string> names = variable_names(g);
    std::string out;
    for (const auto& [mono, coeff] : p.terms()) {
        std::string vars;
        for (int v = 0; v < mono.nvars(); ++v) {
            unsigned e = mono.exponent(v);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[v];
            if (e > 1) vars += "^" + std::to_string(e);
        }

        std::string coeff_text = to_pretty_text(coeff);
        const bool is_sum = coeff_text.find(" + ") != std::string::npos ||
                            coeff_text.find(" - ") != std::string::npos;
        std::string piece;
        if (vars.empty()) {
            piece = is_sum ? "(" + coeff_text + ")" : coeff_text;
        } else if (coeff_text == "1") {
            piece = vars;
        } else if (coeff_text == "-1") {
            piece = "-" + vars;
        } else if (is_sum) {
            piece = "(" + coeff_text + ")*" + vars;
        } else {
            piece = coeff_text + "*" + vars;
        }

        if (out.empty()) {
            out = piece;
        } else if (piece.starts_with('-')) {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

std::string to_numeric_text(const CycNumber& z) {
    const std::complex<double> v = z.to_complex();
    // suppress evaluation noise around exact axis values
    double re = std::abs(v.real()) < 1e-12 ? 0.0 : v.real();
    double im = std::abs(v.imag()) < 1e-12 ? 0.0 : v.imag();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", re, im);
    return buf;
}

}  // namespace gdet
