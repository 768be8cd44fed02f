#include "gdet/cli.hpp"

#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gdet/spec_text.hpp"
#include "gdet/verify.hpp"

namespace gdet {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case errc::parse:
        case errc::incomplete_assignment:
        case errc::invalid_group:
        case errc::invalid_element:
        case errc::domain:
        case errc::subgroup_mismatch:
        case errc::oracle_bound:
            return 2;  // usage
        default:
            return 1;  // verification / internal failure
    }
}

std::string element_list_text(const Group& g, const std::vector<long>& indices) {
    std::string out = "{";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out += ", ";
        out += format_element(g, indices[i]);
    }
    return out + "}";
}

std::string character_name(const Character& chi) {
    std::string out = "chi(";
    const std::vector<int>& c = chi.index().coords;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    return out + ")";
}

// display-only polynomial rendering with decimal coefficients
std::string numeric_poly_text(const Poly& p, const Group& g) {
    if (p.is_zero()) return "0";
    const std::vector<std::string> names = variable_names(g);
    std::string out;
    for (const auto& [mono, coeff] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_numeric_text(coeff) + ")";
        for (int v = 0; v < mono.nvars(); ++v) {
            unsigned e = mono.exponent(v);
            if (e == 0) continue;
            out += "*" + names[v];
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

json subgroup_json(const Subgroup& h) {
    const Group& g = h.parent();
    json gens = json::array();
    for (const Element& e : h.generators()) gens.push_back(format_element(g, g.index_of(e)));
    json members = json::array();
    for (long m : h.members()) members.push_back(format_element(g, m));
    return json{{"generators", gens},
                {"members", members},
                {"order", h.order()},
                {"index", h.index()}};
}

json coefficients_json(const Group& g, const std::vector<std::pair<long, Poly>>& coeffs) {
    json arr = json::array();
    for (const auto& [idx, poly] : coeffs)
        arr.push_back(json{{"h", format_element(g, idx)},
                           {"poly", to_canonical_text(poly, g)}});
    return arr;
}

json alg_element_json(const AlgElement& a) {
    json arr = json::array();
    for (const auto& [idx, poly] : a.coefficients())
        arr.push_back(json{{"g", format_element(a.group(), idx)},
                           {"poly", to_canonical_text(poly, a.group())}});
    return arr;
}

std::string alg_element_pretty(const AlgElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [idx, poly] : a.coefficients()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_pretty_text(poly, a.group()) + ") * " +
               format_element(a.group(), idx);
    }
    return out;
}

struct DocSink {
    const Command& cmd;
    std::ostream& out;
    Clock::time_point start = Clock::now();

    void emit(json doc, const std::string& text) {
        if (cmd.timing) {
            const double ms =
                std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.1f", ms);
            doc["timing_ms"] = std::string(buf);
        }
        if (cmd.format == "json") {
            out << doc.dump(2) << "\n";
        } else {
            out << text;
            if (cmd.timing) out << "elapsed: " << doc["timing_ms"].get<std::string>()
                                << " ms\n";
        }
    }
};

Subgroup resolve_subgroup(const Command& cmd, const Group& g) {
    if (!cmd.subgroup.has_value()) return Subgroup::full(g);
    return Subgroup::closure(g, parse_generators(*cmd.subgroup, g));
}

int run_factorization(const Command& cmd, std::ostream& out) {
    DocSink sink{cmd, out};
    const Group g = parse_group(cmd.group);
    const Subgroup h = resolve_subgroup(cmd, g);
    const FactorEngine engine(g, cmd.oracle_bound);

    json doc;
    std::string text;
    const std::string header = "group: " + format_group(g) + " (order " +
                               std::to_string(g.order()) + ", exponent " +
                               std::to_string(g.exponent()) + ")\n" +
                               "subgroup: " + element_list_text(g, h.members()) + " (order " +
                               std::to_string(h.order()) + ", index " +
                               std::to_string(h.index()) + ")\n";

    if (cmd.verb == Verb::extend) {
        const ExtendedFactorization ext = engine.extended(h);
        doc = json{{"command", "extend"},
                   {"group", format_group(g)},
                   {"level", g.exponent()},
                   {"subgroup", subgroup_json(h)},
                   {"coefficients", coefficients_json(g, ext.coefficients)}};
        json factors = json::array();
        for (std::size_t i = 0; i < ext.factors.size(); ++i)
            factors.push_back(json{{"character", character_name(ext.rep_characters[i])},
                                   {"terms", alg_element_json(ext.factors[i])}});
        doc["factors"] = factors;
        doc["product"] = alg_element_json(ext.product);
        doc["determinant"] = to_canonical_text(ext.determinant, g);
        doc["status"] = std::string(to_string(ext.status));

        text = header + "coefficients:\n";
        for (const auto& [idx, poly] : ext.coefficients)
            text += "  A[" + format_element(g, idx) + "] = " + to_pretty_text(poly, g) + "\n";
        text += "algebra factors:\n";
        for (std::size_t i = 0; i < ext.factors.size(); ++i)
            text += "  " + character_name(ext.rep_characters[i]) + ": " +
                    alg_element_pretty(ext.factors[i]) + "\n";
        text += "product: (" + to_pretty_text(ext.determinant, g) + ") * " +
                format_element(g, g.identity()) + "\n";
        if (cmd.numeric)
            text += "determinant (numeric, non-canonical): " +
                    numeric_poly_text(ext.determinant, g) + "\n";
        text += "status: " + std::string(to_string(ext.status)) + "\n";
    } else {
        const Factorization fact = cmd.verb == Verb::factor ? engine.dedekind()
                                                            : engine.generalized(h);
        const char* verb_name = cmd.verb == Verb::factor ? "factor" : "generalize";
        doc = json{{"command", verb_name},
                   {"group", format_group(g)},
                   {"level", g.exponent()},
                   {"subgroup", subgroup_json(fact.subgroup)},
                   {"coefficients", coefficients_json(g, fact.coefficients)}};
        json factors = json::array();
        for (const Poly& f : fact.factors) factors.push_back(to_canonical_text(f, g));
        doc["factors"] = factors;
        doc["determinant"] = to_canonical_text(fact.product, g);
        doc["status"] = std::string(to_string(fact.status));
        if (cmd.numeric) {
            json num = json::array();
            for (const Poly& f : fact.factors) num.push_back(numeric_poly_text(f, g));
            doc["factors_numeric"] = num;
            doc["numeric_note"] = "decimal display, non-canonical";
        }

        text = (cmd.verb == Verb::factor)
                   ? "group: " + format_group(g) + " (order " + std::to_string(g.order()) +
                         ", exponent " + std::to_string(g.exponent()) + ")\n"
                   : header;
        text += "coefficients:\n";
        for (const auto& [idx, poly] : fact.coefficients)
            text += "  A[" + format_element(g, idx) + "] = " + to_pretty_text(poly, g) + "\n";
        text += "factors:\n";
        for (const Poly& f : fact.factors) text += "  " + to_pretty_text(f, g) + "\n";
        if (cmd.numeric) {
            text += "factors (numeric, non-canonical):\n";
            for (const Poly& f : fact.factors) text += "  " + numeric_poly_text(f, g) + "\n";
        }
        text += "status: " + std::string(to_string(fact.status)) + "\n";
    }
    sink.emit(std::move(doc), text);
    return 0;
}

int run_invert(const Command& cmd, std::ostream& out) {
    DocSink sink{cmd, out};
    const Group g = parse_group(cmd.group);
    const std::vector<Rational> values = parse_assignment(cmd.assignment, g);
    std::vector<CycNumber> assignment;
    assignment.reserve(values.size());
    for (const Rational& q : values)
        assignment.push_back(CycNumber::from_rational(g.exponent(), q));

    const FactorEngine engine(g, cmd.oracle_bound);
    const std::vector<CycNumber> inverse = engine.inverse(assignment);

    json doc{{"command", "invert"},
             {"group", format_group(g)},
             {"level", g.exponent()}};
    json assign = json::array();
    for (long i = 0; i < g.order(); ++i)
        assign.push_back(json{{"g", format_element(g, i)}, {"value", values[i].get_str()}});
    doc["assignment"] = assign;
    json inv = json::array();
    for (long i = 0; i < g.order(); ++i)
        inv.push_back(json{{"g", format_element(g, i)},
                           {"value", to_canonical_text(inverse[i])}});
    doc["inverse"] = inv;
    doc["status"] = std::string(to_string(VerifyStatus::identity_checked));

    std::string text = "group: " + format_group(g) + " (order " + std::to_string(g.order()) +
                       ", exponent " + std::to_string(g.exponent()) + ")\ninverse:\n";
    for (long i = 0; i < g.order(); ++i) {
        text += "  x[" + format_element(g, i) + "] -> " + to_pretty_text(inverse[i]);
        if (cmd.numeric) text += "  (" + to_numeric_text(inverse[i]) + ")";
        text += "\n";
    }
    text += "status: identity-checked\n";
    sink.emit(std::move(doc), text);
    return 0;
}

int run_verify(const Command& cmd, std::ostream& out) {
    DocSink sink{cmd, out};
    const Group g = parse_group(cmd.group);
    VerifyOptions opt;
    opt.oracle_bound = cmd.oracle_bound;
    opt.seed = cmd.seed;
    const std::vector<PropertyResult> results = verify_group(g, opt);

    json doc{{"command", "verify"},
             {"group", format_group(g)},
             {"level", g.exponent()},
             {"seed", cmd.seed},
             {"oracle_bound", cmd.oracle_bound}};
    json props = json::array();
    int failed = 0, skipped = 0;
    for (const PropertyResult& r : results) {
        props.push_back(json{{"name", r.name},
                             {"status", r.pass ? (r.skipped ? "skip" : "pass") : "fail"},
                             {"detail", r.detail}});
        if (!r.pass) ++failed;
        if (r.skipped) ++skipped;
    }
    doc["properties"] = props;
    doc["overall"] = failed == 0 ? "pass" : "fail";

    std::string text = "group: " + format_group(g) + " (order " + std::to_string(g.order()) +
                       ", exponent " + std::to_string(g.exponent()) + ")\n";
    for (const PropertyResult& r : results) {
        const char* tag = r.pass ? (r.skipped ? "SKIP" : "PASS") : "FAIL";
        text += std::string(tag) + " " + r.name;
        if (!r.detail.empty()) text += " (" + r.detail + ")";
        text += "\n";
    }
    text += "overall: " + std::string(failed == 0 ? "PASS" : "FAIL") + " (" +
            std::to_string(results.size()) + " properties, " + std::to_string(failed) +
            " failed, " + std::to_string(skipped) + " skipped)\n";
    sink.emit(std::move(doc), text);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        switch (cmd.verb) {
            case Verb::factor:
            case Verb::extend:
            case Verb::generalize:
                return run_factorization(cmd, out);
            case Verb::invert:
                return run_invert(cmd, out);
            case Verb::verify:
                return run_verify(cmd, out);
        }
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact factorizations of group determinants of finite abelian groups"};
    app.require_subcommand(1);

    Command cmd;
    std::string subgroup_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", cmd.group, "group spec, e.g. Z4xZ2")->required();
        sub->add_option("--format", cmd.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--oracle-bound", cmd.oracle_bound,
                        "largest order checked against the permutation-sum determinant")
            ->capture_default_str();
        sub->add_flag("--timing", cmd.timing, "include elapsed time in the document");
    };

    CLI::App* factor = app.add_subcommand(
        "factor", "classical factorization into linear forms over the dual group");
    add_common(factor);
    factor->add_flag("--numeric", cmd.numeric, "decimal coefficient display (non-canonical)");

    CLI::App* extend = app.add_subcommand(
        "extend", "factorization of Theta(G) e in the group algebra of a subgroup");
    add_common(extend);
    CLI::Option* extend_sub = extend->add_option(
        "--subgroup", subgroup_text, "subgroup generators, e.g. \"2\" or \"(2,0);(0,1)\"");
    extend->add_flag("--numeric", cmd.numeric, "decimal coefficient display (non-canonical)");

    CLI::App* generalize = app.add_subcommand(
        "generalize", "scalar factorization of Theta(G) with |H| factors");
    add_common(generalize);
    CLI::Option* generalize_sub = generalize->add_option(
        "--subgroup", subgroup_text, "subgroup generators, e.g. \"2\" or \"(2,0);(0,1)\"");
    generalize->add_flag("--numeric", cmd.numeric,
                         "decimal coefficient display (non-canonical)");

    CLI::App* invert = app.add_subcommand(
        "invert", "invert a scalar group-algebra element by the determinant formula");
    add_common(invert);
    invert->add_option("--assign", cmd.assignment, "values, e.g. \"x0=2;x1=1\"")->required();
    invert->add_flag("--numeric", cmd.numeric, "decimal coefficient display (non-canonical)");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the exact property suite over every subgroup of a group");
    add_common(verify);
    verify->add_option("--seed", cmd.seed, "seed for the randomized property instances")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (app.got_subcommand(factor)) {
        cmd.verb = Verb::factor;
    } else if (app.got_subcommand(extend)) {
        cmd.verb = Verb::extend;
        if (extend_sub->count() > 0) cmd.subgroup = subgroup_text;
    } else if (app.got_subcommand(generalize)) {
        cmd.verb = Verb::generalize;
        if (generalize_sub->count() > 0) cmd.subgroup = subgroup_text;
    } else if (app.got_subcommand(invert)) {
        cmd.verb = Verb::invert;
    } else {
        cmd.verb = Verb::verify;
    }
    return execute(cmd, out, err);
}

}  // namespace gdet
