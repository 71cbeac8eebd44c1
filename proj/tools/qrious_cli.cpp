// qrious: exact factorial-ratio and q-analogue explorer.
//
// Subcommands: check, qpoly, positivity, ct, search, families.
// Reports are split into a deterministic "data" section and a "meta" section
// holding wall time; byte-stable output lives entirely under "data".

#include "qrious/qrious.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace qrious;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

using Clock = std::chrono::steady_clock;

struct GlobalOpts {
    std::string json_path;
    std::string csv_path;
    unsigned jobs = 1;
    std::size_t budget = kDefaultTermBudget;
    i64 d_max = 0;  // 0: derive 2 * coefficient-abs-sum from the spec
    i64 box = -1;   // -1: default 8 per parameter
    Clock::time_point start = Clock::now();
};

void write_json(const GlobalOpts& g, const ojson& data) {
    if (g.json_path.empty()) return;
    ojson envelope;
    envelope["data"] = data;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - g.start);
    envelope["meta"] = {{"tool", "qrious"}, {"wall_ms", ms.count()}};
    std::string text = envelope.dump(2) + "\n";
    if (g.json_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(g.json_path);
    if (!out) throw std::runtime_error("cannot write " + g.json_path);
    out << text;
}

void write_csv(const GlobalOpts& g, const std::string& table) {
    if (g.csv_path.empty()) return;
    if (g.csv_path == "-") {
        std::cout << table;
        return;
    }
    std::ofstream out(g.csv_path);
    if (!out) throw std::runtime_error("cannot write " + g.csv_path);
    out << table;
}

// Family names resolve through the registry; anything else is spec text.
RatioSpec resolve_spec(const std::string& text, std::string* family_name = nullptr) {
    if (const Family* f = find_family(text)) {
        if (family_name) *family_name = f->name;
        return f->spec;
    }
    if (family_name) family_name->clear();
    return parse_spec(text);
}

ParamPoint parse_point(const std::string& text, std::size_t arity) {
    std::vector<i64> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        values.push_back(std::stoll(item, &used));
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument("bad point component: " + item);
    }
    if (values.size() != arity)
        throw std::invalid_argument("point has " + std::to_string(values.size()) +
                                    " components, spec has " + std::to_string(arity) +
                                    " parameters");
    return ParamPoint{std::move(values)};
}

std::string point_text(const ParamPoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.values[i]);
    }
    return s + ")";
}

std::string factored_text(const CyclotomicExponents& e) {
    std::string s;
    for (const auto& [d, exp] : e.exps) {
        if (!s.empty()) s += "·";
        s += "Φ" + std::to_string(d);
        if (exp != 1) s += "^" + std::to_string(exp);
    }
    return s.empty() ? "1" : s;
}

struct BruteOutcome {
    bool clean = true;
    std::optional<PointWitness> counterexample;
    i64 points_checked = 0;
    std::string csv;
};

BruteOutcome brute_scan(const RatioSpec& spec, i64 box) {
    BruteOutcome out;
    std::string header;
    for (char p : spec.params) {
        header += p;
        header += ',';
    }
    out.csv = header + "integral,value,numerator,denominator\n";
    for_each_lattice_point(spec.arity(), box, [&](std::span<const i64> pt) {
        ParamPoint p{std::vector<i64>(pt.begin(), pt.end())};
        if (!spec.in_domain(p)) return;
        ++out.points_checked;
        std::string row;
        for (i64 x : pt) row += std::to_string(x) + ",";
        RatioValue v = eval_ratio(spec, p);
        if (auto* ni = std::get_if<NonInteger>(&v)) {
            if (!out.counterexample) out.counterexample = PointWitness{p, ni->numerator, ni->denominator};
            out.clean = false;
            out.csv += row + "no,," + dec(ni->numerator) + "," + dec(ni->denominator) + "\n";
        } else {
            out.csv += row + "yes," + dec(std::get<Int>(v)) + ",,\n";
        }
    });
    return out;
}

int cmd_check(const GlobalOpts& g, const std::string& spec_text, const std::string& method) {
    std::string family;
    RatioSpec spec = resolve_spec(spec_text, &family);
    const i64 box = g.box < 0 ? 8 : g.box;
    const i64 d_max = g.d_max > 0 ? g.d_max : 2 * spec.coefficient_abs_sum();

    std::cout << "spec: " << spec.text() << "\n";
    std::cout << "height: " << spec.height() << "  balanced: " << (spec.balanced() ? "yes" : "no")
              << "\n";

    ojson data;
    data["command"] = "check";
    data["spec_text"] = spec.text();
    data["spec"] = spec_json(spec);
    if (!family.empty()) data["family"] = family;
    data["method"] = method;

    std::optional<Verdict> criterion;
    std::optional<BruteOutcome> brute;

    if (method == "criterion" || method == "both") {
        bool positive_1d = spec.arity() == 1;
        if (positive_1d)
            for (const auto& f : spec.num) positive_1d = positive_1d && f.coeffs[0] > 0;
        if (positive_1d)
            for (const auto& f : spec.den) positive_1d = positive_1d && f.coeffs[0] > 0;
        criterion = positive_1d ? check_integrality_1d(spec)
                                : check_integrality_scan(spec, d_max, box);
        data["criterion"] = verdict_json(*criterion);
        std::cout << "criterion: " << to_string(criterion->status) << " (scan depth "
                  << criterion->scan_depth << ", certified " << criterion->certified_depth
                  << ")\n";
        if (criterion->floor_witness) {
            const auto& w = *criterion->floor_witness;
            std::cout << "  floor sum " << w.value << " at residue "
                      << point_text(ParamPoint{w.residue}) << " mod " << w.modulus << "\n";
        }
    }
    if (method == "brute" || method == "both") {
        brute = brute_scan(spec, box);
        data["brute"] = {{"box", box},
                         {"points_checked", brute->points_checked},
                         {"clean", brute->clean}};
        if (brute->counterexample) {
            data["brute"]["counterexample"] = {
                {"point", brute->counterexample->point.values},
                {"numerator", dec(brute->counterexample->numerator)},
                {"denominator", dec(brute->counterexample->denominator)}};
            std::cout << "brute: counterexample at " << point_text(brute->counterexample->point)
                      << ": " << dec(brute->counterexample->numerator) << "/"
                      << dec(brute->counterexample->denominator) << "\n";
        } else {
            std::cout << "brute: clean on " << brute->points_checked << " points (box " << box
                      << ")\n";
        }
        write_csv(g, brute->csv);
    }

    bool agree = true;
    if (criterion && brute) {
        // The floor criterion is sufficient: an Integral verdict contradicted
        // by a concrete non-integer value is an internal error. A criterion
        // counterexample outside the brute box is not a disagreement.
        if (criterion->status == IntegralityStatus::Integral && !brute->clean) agree = false;
        data["agree"] = agree;
        if (!agree) std::cout << "INTERNAL-ERROR: criterion and brute force disagree\n";
    }

    IntegralityStatus verdict = IntegralityStatus::Inconclusive;
    if (criterion) verdict = criterion->status;
    if (brute && !brute->clean) verdict = IntegralityStatus::NonIntegral;
    data["verdict"] = to_string(verdict);
    std::cout << "verdict: " << to_string(verdict) << "\n";
    write_json(g, data);
    return verdict == IntegralityStatus::NonIntegral || !agree ? kExitCounterexample : 0;
}

int cmd_qpoly(const GlobalOpts& g, const std::string& spec_text, const std::string& at,
              const std::string& format) {
    std::string family;
    RatioSpec spec = resolve_spec(spec_text, &family);
    ParamPoint point = parse_point(at, spec.arity());

    ojson data;
    data["command"] = "qpoly";
    data["spec_text"] = spec.text();
    if (!family.empty()) data["family"] = family;
    data["point"] = point.values;

    CyclotomicExponents exps = q_ratio_exponents(spec, point);
    if (auto neg = exps.first_negative()) {
        data["status"] = "NotPolynomial";
        data["cyclotomic_index"] = neg->first;
        data["exponent"] = neg->second;
        std::cout << "NotPolynomial: cyclotomic index " << neg->first << " has exponent "
                  << neg->second << "\n";
        write_json(g, data);
        return kExitCounterexample;
    }

    data["status"] = "Polynomial";
    data["factored"] = factored_text(exps);
    if (format == "factored") {
        std::cout << factored_text(exps) << "\n";
    } else {
        QRatioResult r = q_ratio_poly(spec, point);
        const IntPoly& p = std::get<IntPoly>(r);
        data["degree"] = p.degree();
        data["coeffs"] = p.coeff_list();
        std::cout << p.coeff_list() << "\n";
    }
    write_json(g, data);
    return 0;
}

int cmd_positivity(const GlobalOpts& g, const std::string& spec_text) {
    std::string family;
    RatioSpec spec = resolve_spec(spec_text, &family);
    const i64 box = g.box < 0 ? 8 : g.box;
    PositivityReport report =
        positivity_scan(spec, box, g.jobs, family.empty() ? spec.text() : family);

    std::cout << "family: " << report.family << "  box: " << report.box << "\n";
    std::cout << "status: " << to_string(report.status) << "\n";
    if (report.min_coefficient) {
        std::cout << "min coefficient: " << dec(report.min_coefficient->value) << " at "
                  << point_text(report.min_coefficient->point) << " q^"
                  << report.min_coefficient->power << "\n";
    }
    std::cout << "points: " << report.points_scanned << " scanned, " << report.points_skipped
              << " skipped\n";
    for (const auto& w : report.witnesses)
        std::cout << "  witness " << point_text(w.point) << ": " << w.detail << "\n";

    ojson data;
    data["command"] = "positivity";
    data["report"] = positivity_json(report);
    write_json(g, data);
    return report.status == PositivityStatus::AllNonNegative ? 0 : kExitCounterexample;
}

int cmd_ct(const GlobalOpts& g, i64 m, i64 n, bool q1) {
    G2Options opts;
    opts.term_budget = g.budget;
    opts.q1 = q1;
    IntPoly ct = g2_constant_term(m, n, opts);

    bool match;
    std::string expected_text;
    if (q1) {
        Int expected = std::get<Int>(eval_ratio(find_family("A")->spec, ParamPoint{m, n}));
        match = ct == IntPoly::constant(expected);
        expected_text = dec(expected);
    } else {
        QRatioResult r = q_ratio_poly(find_family("Aq")->spec, ParamPoint{m, n});
        const IntPoly& aq = std::get<IntPoly>(r);
        match = ct == aq;
        expected_text = aq.pretty();
    }

    std::cout << "ct: " << ct.pretty() << "\n";
    std::cout << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";

    ojson data;
    data["command"] = "ct";
    data["m"] = m;
    data["n"] = n;
    data["q1"] = q1;
    data["ct_coeffs"] = ct.coeff_list();
    data["expected"] = expected_text;
    data["match"] = match;
    write_json(g, data);
    return match ? 0 : kExitCounterexample;
}

int cmd_search(const GlobalOpts& g, i64 max_sum, i64 max_terms) {
    auto candidates = search_height_one(max_sum, max_terms);
    i64 integral = 0, non_integral = 0, internal_errors = 0;
    for (const auto& c : candidates) {
        std::cout << c.label();
        switch (c.outcome) {
            case SearchCandidate::Outcome::Integral:
                ++integral;
                std::cout << " Integral";
                break;
            case SearchCandidate::Outcome::NonIntegral:
                ++non_integral;
                std::cout << " NonIntegral";
                if (c.witness_n) std::cout << " witness n=" << *c.witness_n;
                break;
            case SearchCandidate::Outcome::Skipped:
                std::cout << " Skipped " << c.skip_reason;
                break;
        }
        if (c.internal_error) {
            ++internal_errors;
            std::cout << " INTERNAL-ERROR";
        }
        std::cout << "\n";
    }
    std::cout << "candidates: " << candidates.size() << "  integral: " << integral
              << "  non-integral: " << non_integral << "  internal errors: " << internal_errors
              << "\n";

    ojson data;
    data["command"] = "search";
    data["max_sum"] = max_sum;
    data["max_terms"] = max_terms;
    data["candidates"] = ojson::array();
    for (const auto& c : candidates) data["candidates"].push_back(candidate_json(c));
    data["counts"] = {{"total", candidates.size()},
                      {"integral", integral},
                      {"non_integral", non_integral},
                      {"internal_errors", internal_errors}};
    write_json(g, data);
    return internal_errors == 0 ? 0 : kExitCounterexample;
}

int cmd_families(const GlobalOpts& g) {
    ojson data;
    data["command"] = "families";
    data["families"] = ojson::array();
    for (const auto& f : known_families()) {
        std::cout << f.name << "\t" << f.display << "\theight " << f.height() << "\t"
                  << (f.balanced() ? "balanced" : "unbalanced") << "\t" << f.domain_note << "\t"
                  << f.spec.text() << "\n";
        data["families"].push_back({{"name", f.name},
                                    {"display", f.display},
                                    {"domain", f.domain_note},
                                    {"height", f.height()},
                                    {"balanced", f.balanced()},
                                    {"spec_text", f.spec.text()},
                                    {"spec", spec_json(f.spec)}});
    }
    write_json(g, data);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorial-ratio and q-analogue explorer"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("QRIOUS_BUDGET")) g.budget = std::strtoull(env, nullptr, 10);
    app.add_option("--json", g.json_path, "write a JSON report to this path ('-' for stdout)");
    app.add_option("--csv", g.csv_path, "write a per-point CSV table to this path (check only)");
    app.add_option("--jobs", g.jobs, "worker threads for scans");
    app.add_option("--budget", g.budget, "stored-term budget for ct (env QRIOUS_BUDGET)");
    app.add_option("--d-max", g.d_max, "largest modulus for the residue scan");
    app.add_option("--box", g.box, "per-parameter bound for box scans");

    std::string spec_text, method = "both", at, format = "coeffs";
    i64 m = 0, n = 0, max_sum = 0, max_terms = 0;
    bool q1 = false;

    CLI::App* check = app.add_subcommand("check", "decide integrality of a factorial ratio");
    check->fallthrough();
    check->add_option("spec", spec_text, "family name or spec text")->required();
    check->add_option("--method", method, "criterion, brute, or both")
        ->check(CLI::IsMember({"criterion", "brute", "both"}));

    CLI::App* qpoly = app.add_subcommand("qpoly", "assemble the q-analogue at a point");
    qpoly->fallthrough();
    qpoly->add_option("spec", spec_text, "family name or spec text")->required();
    qpoly->add_option("--at", at, "evaluation point, e.g. 2,1")->required();
    qpoly->add_option("--format", format, "coeffs or factored")
        ->check(CLI::IsMember({"coeffs", "factored"}));

    CLI::App* positivity =
        app.add_subcommand("positivity", "scan q-analogue coefficients over a box");
    positivity->fallthrough();
    positivity->add_option("spec", spec_text, "family name or spec text")->required();

    CLI::App* ct = app.add_subcommand("ct", "constant term of the G2 product vs A_q");
    ct->fallthrough();
    ct->add_option("-m", m, "first parameter")->required();
    ct->add_option("-n", n, "second parameter")->required();
    ct->add_flag("--q1", q1, "specialize at q=1 and compare against A(m,n)");

    CLI::App* search = app.add_subcommand("search", "enumerate height-one candidates");
    search->fallthrough();
    search->add_option("max_sum", max_sum, "largest coefficient sum")->required();
    search->add_option("max_terms", max_terms, "largest numerator length")->required();

    CLI::App* families = app.add_subcommand("families", "list the built-in families");
    families->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(g, spec_text, method);
        if (qpoly->parsed()) return cmd_qpoly(g, spec_text, at, format);
        if (positivity->parsed()) return cmd_positivity(g, spec_text);
        if (ct->parsed()) return cmd_ct(g, m, n, q1);
        if (search->parsed()) return cmd_search(g, max_sum, max_terms);
        if (families->parsed()) return cmd_families(g);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
