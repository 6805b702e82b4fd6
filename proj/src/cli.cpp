#include "chs/cli.hpp"

#include "chs/matchings.hpp"
#include "chs/minforce.hpp"
#include "chs/oracle.hpp"
#include "chs/recurrence.hpp"
#include "chs/spec.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace chs::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OracleOptions oracle_options() {
    OracleOptions opts;
    if (const char* env = std::getenv("FORCING_BUDGET")) {
        std::string text(env);
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size()) throw UsageError("FORCING_BUDGET must be a non-negative integer");
        opts.matching_budget = value;
    }
    return opts;
}

json spec_json(const AnySpec& spec) { return json::parse(to_json(spec)); }

json sequence_json(const MatchingSequence& seq) {
    if (!seq.lower) return seq.upper;
    return json{{"upper", seq.upper}, {"lower", *seq.lower}};
}

json polynomial_json(const Polynomial& p) {
    return json{{"text", to_text(p)},
                {"coefficients", to_decimal_strings(p)},
                {"matchings", eval_at_one(p).str()}};
}

std::string spectrum_text(const std::set<std::size_t>& s) {
    std::string out;
    for (auto v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
    return "{" + out + "}";
}

enum class Method { recurrence, bruteforce, both };

struct Options {
    std::string spec;
    std::string format = "text";
    std::string method = "recurrence";
    std::string matching;
    std::size_t max_rows = 3;
    int max_k = 3;
    bool turning = false;
};

Method parse_method(const std::string& m) {
    if (m == "recurrence") return Method::recurrence;
    if (m == "bruteforce") return Method::bruteforce;
    return Method::both;
}

Polynomial compute(const AnySpec& spec, Method method, const OracleOptions& opts) {
    if (method == Method::recurrence) return forcing_poly(spec);
    if (method == Method::bruteforce) return forcing_polynomial_bruteforce(spec, opts);
    const Polynomial rec = forcing_poly(spec);
    const Polynomial brute = forcing_polynomial_bruteforce(spec, opts);
    if (rec != brute)
        throw Mismatch("engines disagree on " + to_string(spec) + ": recurrence " + to_text(rec) + ", bruteforce " +
                       to_text(brute));
    return rec;
}

int cmd_describe(const Options& o, std::ostream& out) {
    const AnySpec spec = load_spec(o.spec);
    const Integer count = count_matchings(spec);
    const bool turning = std::holds_alternative<TurningChsSpec>(spec);
    if (o.format == "json") {
        json j = spec_json(spec);
        j["notation"] = to_string(spec);
        j["type"] = turning ? "turning" : "monotonic";
        j["hexagons"] = hexagon_count(spec);
        j["matchings"] = count.str();
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "spec: " << to_string(spec) << '\n' << "type: " << (turning ? "turning" : "monotonic") << '\n';
    if (turning) {
        const auto& t = std::get<TurningChsSpec>(spec);
        out << "rows: " << t.upper().size() << " upper, " << t.lower().size() << " lower\n";
    } else {
        out << "rows: " << std::get<ChsSpec>(spec).size() << '\n';
    }
    out << "hexagons: " << hexagon_count(spec) << '\n' << "matchings: " << count << '\n';
    return ok;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const AnySpec spec = load_spec(o.spec);
    const auto opts = oracle_options();
    const Integer count = count_matchings(spec);
    if (count > opts.matching_budget)
        throw BudgetExceeded(to_string(spec) + " has " + count.str() + " perfect matchings, budget is " +
                             std::to_string(opts.matching_budget));
    const auto seqs = enumerate_sequences(spec);
    if (o.format == "json") {
        json list = json::array();
        for (const auto& s : seqs) list.push_back(sequence_json(s));
        out << json{{"spec", to_string(spec)}, {"matchings", list}}.dump(2) << '\n';
        return ok;
    }
    for (const auto& s : seqs) out << to_string(s) << '\n';
    return ok;
}

int cmd_poly(const Options& o, std::ostream& out) {
    const AnySpec spec = load_spec(o.spec);
    const Polynomial p = compute(spec, parse_method(o.method), oracle_options());
    if (o.format == "json") {
        json j = polynomial_json(p);
        j["spec"] = to_string(spec);
        j["method"] = o.method;
        out << j.dump(2) << '\n';
    } else if (o.format == "latex") {
        out << "$" << to_latex(p) << "$\n";
    } else {
        out << to_text(p) << '\n';
    }
    return ok;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    const AnySpec spec = load_spec(o.spec);
    const auto s = support(compute(spec, parse_method(o.method), oracle_options()));
    if (o.format == "json")
        out << json{{"spec", to_string(spec)}, {"spectrum", s}}.dump(2) << '\n';
    else
        out << spectrum_text(s) << '\n';
    return ok;
}

int cmd_minforce(const Options& o, std::ostream& out) {
    const AnySpec any = load_spec(o.spec);
    const auto* spec = std::get_if<ChsSpec>(&any);
    if (!spec) throw UsageError("minforce takes a monotonic system; " + to_string(any) + " has a turning row");
    const MatchingSequence seq = parse_matching(o.matching);
    const MinForceResult r = minimum_forcing_set_counted(*spec, seq);
    if (o.format == "json") {
        json edges = json::array();
        for (const auto& e : r.order) edges.push_back(to_string(e));
        out << json{{"spec", to_string(any)},
                    {"matching", to_string(seq)},
                    {"forcing_set", edges},
                    {"size", r.order.size()}}
                   .dump(2)
            << '\n';
        return ok;
    }
    std::string line;
    for (const auto& e : r.order) line += (line.empty() ? "" : " ") + to_string(e);
    out << line << '\n';
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto opts = oracle_options();
    std::vector<AnySpec> specs;
    if (o.turning)
        for (auto& s : all_turning_specs(o.max_rows, o.max_k)) specs.emplace_back(std::move(s));
    else
        for (auto& s : all_monotonic_specs(o.max_rows, o.max_k)) specs.emplace_back(std::move(s));
    ForcingMemo memo;
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& spec : specs) {
        const Polynomial rec = forcing_poly(spec, &memo);
        try {
            const Polynomial brute = forcing_polynomial_bruteforce(spec, opts);
            if (rec == brute) {
                ++pass;
                out << "PASS " << to_string(spec) << ' ' << to_text(rec) << '\n';
            } else {
                ++fail;
                out << "FAIL " << to_string(spec) << " recurrence " << to_text(rec) << " bruteforce "
                    << to_text(brute) << '\n';
            }
        } catch (const BudgetExceeded&) {
            ++skip;
            out << "SKIP " << to_string(spec) << " over matching budget\n";
        }
    }
    out << "checked " << specs.size() << ": " << pass << " passed, " << fail << " failed, " << skip
        << " skipped\n";
    return fail ? mismatch : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Forcing polynomials of constructable hexagonal systems", "chs_forcing"};
    app.require_subcommand(1);
    Options o;
    const std::string spec_help = "compact notation (\"3,3;1,2\" or \"k;h|k';h'\"), inline JSON, or a JSON file";

    auto* describe = app.add_subcommand("describe", "normalized spec, hexagon count and matching count");
    describe->add_option("--spec", o.spec, spec_help)->required();
    describe->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* enumerate = app.add_subcommand("enumerate", "all perfect matchings as sequences");
    enumerate->add_option("--spec", o.spec, spec_help)->required();
    enumerate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* poly = app.add_subcommand("poly", "the forcing polynomial");
    poly->add_option("--spec", o.spec, spec_help)->required();
    poly->add_option("--method", o.method)->check(CLI::IsMember({"recurrence", "bruteforce", "both"}));
    poly->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "latex"}));

    auto* spectrum = app.add_subcommand("spectrum", "the set of forcing numbers");
    spectrum->add_option("--spec", o.spec, spec_help)->required();
    spectrum->add_option("--method", o.method)->check(CLI::IsMember({"recurrence", "bruteforce", "both"}));
    spectrum->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* minforce = app.add_subcommand("minforce", "a minimum forcing set of one matching (monotonic systems)");
    minforce->add_option("--spec", o.spec, spec_help)->required();
    minforce->add_option("--matching", o.matching, "column of the vertical edge per row, e.g. 0,3,3,4,4")
        ->required();
    minforce->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "recurrence against brute force on every spec within bounds");
    verify->add_option("--max-rows", o.max_rows)->check(CLI::Range(1, 8));
    verify->add_option("--max-k", o.max_k)->check(CLI::Range(1, 8));
    verify->add_flag("--turning", o.turning, "sweep turning systems instead of monotonic ones");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage;
    }

    try {
        if (describe->parsed()) return cmd_describe(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (poly->parsed()) return cmd_poly(o, out);
        if (spectrum->parsed()) return cmd_spectrum(o, out);
        if (minforce->parsed()) return cmd_minforce(o, out);
        return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const SpecError& e) {
        err << "invalid spec: " << e.what() << '\n';
        return invalid_input;
    } catch (const MatchingError& e) {
        err << "invalid matching: " << e.what() << '\n';
        return invalid_input;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget_exceeded;
    } catch (const Mismatch& e) {
        err << "mismatch: " << e.what() << '\n';
        return mismatch;
    }
}

}  // namespace chs::cli
