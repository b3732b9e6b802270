#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "signedsum/bounds.hpp"
#include "signedsum/constructions.hpp"
#include "signedsum/group.hpp"
#include "signedsum/search.hpp"
#include "signedsum/structure.hpp"
#include "signedsum/sumset.hpp"
#include "signedsum/verify.hpp"

namespace signedsum::cli {

namespace {

using json = nlohmann::json;

struct RunConfig {
    int workers = 1;
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t max_subsets = SearchLimits{}.max_subsets;
    int degree_cap = 60;
    bool timing = false;

    // Worker count is left out so output does not depend on it.
    json echo() const {
        return {{"format", format},
                {"seed", seed},
                {"max_subsets", max_subsets},
                {"degree_cap", degree_cap},
                {"timing", timing}};
    }
    std::string header() const {
        return "# config: format=" + format + " seed=" + std::to_string(seed) +
               " max_subsets=" + std::to_string(max_subsets) + " degree_cap=" + std::to_string(degree_cap) +
               " timing=" + (timing ? "on" : "off") + "\n";
    }
};

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
    std::string out;
    bool first = true;
    for (const auto& f : fields) {
        if (!first) out += ',';
        out += csv_field(f);
        first = false;
    }
    return out + "\n";
}

json count_json(ExtendedCount c) {
    if (c.is_infinite()) return "inf";
    return c.value();
}

json set_json(const GroupSubset& a) {
    json elems = json::array();
    for (Code c : a.codes()) elems.push_back(a.group().format(c));
    return elems;
}

// Shared output step: json gets the config block, text and csv get a header line.
void emit(const RunConfig& cfg, std::ostream& out, json doc, const std::string& text, const std::string& csv) {
    if (cfg.format == "json") {
        doc["config"] = cfg.echo();
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << cfg.header() << csv;
    } else {
        out << cfg.header() << text;
    }
}

// ---------------------------------------------------------------------------
// sumset

struct SumsetArgs {
    std::string group, set, kind = "plain", H = "1";
};

void cmd_sumset(const RunConfig& cfg, const SumsetArgs& a, std::ostream& out) {
    auto g = GroupSpec::parse(a.group);
    auto A = GroupSubset::parse(g, a.set);
    auto kind = parse_kind(a.kind);
    auto H = MultiplicitySet::parse(a.H);
    auto result = union_fold(A, H, kind);

    json doc = {{"command", "sumset"},   {"group", g.to_string()},      {"set", A.to_string()},
                {"kind", to_string(kind)}, {"H", H.to_string()},          {"result", result.to_string()},
                {"elements", set_json(result)}, {"size", result.size()}};
    std::string text = result.to_string() + "\nsize: " + std::to_string(result.size()) + "\n";
    std::string csv = csv_row({"group", "set", "kind", "H", "size", "result"}) +
                      csv_row({g.to_string(), A.literal(), to_string(kind), H.to_string(),
                               std::to_string(result.size()), result.literal()});
    emit(cfg, out, doc, text, csv);
}

// ---------------------------------------------------------------------------
// rho

struct RhoArgs {
    std::string group, kind = "signed", H = "1", filter = "all";
    std::size_t m = 1;
    bool no_prune = false, serial = false, progress = false;
    int progress_ms = 2000;
};

RhoQuery make_query(const std::string& group, std::size_t m, const std::string& kind, const std::string& H,
                    const std::string& filter, bool prune) {
    RhoQuery q;
    q.group = GroupSpec::parse(group);
    q.m = m;
    q.kind = parse_kind(kind);
    q.H = MultiplicitySet::parse(H);
    q.filter = ClassFilter::parse(filter);
    q.prune = prune;
    return q;
}

json rho_json(const RhoQuery& q, const RhoResult& r) {
    return {{"group", q.group.to_string()},
            {"m", q.m},
            {"kind", to_string(q.kind)},
            {"H", q.H.to_string()},
            {"filter", q.filter.to_string()},
            {"value", r.value},
            {"witness", r.witness.to_string()},
            {"sets_examined", r.sets_examined},
            {"pruned_by_automorphism", r.pruned_by_automorphism}};
}

void cmd_rho(const RunConfig& cfg, const RhoArgs& a, std::ostream& out, std::ostream& err) {
    auto q = make_query(a.group, a.m, a.kind, a.H, a.filter, !a.no_prune);
    SearchLimits limits;
    limits.max_subsets = cfg.max_subsets;
    if (a.progress) {
        limits.progress = &err;
        limits.progress_interval = std::chrono::milliseconds(a.progress_ms);
    }
    auto r = a.serial ? rho(q, limits) : rho_parallel(q, cfg.workers, limits);
    json doc = rho_json(q, r);
    doc["command"] = "rho";
    std::ostringstream text;
    text << "value: " << r.value << "\nwitness: " << r.witness.to_string() << "\nsets_examined: " << r.sets_examined
         << "\npruned_by_automorphism: " << r.pruned_by_automorphism << "\n";
    std::string csv =
        csv_row({"group", "m", "kind", "H", "filter", "value", "witness", "sets_examined", "pruned_by_automorphism"}) +
        csv_row({q.group.to_string(), std::to_string(q.m), to_string(q.kind), q.H.to_string(), q.filter.to_string(),
                 std::to_string(r.value), r.witness.literal(), std::to_string(r.sets_examined),
                 std::to_string(r.pruned_by_automorphism)});
    emit(cfg, out, doc, text.str(), csv);
}

// ---------------------------------------------------------------------------
// verify / list-checks

struct VerifyArgs {
    std::string check = "all", grid;
    std::optional<std::size_t> count;
    std::size_t max_failures = 20;
};

json report_json(const CheckReport& r, bool timing) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"params", f.params}, {"witness", f.witness}, {"expected", f.expected}, {"actual", f.actual}});
    json doc = {{"id", r.id},
                {"anchor", r.anchor},
                {"mode", to_string(r.mode)},
                {"grid", r.grid},
                {"cells", r.cells},
                {"failure_count", r.failure_count},
                {"failures", failures},
                {"notes", r.notes},
                {"passed", r.passed()}};
    if (r.mode == CheckMode::Sampled) {
        doc["seed"] = r.seed;
        doc["count"] = r.count;
    }
    if (timing) doc["elapsed_ms"] = r.elapsed_ms;
    return doc;
}

int cmd_verify(const RunConfig& cfg, const VerifyArgs& a, std::ostream& out) {
    std::vector<std::string> ids;
    if (a.check == "all") {
        for (const auto& c : list_checks()) ids.push_back(c.id);
    } else {
        ids.push_back(a.check);
    }
    const Grid grid = Grid::parse(a.grid);
    std::vector<CheckReport> reports;
    for (const auto& id : ids) {
        CheckSpec spec;
        spec.id = id;
        spec.grid = grid;
        spec.seed = cfg.seed;
        spec.count = a.count;
        spec.workers = cfg.workers;
        spec.max_failures = a.max_failures;
        reports.push_back(run_check(spec));
    }
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.passed() ? 0 : 1;

    json doc;
    if (a.check == "all") {
        json list = json::array();
        for (const auto& r : reports) list.push_back(report_json(r, cfg.timing));
        doc = {{"command", "verify"}, {"reports", list}, {"checks", reports.size()}, {"failed", failed}};
    } else {
        doc = report_json(reports.front(), cfg.timing);
        doc["command"] = "verify";
    }

    std::ostringstream text;
    for (const auto& r : reports) {
        text << (r.passed() ? "PASS " : "FAIL ") << r.id << " cells=" << r.cells;
        if (!r.passed()) text << " failures=" << r.failure_count;
        if (r.mode == CheckMode::Sampled) text << " seed=" << r.seed << " count=" << r.count;
        if (cfg.timing) text << " elapsed_ms=" << static_cast<std::int64_t>(r.elapsed_ms);
        text << "\n";
        for (const auto& [k, v] : r.notes) text << "    " << k << ": " << v << "\n";
        for (const auto& f : r.failures)
            text << "    " << f.params << " witness=" << f.witness << " expected " << f.expected << ", got "
                 << f.actual << "\n";
    }
    text << reports.size() << " checks, " << failed << " failed\n";

    std::string csv = cfg.timing ? csv_row({"id", "mode", "cells", "failures", "passed", "elapsed_ms"})
                                 : csv_row({"id", "mode", "cells", "failures", "passed"});
    for (const auto& r : reports) {
        if (cfg.timing)
            csv += csv_row({r.id, to_string(r.mode), std::to_string(r.cells), std::to_string(r.failure_count),
                            r.passed() ? "true" : "false", std::to_string(static_cast<std::int64_t>(r.elapsed_ms))});
        else
            csv += csv_row({r.id, to_string(r.mode), std::to_string(r.cells), std::to_string(r.failure_count),
                            r.passed() ? "true" : "false"});
    }
    emit(cfg, out, doc, text.str(), csv);
    return failed ? 1 : 0;
}

void cmd_list_checks(const RunConfig& cfg, std::ostream& out) {
    json list = json::array();
    std::string text, csv = csv_row({"id", "mode", "default_grid", "anchor"});
    for (const auto& c : list_checks()) {
        list.push_back({{"id", c.id}, {"anchor", c.anchor}, {"default_grid", c.default_grid}, {"mode", to_string(c.mode)}});
        text += c.id + "  [" + to_string(c.mode) + "]  " + (c.default_grid.empty() ? "-" : c.default_grid) + "\n    " +
                c.anchor + "\n";
        csv += csv_row({c.id, to_string(c.mode), c.default_grid, c.anchor});
    }
    emit(cfg, out, {{"command", "list-checks"}, {"checks", list}}, text, csv);
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
    std::string recipe, group = "Z", set;
    std::optional<std::int64_t> d, m, s, h;
};

void cmd_construct(const RunConfig& cfg, const ConstructArgs& a, std::ostream& out) {
    auto g = GroupSpec::parse(a.group);
    json doc = {{"command", "construct"}, {"recipe", a.recipe}, {"group", g.to_string()}};
    std::ostringstream text;
    GroupSubset result(g);
    if (a.recipe == "symmetrize") {
        if (a.set.empty() || !a.h) throw UsageError("symmetrize needs --set and --h");
        auto A = GroupSubset::parse(g, a.set);
        auto res = symmetrize(A, static_cast<int>(*a.h));
        result = res.result;
        json steps = json::array();
        for (const auto& st : res.steps) {
            steps.push_back({{"removed", g.format(st.removed)}, {"added", g.format(st.added)}, {"after", st.after.to_string()}});
            text << "step: remove " << g.format(st.removed) << ", add " << g.format(st.added) << " -> "
                 << st.after.to_string() << "\n";
        }
        doc["input"] = A.to_string();
        doc["h"] = *a.h;
        doc["steps"] = steps;
    } else {
        ConstructionRecipe r{a.recipe, {}, g};
        json params = json::object();
        for (auto [key, v] : {std::pair{"d", a.d}, std::pair{"m", a.m}, std::pair{"s", a.s}}) {
            if (!v) continue;
            r.params[key] = *v;
            params[key] = *v;
        }
        result = build(r);
        doc["params"] = params;
    }
    doc["result"] = result.to_string();
    doc["size"] = result.size();
    doc["sdeg"] = sdeg(result);
    text << result.to_string() << "\nsize: " << result.size() << "\nsdeg: " << sdeg(result) << "\n";
    std::string csv = csv_row({"recipe", "group", "size", "sdeg", "result"}) +
                      csv_row({a.recipe, g.to_string(), std::to_string(result.size()), std::to_string(sdeg(result)),
                               result.literal()});
    emit(cfg, out, doc, text.str(), csv);
}

// ---------------------------------------------------------------------------
// coeff / bound

struct CoeffArgs {
    int h = 2;
    std::int64_t k = 1, l = 0;
    bool oracle = false;
    std::optional<std::int64_t> p;
};

void cmd_coeff(const RunConfig& cfg, const CoeffArgs& a, std::ostream& out) {
    ExactInteger v;
    switch (a.h) {
        case 2: v = coeff_h2(a.k, a.l); break;
        case 3: v = coeff_h3(a.k, a.l); break;
        case 4: v = coeff_h4(a.k, a.l); break;
        default: throw UsageError("--h must be 2, 3 or 4");
    }
    auto fact = factorization_string(factor_trial(v));
    json doc = {{"command", "coeff"}, {"h", a.h},         {"k", a.k},
                {"l", a.l},           {"value", v.get_str()}, {"factorization", fact}};
    std::string text = "value: " + v.get_str() + "\nfactorization: " + fact + "\n";
    std::string oracle_str, agree_str, mod_str;
    if (a.oracle) {
        auto o = symbolic_coefficient_oracle(a.h, a.k, a.l, cfg.degree_cap);
        oracle_str = o.get_str();
        agree_str = o == v ? "true" : "false";
        doc["oracle"] = oracle_str;
        doc["oracle_agrees"] = o == v;
        text += "oracle: " + oracle_str + (o == v ? " (agrees)\n" : " (DIFFERS)\n");
    }
    if (a.p) {
        if (*a.p < 2 || !is_prime(*a.p)) throw UsageError("--p must be a prime");
        bool nonzero = mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(*a.p)) == 0;
        mod_str = nonzero ? "true" : "false";
        doc["p"] = *a.p;
        doc["nonzero_mod_p"] = nonzero;
        text += "nonzero mod " + std::to_string(*a.p) + ": " + mod_str + "\n";
    }
    std::string csv = csv_row({"h", "k", "l", "value", "factorization", "oracle", "oracle_agrees", "nonzero_mod_p"}) +
                      csv_row({std::to_string(a.h), std::to_string(a.k), std::to_string(a.l), v.get_str(), fact,
                               oracle_str, agree_str, mod_str});
    emit(cfg, out, doc, text, csv);
}

struct BoundArgs {
    std::string name, cls;
    std::optional<std::int64_t> p, k, m, h, s, a, b;
    bool zero = false;
};

void cmd_bound(const RunConfig& cfg, const BoundArgs& a, std::ostream& out) {
    std::map<std::string, std::int64_t> params;
    for (auto [key, v] : {std::pair{"k", a.k}, std::pair{"m", a.m}, std::pair{"h", a.h}, std::pair{"s", a.s},
                          std::pair{"a", a.a}, std::pair{"b", a.b}})
        if (v) params[key] = *v;
    if (a.zero) params["zero"] = 1;
    if (a.p && *a.p < 0) throw UsageError("--p must be >= 0");
    ExtendedCount p = a.p ? ExtendedCount(static_cast<std::uint64_t>(*a.p)) : ExtendedCount::infinity();
    auto r = evaluate_bound(a.name, params, p, a.cls);

    json hyps = json::array();
    std::string text = "value: " + r.value.to_string() + (r.applicable ? "" : " (inapplicable)") +
                       "\nbranch: " + r.branch + "\n";
    for (const auto& hp : r.hypotheses) {
        hyps.push_back({{"label", hp.label}, {"met", hp.met}});
        text += std::string("  [") + (hp.met ? "x" : " ") + "] " + hp.label + "\n";
    }
    json doc = {{"command", "bound"},       {"name", a.name},        {"params", params},
                {"p", count_json(p)},        {"value", count_json(r.value)}, {"applicable", r.applicable},
                {"branch", r.branch},        {"hypotheses", hyps}};
    if (!a.cls.empty()) doc["class"] = a.cls;
    std::string plist;
    for (const auto& [k, v] : params) plist += (plist.empty() ? "" : " ") + k + "=" + std::to_string(v);
    std::string csv = csv_row({"name", "params", "p", "value", "applicable", "branch"}) +
                      csv_row({a.name, plist, p.to_string(), r.value.to_string(), r.applicable ? "true" : "false",
                               r.branch});
    emit(cfg, out, doc, text, csv);
}

// ---------------------------------------------------------------------------
// sweep

std::vector<std::string> string_list(const json& v, const char* key, const std::string& fallback) {
    if (!v.contains(key)) return {fallback};
    const auto& x = v.at(key);
    if (x.is_array()) return x.get<std::vector<std::string>>();
    return {x.get<std::string>()};
}

std::vector<std::size_t> m_list(const json& v) {
    if (!v.contains("m")) throw UsageError("sweep query needs \"m\"");
    const auto& x = v.at("m");
    if (x.is_number_integer()) return {x.get<std::size_t>()};
    if (x.is_array()) return x.get<std::vector<std::size_t>>();
    Grid g;
    g.set("m", x.get<std::string>());
    std::vector<std::size_t> out;
    for (auto m : g.ints("m")) out.push_back(static_cast<std::size_t>(m));
    return out;
}

void cmd_sweep(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open sweep config '" + path + "'");
    json conf;
    try {
        conf = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("sweep config: ") + e.what());
    }
    if (!conf.contains("queries") || !conf["queries"].is_array())
        throw UsageError("sweep config needs a \"queries\" array");

    SearchLimits limits;
    limits.max_subsets = cfg.max_subsets;
    json rows = json::array();
    std::string csv =
        csv_row({"group", "m", "kind", "H", "filter", "status", "value", "witness", "sets_examined",
                 "pruned_by_automorphism"});
    for (const auto& qv : conf["queries"]) {
        const bool prune = qv.value("prune", true);
        for (const auto& group : string_list(qv, "group", ""))
            for (auto m : m_list(qv))
                for (const auto& kind : string_list(qv, "kind", "signed"))
                    for (const auto& H : string_list(qv, "H", "1"))
                        for (const auto& filter : string_list(qv, "filter", "all")) {
                            auto q = make_query(group, m, kind, H, filter, prune);
                            if (m > q.group.order()) continue;
                            auto r = try_rho(q, cfg.workers, limits);
                            json row = {{"group", q.group.to_string()}, {"m", m},
                                        {"kind", to_string(q.kind)},   {"H", q.H.to_string()},
                                        {"filter", q.filter.to_string()}, {"status", r ? "ok" : "empty-class"}};
                            if (r) {
                                row["value"] = r->value;
                                row["witness"] = r->witness.to_string();
                                row["sets_examined"] = r->sets_examined;
                                row["pruned_by_automorphism"] = r->pruned_by_automorphism;
                            }
                            rows.push_back(row);
                            csv += csv_row({q.group.to_string(), std::to_string(m), to_string(q.kind),
                                            q.H.to_string(), q.filter.to_string(), r ? "ok" : "empty-class",
                                            r ? std::to_string(r->value) : "", r ? r->witness.literal() : "",
                                            r ? std::to_string(r->sets_examined) : "",
                                            r ? std::to_string(r->pruned_by_automorphism) : ""});
                        }
    }
    if (cfg.format == "json") {
        emit(cfg, out, {{"command", "sweep"}, {"rows", rows}}, "", "");
    } else {
        out << cfg.header() << csv;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    cfg.workers = default_workers();

    CLI::App app{"Signed and restricted signed sumsets: computation, extremal search and verification", "signedsum"};
    // Long-only help: subcommands take "--h" as a multiplicity option.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--workers", cfg.workers, "Worker threads (default: $SIGNEDSUM_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for sampled checks");
    app.add_option("--max-subsets", cfg.max_subsets, "Search envelope: largest C(|G|, m) accepted");
    app.add_option("--degree-cap", cfg.degree_cap, "Total degree cap of the symbolic oracle");
    app.add_flag("--timing", cfg.timing, "Include elapsed times in reports");

    SumsetArgs sa;
    auto* sumset_cmd = app.add_subcommand("sumset", "Compute an H-fold sumset");
    sumset_cmd->add_option("-g,--group", sa.group, "Group: Z, Z<n>, Z<n>xZ<m>..., F<p>^<r>")->required();
    sumset_cmd->add_option("-A,--set", sa.set, "Set literal, e.g. 1,2,3 or (0,1),(1,1)")->required();
    sumset_cmd->add_option("-k,--kind", sa.kind, "plain | restricted | signed | restricted-signed");
    sumset_cmd->add_option("-H,--mult", sa.H, "Multiplicity set, e.g. 2, 0..3, 1,3");

    RhoArgs ra;
    auto* rho_cmd = app.add_subcommand("rho", "Exhaustive minimum sumset size over m-subsets");
    rho_cmd->add_option("-g,--group", ra.group, "Finite group")->required();
    rho_cmd->add_option("-m", ra.m, "Subset size")->required();
    rho_cmd->add_option("-k,--kind", ra.kind, "Sumset kind");
    rho_cmd->add_option("-H,--mult", ra.H, "Multiplicity set");
    rho_cmd->add_option("--filter", ra.filter, "all | sym | asym | nsym | A | sdeg=<s> | contains-zero [+zero|+nozero]");
    rho_cmd->add_flag("--no-prune", ra.no_prune, "Disable automorphism pruning");
    rho_cmd->add_flag("--serial", ra.serial, "Use the serial reference search");
    rho_cmd->add_flag("--progress", ra.progress, "Report progress on stderr");
    rho_cmd->add_option("--progress-interval", ra.progress_ms, "Progress interval in ms");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run catalog checks");
    verify_cmd->add_option("--check", va.check, "Check id or 'all'");
    verify_cmd->add_option("--grid", va.grid, "Grid overrides, e.g. 'n=2..6;h=0..2'");
    verify_cmd->add_option("--count", va.count, "Samples per cell for sampled checks");
    verify_cmd->add_option("--max-failures", va.max_failures, "Failures kept per report");

    app.add_subcommand("list-checks", "List registered checks");

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "Build an explicit extremal set");
    construct_cmd->set_help_flag("--help", "Print this help message and exit");
    construct_cmd->add_option("--recipe", ca.recipe, "odd_spaced_ap | interval_set | rho_s_witness | subgroup_interval | symmetrize")
        ->required();
    construct_cmd->add_option("-g,--group", ca.group, "Target group (default Z)");
    construct_cmd->add_option("--d", ca.d, "Common difference");
    construct_cmd->add_option("--m", ca.m, "Set size");
    construct_cmd->add_option("--s", ca.s, "Target |A ∩ (−A)|");
    construct_cmd->add_option("-A,--set", ca.set, "Input set (symmetrize)");
    construct_cmd->add_option("--h", ca.h, "Multiplicity (symmetrize)");

    CoeffArgs co;
    auto* coeff_cmd = app.add_subcommand("coeff", "Polynomial-method coefficient in closed form");
    coeff_cmd->set_help_flag("--help", "Print this help message and exit");
    coeff_cmd->add_option("--h", co.h, "2, 3 or 4")->required();
    coeff_cmd->add_option("--k", co.k, "Set size k")->required();
    coeff_cmd->add_option("--l", co.l, "Shift l (default 0)");
    coeff_cmd->add_flag("--oracle", co.oracle, "Cross-check by symbolic expansion");
    coeff_cmd->add_option("--p", co.p, "Report whether the coefficient is nonzero mod p");

    BoundArgs ba;
    auto* bound_cmd = app.add_subcommand("bound", "Evaluate a closed-form lower bound");
    bound_cmd->set_help_flag("--help", "Print this help message and exit");
    bound_cmd->add_option("--name", ba.name, "Bound name (see README)")->required();
    bound_cmd->add_option("--p", ba.p, "p(G); omit for infinity");
    bound_cmd->add_option("--k", ba.k);
    bound_cmd->add_option("--m", ba.m);
    bound_cmd->add_option("--h", ba.h);
    bound_cmd->add_option("--s", ba.s);
    bound_cmd->add_option("--a", ba.a, "|A| (devos)");
    bound_cmd->add_option("--b", ba.b, "|B| (devos)");
    bound_cmd->add_flag("--zero", ba.zero, "0 ∈ A (restricted-interval)");
    bound_cmd->add_option("--class", ba.cls, "asym | sym | nsym (restricted-class)");

    std::string sweep_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a JSON list of rho queries, output CSV");
    sweep_cmd->add_option("config", sweep_path, "Sweep config file")->required();

    std::vector<std::string> argv_store{"signedsum"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sumset_cmd) cmd_sumset(cfg, sa, out);
        else if (*rho_cmd) cmd_rho(cfg, ra, out, err);
        else if (*verify_cmd) return cmd_verify(cfg, va, out);
        else if (app.got_subcommand("list-checks")) cmd_list_checks(cfg, out);
        else if (*construct_cmd) cmd_construct(cfg, ca, out);
        else if (*coeff_cmd) cmd_coeff(cfg, co, out);
        else if (*bound_cmd) cmd_bound(cfg, ba, out);
        else if (*sweep_cmd) cmd_sweep(cfg, sweep_path, out);
    } catch (const EnvelopeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace signedsum::cli
