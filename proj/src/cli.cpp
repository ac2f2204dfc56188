#include "hamilton/cli.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamilton/error.hpp"
#include "hamilton/generators.hpp"
#include "hamilton/graph.hpp"
#include "hamilton/graph_io.hpp"
#include "hamilton/mixing.hpp"
#include "hamilton/rotation.hpp"
#include "hamilton/spectral.hpp"

namespace hamilton {

namespace {

using nlohmann::json;

struct UsageFailure {
    std::string message;
};

OperatorKind parse_operator(const std::string& name) {
    if (name == "adjacency") return OperatorKind::adjacency;
    if (name == "laplacian") return OperatorKind::laplacian;
    if (name == "normalized") return OperatorKind::normalized;
    throw UsageFailure{"unknown operator '" + name + "'"};
}

json degrees_json(const Graph& g) {
    const DegreeSummary ds = degree_summary(g);
    return json{{"max", ds.max_degree}, {"min", ds.min_degree}, {"average", ds.average_degree}};
}

json predicate_json(const PredicateReport& p) {
    json r{{"checked", p.checked}, {"violated", p.violated}};
    if (p.witness) {
        r["witness_x"] = p.witness->first;
        r["witness_y"] = p.witness->second;
    }
    return r;
}

VertexSet random_subset(int n, std::mt19937_64& rng) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
        if (rng() & 1ULL) members.push_back(v);
    return VertexSet(std::move(members));
}

json run_gen(const CLI::App& cmd, const std::string& family, int n, double p, int d, int beta,
             std::uint64_t seed, const std::string& out_path) {
    Graph g;
    json result{{"family", family}, {"output", out_path}};
    bool used_seed = false;
    const bool named = family == "complete" || family == "cycle" || family == "path" ||
                       family == "star" || family == "petersen";
    if (named) {
        if (family != "petersen" && cmd.count("--n") == 0)
            throw UsageFailure{"--n is required for family '" + family + "'"};
        g = generate_named(parse_family(family), family == "petersen" ? 10 : n);
    } else if (family == "remark") {
        if (cmd.count("--n") == 0 || cmd.count("--beta") == 0)
            throw UsageFailure{"remark family needs --n and --beta"};
        g = remark_family(n, beta);
        result["beta"] = beta;
    } else if (family == "erdos-renyi") {
        if (cmd.count("--n") == 0 || cmd.count("--p") == 0)
            throw UsageFailure{"erdos-renyi needs --n and --p"};
        g = erdos_renyi(n, p, seed);
        result["p"] = p;
        used_seed = true;
    } else if (family == "random-regular") {
        if (cmd.count("--n") == 0 || cmd.count("--d") == 0)
            throw UsageFailure{"random-regular needs --n and --d"};
        g = random_regular(n, d, seed);
        result["d"] = d;
        used_seed = true;
    } else {
        throw UsageFailure{"unknown family '" + family + "'"};
    }
    save_graph_file(g, out_path);
    json report{{"command", "gen"}, {"n", g.n}, {"m", g.m}, {"result", result}};
    if (used_seed) report["seed"] = seed;
    return report;
}

json run_spectrum(const Graph& g, const std::string& op_name) {
    const OperatorKind kind = parse_operator(op_name);
    const Spectrum spec = graph_spectrum(g, kind);
    double sum = 0.0;
    for (double v : spec.eigenvalues) sum += v;
    json result{{"operator", op_name},
                {"eigenvalues", spec.eigenvalues},
                {"sum", sum},
                {"degrees", degrees_json(g)}};
    if (g.n >= 2 && kind == OperatorKind::normalized) result["gap"] = spectral_gap(spec);
    if (g.n >= 2 && kind == OperatorKind::adjacency) result["sigma"] = sigma_adjacency(spec);
    return json{{"command", "spectrum"}, {"n", g.n}, {"m", g.m}, {"result", result}};
}

json run_check(const Graph& g, const std::string& condition, double c) {
    ConditionVerdict v;
    if (condition == "fan-yu")
        v = check_fan_yu(g, c);
    else if (condition == "butler-chung")
        v = check_butler_chung(g, c);
    else if (condition == "krivelevich-sudakov")
        v = check_krivelevich_sudakov(g, c);
    else
        throw UsageFailure{"unknown condition '" + condition + "'"};
    json result{{"condition", condition_name(v.condition)},
                {"c", c},
                {"applicable", v.applicable},
                {"measured", v.measured},
                {"threshold", v.threshold},
                {"passes", v.passes},
                {"degrees", degrees_json(g)}};
    if (v.ratio_ok) result["ratio_ok"] = *v.ratio_ok;
    return json{{"command", "check"}, {"n", g.n}, {"m", g.m}, {"result", result}};
}

json run_mixing(const Graph& g, std::int64_t samples, std::uint64_t seed) {
    if (g.m == 0) throw Error("EmptyGraph", "mixing needs at least one edge");
    const double lam = spectral_gap(graph_spectrum(g, OperatorKind::normalized));
    const DegreeSummary ds = degree_summary(g);
    std::mt19937_64 rng(seed);

    std::int64_t thm_violations = 0;
    std::int64_t cor22_violations = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const VertexSet x = random_subset(g.n, rng);
        const VertexSet y = random_subset(g.n, rng);
        if (!mixing_check(g, x, y, lam).holds) thm_violations++;
        const auto b = cor22_bounds(g.n, ds.average_degree, ds.max_degree, ds.min_degree, lam,
                                    x.size(), y.size());
        const auto e = static_cast<double>(edge_count_between(g, x, y));
        if (e < b.lower - 1e-9 || e > b.upper + 1e-9) cor22_violations++;
    }

    std::int64_t cor23_violations = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const VertexSet x = random_subset(g.n, rng);
        const auto b =
            cor23_bounds(g.n, ds.average_degree, ds.max_degree, ds.min_degree, lam, x.size());
        const auto e = static_cast<double>(edge_count_between(g, x, x)) / 2.0;
        if (e < b.lower - 1e-9 || e > b.upper + 1e-9) cor23_violations++;
    }

    const DegreeBoundsReport db = degree_bounds_check(g, lam);
    const AuditReport audit = cor24_audit(g, samples, seed);

    json result{
        {"gap", lam},
        {"samples", samples},
        {"theorem_2_1", {{"checked", samples}, {"violated", thm_violations}}},
        {"cor22", {{"checked", samples}, {"violated", cor22_violations}}},
        {"cor23", {{"checked", samples}, {"violated", cor23_violations}}},
        {"degree_bounds",
         {{"lower", db.lower}, {"upper", db.upper}, {"violations", db.violations}}},
        {"cor24",
         {{"hypotheses_met", audit.hypotheses_met},
          {"exhaustive", audit.exhaustive},
          {"small_set_edges", predicate_json(audit.small_set_edges)},
          {"expansion", predicate_json(audit.expansion)},
          {"large_set_expansion", predicate_json(audit.large_set_expansion)},
          {"non_adjacent_pairs", predicate_json(audit.non_adjacent_pairs)},
          {"connectivity", predicate_json(audit.connectivity)}}}};
    return json{
        {"command", "mixing"}, {"n", g.n}, {"m", g.m}, {"seed", seed}, {"result", result}};
}

json run_hamilton(const Graph& g, const std::string& method, std::uint64_t seed,
                  std::int64_t budget) {
    json result{{"method", method}};
    json report{{"command", "hamilton"}, {"n", g.n}, {"m", g.m}};
    if (method == "posa") {
        const auto cert = posa_find_hamiltonian(g, seed, budget);
        result["found"] = cert.has_value();
        if (cert) {
            result["hamiltonian"] = true;
            result["cycle"] = cert->order;
        }
        report["seed"] = seed;
    } else if (method == "held-karp") {
        const auto cert = held_karp(g);
        result["hamiltonian"] = cert.has_value();
        if (cert) result["cycle"] = cert->order;
    } else {
        throw UsageFailure{"unknown method '" + method + "'"};
    }
    report["result"] = result;
    return report;
}

json run_constants(std::int64_t n) {
    const ProofConstants pc = proof_constants(n);
    return json{{"command", "constants"},
                {"n", n},
                {"result",
                 {{"lam", pc.lam},
                  {"t0", pc.t0},
                  {"rho", pc.rho},
                  {"k", pc.k},
                  {"alpha", pc.alpha},
                  {"alpha_inverse", pc.alpha_inverse},
                  {"t0_floored", pc.t0_floored}}}};
}

} // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"normalized-Laplacian spectra, mixing bounds and Hamiltonicity search"};
    app.require_subcommand(1);

    std::string family;
    std::string op_name;
    std::string condition;
    std::string method;
    std::string in_path;
    std::string out_path;
    int n = 0;
    double p = 0.5;
    int d = 0;
    int beta = 0;
    double c = 0.0;
    std::int64_t samples = 10000;
    std::int64_t budget = 0;
    std::int64_t constants_n = 0;
    std::uint64_t seed = 0;

    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->add_option("--family", family,
                    "complete|cycle|path|star|petersen|remark|erdos-renyi|random-regular")
        ->required();
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--p", p, "edge probability (erdos-renyi)");
    gen->add_option("--d", d, "degree (random-regular)");
    gen->add_option("--beta", beta, "attachment count (remark)");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("-o,--output", out_path, "output graph file")->required();

    auto* spectrum = app.add_subcommand("spectrum", "full spectrum of a graph operator");
    spectrum->add_option("--operator", op_name, "normalized|laplacian|adjacency")->required();
    spectrum->add_option("-i,--input", in_path, "input graph file")->required();

    auto* check = app.add_subcommand("check", "evaluate a spectral Hamiltonicity condition");
    check->add_option("--condition", condition, "fan-yu|butler-chung|krivelevich-sudakov")
        ->required();
    check->add_option("--c", c, "condition constant")->required();
    check->add_option("-i,--input", in_path, "input graph file")->required();

    auto* mixing = app.add_subcommand("mixing", "mixing-lemma and small-gap audits");
    mixing->add_option("--samples", samples, "samples per predicate");
    mixing->add_option("--seed", seed, "PRNG seed");
    mixing->add_option("-i,--input", in_path, "input graph file")->required();

    auto* hamilton = app.add_subcommand("hamilton", "search for a Hamiltonian cycle");
    hamilton->add_option("--method", method, "posa|held-karp")->required();
    hamilton->add_option("--seed", seed, "PRNG seed");
    hamilton->add_option("--budget", budget, "rotation state budget (0 = default)");
    hamilton->add_option("-i,--input", in_path, "input graph file")->required();

    auto* constants = app.add_subcommand("constants", "rotation-argument constants for a given n");
    constants->add_option("--n", constants_n, "vertex count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        json report;
        if (gen->parsed()) {
            report = run_gen(*gen, family, n, p, d, beta, seed, out_path);
        } else if (spectrum->parsed()) {
            report = run_spectrum(load_graph_file(in_path), op_name);
        } else if (check->parsed()) {
            report = run_check(load_graph_file(in_path), condition, c);
        } else if (mixing->parsed()) {
            report = run_mixing(load_graph_file(in_path), samples, seed);
        } else if (hamilton->parsed()) {
            report = run_hamilton(load_graph_file(in_path), method, seed, budget);
        } else if (constants->parsed()) {
            report = run_constants(constants_n);
        }
        out << report.dump() << "\n";
        return 0;
    } catch (const UsageFailure& u) {
        err << "error: " << u.message << "\n";
        return 2;
    } catch (const Error& e) {
        out << json{{"error", e.code()}, {"detail", e.what()}}.dump() << "\n";
        return 1;
    }
}

} // namespace hamilton
