#include "cli.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "crossvar/arrangement.hpp"
#include "crossvar/errors.hpp"
#include "crossvar/generators.hpp"
#include "crossvar/report.hpp"
#include "crossvar/selftest.hpp"
#include "crossvar/variance.hpp"

namespace crossvar::cli {

namespace {

struct Globals {
    bool json = false;
    std::uint64_t seed = 1;
};

struct Loaded {
    Graph graph;
    json input;
    std::vector<std::string> warnings;
};

Loaded load_input(const std::string& path) {
    auto r = load_graph_file(path);
    Loaded l;
    l.input = {{"file", path},
               {"fnv1a", file_fingerprint(path)},
               {"n", r.graph.num_vertices()},
               {"m", r.graph.num_edges()}};
    l.graph = std::move(r.graph);
    l.warnings = std::move(r.warnings);
    return l;
}

ExpectationTable resolve_layout(const std::string& layout) {
    if (layout == "rla") return builtin_rla_table();
    return load_layout_table_file(layout);
}

void emit(std::ostream& out, const Globals& g, const json& report, const std::vector<std::string>& text) {
    if (g.json) {
        out << report.dump(2) << '\n';
    } else {
        for (const auto& line : text) out << line << '\n';
    }
}

json command_echo(const std::string& name, const json& args) { return {{"name", name}, {"args", args}}; }

void warn(std::ostream& err, const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
}

int cmd_stats(const std::string& file, const Globals& gl, std::ostream& out, std::ostream& err) {
    auto in = load_input(file);
    warn(err, in.warnings);
    const auto census = fast_census(in.graph);
    const Rational expectation(census.q, Integer(3));
    const json census_fields = census_json(census);
    json report = {{"command", command_echo("stats", {{"file", file}})},
                   {"input", in.input},
                   {"results", {{"census", census_fields}, {"expectation_rla", expectation.str()}}}};
    std::vector<std::string> text{"n " + std::to_string(in.graph.num_vertices()),
                                  "m " + std::to_string(in.graph.num_edges())};
    for (const auto& [k, v] : census_fields.items()) text.push_back(k + " " + (v.is_string() ? v.get<std::string>() : v.dump()));
    text.push_back("E_rla[C] " + expectation.str());
    emit(out, gl, report, text);
    return ok;
}

int cmd_variance(const std::string& file, const std::string& layout, const std::string& algorithm, const Globals& gl,
                 std::ostream& out, std::ostream& err) {
    const auto alg = algorithm_from_name(algorithm);
    if (!alg) throw CLI::ValidationError("--algorithm", "unknown algorithm '" + algorithm + "'");
    auto in = load_input(file);
    warn(err, in.warnings);
    const auto table = resolve_layout(layout);
    const auto r = compute_variance(in.graph, table, *alg);
    json report = {{"command", command_echo("variance", {{"file", file}, {"layout", layout}, {"algorithm", algorithm}})},
                   {"input", in.input},
                   {"results", variance_json(r)}};
    std::vector<std::string> text{"algorithm " + std::string(algorithm_name(r.algorithm)),
                                  "expectation " + r.expectation.str(), "variance " + r.variance.str(),
                                  "variance_decimal " + r.variance.decimal(12)};
    if (r.hash_table_size) text.push_back("hash_table_size " + std::to_string(*r.hash_table_size));
    emit(out, gl, report, text);
    return ok;
}

int cmd_zscore(const std::string& file, const std::optional<std::uint64_t>& observed, const std::string& arrangement,
               const std::string& layout, const Globals& gl, std::ostream& out, std::ostream& err) {
    auto in = load_input(file);
    warn(err, in.warnings);
    std::uint64_t c = 0;
    if (observed) {
        c = *observed;
    } else {
        const auto a = load_arrangement_file(arrangement);
        if (a.size() != in.graph.num_vertices())
            throw validation_error("arrangement covers " + std::to_string(a.size()) + " vertices, the graph has " +
                                   std::to_string(in.graph.num_vertices()));
        c = count_crossings(in.graph, a);
    }
    const auto table = resolve_layout(layout);
    const auto v = compute_variance(in.graph, table);
    const double z = zscore(c, v);
    const auto two = chebyshev_pvalue_bound(c, v, Tail::two_sided);
    const auto upper = chebyshev_pvalue_bound(c, v, Tail::upper);
    const auto lower = chebyshev_pvalue_bound(c, v, Tail::lower);
    json report = {
        {"command", command_echo("zscore", {{"file", file}, {"layout", layout}})},
        {"input", in.input},
        {"results",
         {{"observed", c},
          {"expectation", v.expectation.str()},
          {"variance", v.variance.str()},
          {"variance_decimal", v.variance.decimal(12)},
          {"z", z},
          {"bounds", {{"two_sided", two.str()}, {"upper", upper.str()}, {"lower", lower.str()}}}}}};
    std::ostringstream zs;
    zs << std::setprecision(12) << z;
    emit(out, gl, report,
         {"observed " + std::to_string(c), "expectation " + v.expectation.str(), "variance " + v.variance.str(),
          "z " + zs.str(), "chebyshev_two_sided " + two.str(), "cantelli_upper " + upper.str(),
          "cantelli_lower " + lower.str()});
    return ok;
}

int cmd_selftest(std::size_t max_n, bool inject_fault, const Globals& gl, std::ostream& out) {
    SelftestOptions o;
    o.corpus.seed = gl.seed;
    o.corpus.er_max_n = std::min<std::size_t>(o.corpus.er_max_n, max_n);
    o.corpus.family_max_n = std::min(o.corpus.family_max_n, max_n);
    o.corpus.complete_max_n = std::min(o.corpus.complete_max_n, max_n);
    o.corpus.tree_max_n = std::min(o.corpus.tree_max_n, max_n);
    if (inject_fault) o.fault = Fault::reuse_variance;
    const auto r = run_selftest(o);

    json comps = json::array();
    std::vector<std::string> text;
    for (const auto& c : r.comparisons) {
        comps.push_back({{"graph", c.graph}, {"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
        if (!c.passed) text.push_back("FAIL " + c.graph + ": " + c.check + " (" + c.detail + ")");
    }
    text.push_back(std::to_string(r.graphs) + " graphs, " + std::to_string(r.comparisons.size()) + " comparisons, " +
                   std::to_string(r.failures()) + " failed");
    json report = {{"command", command_echo("selftest", {{"max_n", max_n}, {"seed", gl.seed}})},
                   {"results", {{"graphs", r.graphs}, {"failures", r.failures()}, {"comparisons", comps}}}};
    emit(out, gl, report, text);
    return r.passed() ? ok : selftest_failed;
}

std::vector<double> split_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw CLI::ValidationError("list", "'" + item + "' is not a number");
        out.push_back(v);
    }
    return out;
}

std::int64_t time_ns(const std::function<void()>& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

int cmd_bench(const std::string& model, const std::string& n_list, const std::string& p_list, std::size_t reps,
              std::size_t graphs, const Globals& gl, std::ostream& out) {
    if (model != "er") throw CLI::ValidationError("--model", "only 'er' is supported");
    const auto ns = split_list(n_list);
    const auto ps = split_list(p_list);

    json cells = json::array();
    std::vector<std::string> text{"n p mean_m general_ns reuse_ns ratio"};
    for (double nd : ns) {
        for (double p : ps) {
            const auto c = bench_cell(static_cast<std::size_t>(nd), p, graphs, reps, gl.seed);
            cells.push_back({{"n", c.n},
                             {"p", c.p},
                             {"mean_m", c.mean_m},
                             {"timing_ns", {{"general", c.general_ns}, {"reuse", c.reuse_ns}}},
                             {"ratio", c.ratio}});
            std::ostringstream line;
            line << c.n << ' ' << c.p << ' ' << c.mean_m << ' ' << std::fixed << std::setprecision(0) << c.general_ns
                 << ' ' << c.reuse_ns << ' ' << std::setprecision(3) << c.ratio;
            text.push_back(line.str());
        }
    }
    json report = {{"command", command_echo("bench", {{"model", model},
                                                      {"n_list", n_list},
                                                      {"p_list", p_list},
                                                      {"reps", reps},
                                                      {"graphs", graphs},
                                                      {"seed", gl.seed}})},
                   {"results", cells}};
    emit(out, gl, report, text);
    return ok;
}

} // namespace

BenchCell bench_cell(std::size_t n, double p, std::size_t graphs, std::size_t reps, std::uint64_t seed) {
    const auto& rla = builtin_rla_table();
    std::mt19937_64 seeds(seed);
    double general_total = 0, reuse_total = 0, m_total = 0;
    for (std::size_t gi = 0; gi < graphs; ++gi) {
        const Graph g = generators::erdos_renyi(n, p, seeds());
        m_total += static_cast<double>(g.num_edges());
        for (std::size_t r = 0; r < reps; ++r) {
            VarianceResult a, b;
            general_total += static_cast<double>(time_ns([&] { a = variance_general(g, rla); }));
            reuse_total += static_cast<double>(time_ns([&] { b = variance_general_reuse(g, rla); }));
            if (a.variance != b.variance) throw internal_inconsistency("general and reuse disagree on a benchmark graph");
        }
    }
    BenchCell c;
    c.n = n;
    c.p = p;
    const double runs = static_cast<double>(graphs * reps);
    c.mean_m = m_total / static_cast<double>(graphs);
    c.general_ns = general_total / runs;
    c.reuse_ns = reuse_total / runs;
    c.ratio = c.reuse_ns > 0 ? c.general_ns / c.reuse_ns : 1.0;
    return c;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact mean and variance of edge crossings under random vertex layouts"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_flag("--json", gl.json, "Emit a JSON report");
    app.add_option("--seed", gl.seed, "Seed for generated graphs");

    std::string file, layout = "rla", algorithm = "auto", arrangement;
    std::optional<std::uint64_t> observed;
    std::size_t max_n = 12, reps = 10, graphs = 10;
    bool inject_fault = false;
    std::string model = "er", n_list = "10,50,100", p_list = "0.01,0.1,0.5";

    auto* stats = app.add_subcommand("stats", "Census, q and E_rla[C] of an edge list");
    stats->add_option("file", file, "Edge-list file")->required();

    auto* variance = app.add_subcommand("variance", "Exact Var[C] and E[C]");
    variance->add_option("file", file, "Edge-list file")->required();
    variance->add_option("--layout", layout, "'rla' or a layout table file");
    variance->add_option("--algorithm", algorithm, "auto, naive, subgraph, general, reuse, forest or closed");

    auto* z = app.add_subcommand("zscore", "z-score and tail bounds of an observed crossing count");
    z->add_option("file", file, "Edge-list file")->required();
    auto* obs = z->add_option("--observed", observed, "Observed number of crossings");
    auto* arr = z->add_option("--arrangement", arrangement, "File with the vertices in left-to-right order");
    obs->excludes(arr);
    z->add_option("--layout", layout, "'rla' or a layout table file");

    auto* self = app.add_subcommand("selftest", "Cross-check every computation route on the test corpus");
    self->add_option("--max-n", max_n, "Largest generated family size");
    self->add_flag("--inject-fault", inject_fault)->group("");

    auto* bench = app.add_subcommand("bench", "Time the general algorithm with and without pair reuse");
    bench->add_option("--model", model, "Random graph model");
    bench->add_option("--n-list", n_list, "Comma-separated vertex counts");
    bench->add_option("--p-list", p_list, "Comma-separated edge probabilities");
    bench->add_option("--reps", reps, "Repetitions per graph")->check(CLI::PositiveNumber);
    bench->add_option("--graphs", graphs, "Graphs per cell")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (*z && !observed && arrangement.empty())
            throw CLI::ValidationError("zscore", "one of --observed or --arrangement is required");
        if (*stats) return cmd_stats(file, gl, out, err);
        if (*variance) return cmd_variance(file, layout, algorithm, gl, out, err);
        if (*z) return cmd_zscore(file, observed, arrangement, layout, gl, out, err);
        if (*self) return cmd_selftest(max_n, inject_fault, gl, out);
        if (*bench) return cmd_bench(model, n_list, p_list, reps, graphs, gl, out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const io_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const unsupported_algorithm& e) {
        err << "error: " << e.what() << '\n';
        return algorithm_mismatch;
    } catch (const oracle_limit_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return algorithm_mismatch;
    } catch (const degenerate_statistic& e) {
        err << "error: " << e.what() << '\n';
        return degenerate;
    }
    return input_error;
}

} // namespace crossvar::cli
