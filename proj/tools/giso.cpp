// giso — graph isomorphism toolkit CLI.
//
// Subcommands: gen, extend, solve, bench, convert. Exit codes: 0 success
// (for solve: isomorphic), 1 non-isomorphic, 2 bad input or IO failure,
// 3 search budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "giso/bench.hpp"
#include "giso/generators.hpp"
#include "giso/graph_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNonIso = 1;
constexpr int kExitError = 2;
constexpr int kExitExhausted = 3;

struct GlobalOpts {
    std::string format;  // empty = auto-detect on input, graph6 on output
    std::uint64_t seed = 0;
    bool json = false;
};

std::optional<giso::GraphFormat> explicit_format(const GlobalOpts& g) {
    if (g.format.empty()) return std::nullopt;
    return giso::format_from_name(g.format);
}

// Inputs are file paths, "-" for stdin, or "fam:<spec>" for a generated
// family instance.
giso::Graph load_input(const std::string& arg, const GlobalOpts& g) {
    if (arg.rfind("fam:", 0) == 0) return giso::generate(arg.substr(4));
    return giso::load_graph_file(arg, explicit_format(g)).graph;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw giso::Error("cannot open '" + path + "' for writing");
    out << content;
}

std::string matrix_csv(const giso::PathCountMatrix& m) {
    std::ostringstream out;
    const int n = static_cast<int>(m.order());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ',';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

json matrix_json(const giso::PathCountMatrix& m) {
    json rows = json::array();
    const int n = static_cast<int>(m.order());
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"level", m.level()}, {"matrix", std::move(rows)}};
}

json stats_json(const giso::SolveStats& s) {
    return json{{"levels", s.levels},
                {"f_density", s.f_density},
                {"unique_candidate_fraction", s.unique_candidate_fraction},
                {"nodes", s.nodes},
                {"extension_ms", s.extension_ms},
                {"search_ms", s.search_ms}};
}

int cmd_gen(const std::string& family, const std::string& out_path, const GlobalOpts& g) {
    const giso::Graph graph = giso::generate(family);
    const giso::GraphFormat fmt =
        g.format.empty() ? giso::GraphFormat::Graph6 : giso::format_from_name(g.format);
    write_output(out_path, giso::write_graph(graph, fmt));
    return kExitOk;
}

int cmd_extend(const std::string& input, int alpha, bool all_levels,
               const std::string& out_path, const GlobalOpts& g) {
    const giso::Graph graph = load_input(input, g);
    const auto levels = giso::extend_sequence(graph, alpha);
    if (g.json) {
        json doc{{"order", graph.order()}, {"levels", json::array()}};
        if (all_levels)
            for (const auto& m : levels) doc["levels"].push_back(matrix_json(m));
        else
            doc["levels"].push_back(matrix_json(levels.back()));
        write_output(out_path, doc.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream out;
    if (all_levels) {
        for (const auto& m : levels) {
            out << "# level " << m.level() << '\n';
            out << matrix_csv(m);
        }
    } else {
        out << matrix_csv(levels.back());
    }
    write_output(out_path, out.str());
    return kExitOk;
}

int cmd_solve(const std::string& input_a, const std::string& input_b,
              const giso::SolveConfig& cfg, const GlobalOpts& g) {
    const giso::Graph a = load_input(input_a, g);
    const giso::Graph b = load_input(input_b, g);
    const giso::SolveVerdict v = giso::solve(a, b, cfg);
    if (g.json) {
        json doc{{"verdict", giso::to_string(v.verdict)}, {"stats", stats_json(v.stats)}};
        if (v.mapping) doc["mapping"] = v.mapping->map();
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << giso::to_string(v.verdict) << '\n';
        if (v.mapping)
            for (std::size_t i = 0; i < v.mapping->size(); ++i)
                std::cout << i << " -> " << (*v.mapping)(static_cast<int>(i)) << '\n';
        if (v.verdict == giso::Verdict::Exhausted)
            std::cerr << "node budget exhausted after " << v.stats.nodes << " nodes\n";
    }
    switch (v.verdict) {
        case giso::Verdict::Isomorphic: return kExitOk;
        case giso::Verdict::NonIsomorphic: return kExitNonIso;
        case giso::Verdict::Exhausted: return kExitExhausted;
    }
    return kExitError;
}

int cmd_bench(const giso::BenchOptions& opt, const std::string& out_path) {
    const auto records = giso::run_bench(opt);
    std::ostringstream out;
    giso::write_bench_csv(out, records);
    write_output(out_path, out.str());
    return kExitOk;
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& out_path,
                const GlobalOpts& g) {
    const giso::Graph graph = load_input(input, g);
    write_output(out_path, giso::write_graph(graph, giso::format_from_name(to)));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"giso — graph extension, forbidden-assignment pruning and isomorphism search"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "graph file format: graph6|dimacs|edgelist");
    app.add_option("--seed", g.seed, "global seed for generated families");
    app.add_flag("--json", g.json, "emit JSON instead of text output");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family instance");
    gen->fallthrough();
    std::string gen_family, gen_out = "-";
    gen->add_option("--family", gen_family, "family spec, e.g. 'cycle(8)' or 'random(50,0.5,7)'")
        ->required();
    gen->add_option("--out,-o", gen_out, "output path ('-' = stdout)");

    // extend
    auto* ext = app.add_subcommand("extend", "compute walk-count matrix levels");
    ext->fallthrough();
    std::string ext_in, ext_out = "-";
    int ext_alpha = 1;
    bool ext_all = false;
    ext->add_option("input", ext_in, "graph file, '-' or 'fam:<spec>'")->required();
    ext->add_option("--alpha", ext_alpha, "highest level to compute (>= 1)")->required();
    ext->add_flag("--all-levels", ext_all, "emit every level 1..alpha, not just the last");
    ext->add_option("--out,-o", ext_out, "output path ('-' = stdout)");

    // solve
    auto* slv = app.add_subcommand("solve", "decide isomorphism of two graphs");
    slv->fallthrough();
    std::string slv_a, slv_b;
    giso::SolveConfig cfg;
    bool no_forbidden = false, row_set = false;
    slv->add_option("a", slv_a, "first graph")->required();
    slv->add_option("b", slv_b, "second graph")->required();
    slv->add_option("--alpha-max", cfg.alpha_max, "extension level cap (0 = graph order)");
    slv->add_option("--stall", cfg.stall, "quiet levels tolerated before stopping");
    slv->add_option("--budget", cfg.node_budget, "backtracking node budget");
    slv->add_flag("--no-forbidden", no_forbidden, "naive baseline: skip the F prefilter");
    slv->add_flag("--row-set", row_set, "weaker set reading of row signatures");

    // bench
    auto* ben = app.add_subcommand("bench", "run the benchmark harness, emit CSV");
    ben->fallthrough();
    giso::BenchOptions bopt;
    std::vector<std::string> pair_specs;
    std::string ben_out = "-";
    ben->add_option("--families", bopt.families,
                    "family specs; N = size placeholder, S = seed placeholder");
    ben->add_option("--sizes", bopt.sizes, "sizes substituted for N");
    ben->add_option("--seeds", bopt.seeds, "seeds substituted for S");
    ben->add_option("--pair", pair_specs, "extra instance 'specA=specB' (repeatable)");
    ben->add_flag("--baseline", bopt.baseline, "also run every instance without F");
    ben->add_flag("--distinct", bopt.distinct, "solve against a reseeded instance, not a copy");
    ben->add_option("--alpha-max", bopt.config.alpha_max, "extension level cap (0 = graph order)");
    ben->add_option("--stall", bopt.config.stall, "quiet levels tolerated before stopping");
    ben->add_option("--budget", bopt.config.node_budget, "backtracking node budget");
    ben->add_option("--out,-o", ben_out, "output CSV path ('-' = stdout)");

    // convert
    auto* cnv = app.add_subcommand("convert", "transcode a graph file");
    cnv->fallthrough();
    std::string cnv_in, cnv_to, cnv_out = "-";
    cnv->add_option("input", cnv_in, "graph file, '-' or 'fam:<spec>'")->required();
    cnv->add_option("--to", cnv_to, "target format: graph6|dimacs|edgelist")->required();
    cnv->add_option("--out,-o", cnv_out, "output path ('-' = stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return cmd_gen(gen_family, gen_out, g);
        if (*ext) return cmd_extend(ext_in, ext_alpha, ext_all, ext_out, g);
        if (*slv) {
            cfg.use_forbidden = !no_forbidden;
            cfg.row_match = row_set ? giso::RowMatch::SetOnly : giso::RowMatch::Multiset;
            return cmd_solve(slv_a, slv_b, cfg, g);
        }
        if (*ben) {
            if (bopt.families.empty() && pair_specs.empty()) {
                bopt.families = giso::default_bench_families();
                bopt.pairs = giso::default_bench_pairs();
            }
            for (const auto& p : pair_specs) {
                const std::size_t eq = p.find('=');
                if (eq == std::string::npos)
                    throw giso::InvalidParams("--pair expects 'specA=specB', got '" + p + "'");
                bopt.pairs.emplace_back(p.substr(0, eq), p.substr(eq + 1));
            }
            return cmd_bench(bopt, ben_out);
        }
        if (*cnv) return cmd_convert(cnv_in, cnv_to, cnv_out, g);
    } catch (const giso::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
