#include "giso/bench.hpp"

#include <algorithm>
#include <cstdio>

#include "giso/generators.hpp"

namespace giso {

namespace {

std::string substitute(std::string spec, char token, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = spec.find(token, pos)) != std::string::npos) {
        spec.replace(pos, 1, value);
        pos += value.size();
    }
    return spec;
}

std::uint64_t mix_seed(std::uint64_t seed) {
    // splitmix64 finalizer; keeps the permutation stream independent of the
    // generator stream for the same seed
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

BenchRecord run_instance(const std::string& label, const Graph& a, const Graph& b,
                         const BenchOptions& opt) {
    BenchRecord rec;
    rec.family = label;
    rec.n = static_cast<int>(a.order());
    const SolveVerdict v = solve(a, b, opt.config);
    rec.alpha_reached = v.stats.levels;
    rec.f_density = v.stats.f_density;
    rec.unique_candidate_fraction = v.stats.unique_candidate_fraction;
    rec.verdict = to_string(v.verdict);
    rec.nodes = v.stats.nodes;
    rec.extension_ms = v.stats.extension_ms;
    rec.search_ms = v.stats.search_ms;
    if (opt.baseline) {
        SolveConfig naive = opt.config;
        naive.use_forbidden = false;
        rec.nodes_baseline = solve(a, b, naive).stats.nodes;
    }
    return rec;
}

} // namespace

std::vector<std::string> default_bench_families() {
    return {
        "cycle(N)",
        "path(N)",
        "complete(16)",
        "random(N,0.1,S)",
        "random(N,0.5,S)",
        "random-regular(N,3,S)",
        "petersen",
        "rook(4)",
        "shrikhande",
    };
}

std::vector<std::pair<std::string, std::string>> default_bench_pairs() {
    return {
        {"shrikhande", "rook(4)"},
        {"cycle(6)", "union(complete(3),complete(3))"},
    };
}

std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
    std::vector<BenchRecord> records;
    for (const std::string& family : opt.families) {
        std::vector<std::string> sized;
        if (family.find('N') != std::string::npos) {
            for (int n : opt.sizes) sized.push_back(substitute(family, 'N', std::to_string(n)));
        } else {
            sized.push_back(family);
        }
        for (const std::string& spec : sized) {
            const bool seeded = spec.find('S') != std::string::npos;
            for (std::uint64_t seed : opt.seeds) {
                const std::string inst = substitute(spec, 'S', std::to_string(seed));
                const Graph a = generate(inst);
                std::string label = inst;
                Graph b = a;
                if (opt.distinct) {
                    if (!seeded)
                        throw InvalidParams("--distinct needs a seeded family ('S'), got '" +
                                            spec + "'");
                    const std::uint64_t reseed = seed + 7919;
                    b = generate(substitute(spec, 'S', std::to_string(reseed)));
                    label += " vs reseed " + std::to_string(reseed);
                } else {
                    b = permute(a, Permutation::random(a.order(), mix_seed(seed)));
                    label += " vs permuted(seed " + std::to_string(seed) + ")";
                }
                // deterministic families still vary per seed via the permutation
                records.push_back(run_instance(label, a, b, opt));
            }
        }
    }
    for (const auto& [sa, sb] : opt.pairs) {
        const Graph a = generate(sa);
        const Graph b = generate(sb);
        records.push_back(run_instance(sa + " vs " + sb, a, b, opt));
    }
    return records;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "family,n,alpha_reached,f_density,unique_candidate_fraction,"
           "verdict,nodes,extension_ms,search_ms,nodes_baseline\n";
    for (const auto& r : records) {
        out << csv_escape(r.family) << ',' << r.n << ',' << r.alpha_reached << ','
            << fmt_double(r.f_density) << ',' << fmt_double(r.unique_candidate_fraction) << ','
            << csv_escape(r.verdict) << ',' << r.nodes << ',' << fmt_double(r.extension_ms)
            << ',' << fmt_double(r.search_ms) << ','
            << (r.nodes_baseline ? std::to_string(*r.nodes_baseline) : std::string()) << '\n';
    }
}

} // namespace giso
