// scd: batch front end for silhouette community detection.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scd/baselines.hpp"
#include "scd/error.hpp"
#include "scd/graph.hpp"
#include "scd/lfr.hpp"
#include "scd/metrics.hpp"
#include "scd/netmf.hpp"
#include "scd/parallel.hpp"
#include "scd/partition.hpp"
#include "scd/ppr.hpp"
#include "scd/random.hpp"
#include "scd/report.hpp"
#include "scd/search.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct Globals {
    std::uint64_t seed = 0;
    int threads = 0;
    bool timings = false;
};

// Canonical "key=value;" text of the effective configuration, hashed into
// report headers. Paths are left out so relocating outputs keeps the hash.
class ConfigText {
public:
    template <class T>
    ConfigText& add(const std::string& key, const T& value) {
        os_ << key << '=' << value << ';';
        return *this;
    }
    template <class T>
    ConfigText& add_list(const std::string& key, const std::vector<T>& values) {
        os_ << key << '=';
        for (std::size_t i = 0; i < values.size(); ++i) os_ << (i ? "," : "") << values[i];
        os_ << ';';
        return *this;
    }
    std::uint64_t hash() const { return scd::fnv1a(os_.str()); }

private:
    std::ostringstream os_;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw scd::DataError("cannot write '" + path + "'");
    return out;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// Embedding ------------------------------------------------------------------

struct EmbedOptions {
    std::string backend = "netmf";
    int window = 5;
    int negative = 1;
    int dimension = 32;
    scd::PprParams ppr;

    void add(CLI::App* cmd) {
        cmd->add_option("--backend", backend, "netmf or ppr")->check(CLI::IsMember({"netmf", "ppr"}));
        cmd->add_option("--window", window, "NetMF context window T");
        cmd->add_option("--negative", negative, "NetMF negative samples b");
        cmd->add_option("--dimension", dimension, "NetMF dimension d");
        cmd->add_option("--alpha", ppr.alpha, "PPR damping");
        cmd->add_option("--tol", ppr.tol, "PPR L1 tolerance");
        cmd->add_option("--max-iter", ppr.max_iter, "PPR iteration cap");
    }

    scd::EmbeddingParams params(std::uint64_t seed) const {
        scd::EmbeddingParams p;
        p.backend = scd::backend_from_string(backend);
        p.window = window;
        p.negative = negative;
        p.dimension = dimension;
        p.seed = seed;
        p.validate();
        ppr.validate();
        return p;
    }

    void describe(ConfigText& c) const {
        c.add("backend", backend).add("window", window).add("negative", negative).add("dimension", dimension);
        c.add("alpha", ppr.alpha).add("tol", ppr.tol).add("max_iter", ppr.max_iter);
    }
};

// Search ---------------------------------------------------------------------

struct SearchOptions {
    bool fast = false;
    std::vector<std::string> backends{"netmf"};
    std::vector<int> windows;
    std::vector<int> negatives;
    std::vector<int> dimensions;
    std::size_t max_k = 0;
    std::size_t gamma = 0;
    std::size_t patience = 5;
    std::size_t k_min = 5;
    int fine_radius = -1;
    bool normalize = false;
    scd::PprParams ppr;

    void add(CLI::App* cmd) {
        cmd->add_flag("--fast", fast, "single parameter set b=1, T=5, d=32");
        cmd->add_option("--backends", backends, "embedding backends (netmf, ppr)")
            ->check(CLI::IsMember({"netmf", "ppr"}));
        cmd->add_option("--windows", windows, "NetMF windows (default 1,3,5,10,30,50)");
        cmd->add_option("--negatives", negatives, "NetMF negative samples (default 1,5,20)");
        cmd->add_option("--dimensions", dimensions, "NetMF dimensions (default 16,32,64,128,256)");
        cmd->add_option("--max-k", max_k, "largest k; 0 = number of non-isolated nodes");
        cmd->add_option("--gamma", gamma, "coarse grid step; 0 = round(K^(2/3))");
        cmd->add_option("--patience", patience, "coarse stopping patience w");
        cmd->add_option("--k-min", k_min, "first k of the coarse grid");
        cmd->add_option("--fine-radius", fine_radius, "fine window half width; -1 = gamma - 1");
        cmd->add_flag("--normalize", normalize, "report min-max normalized silhouettes");
        cmd->add_option("--alpha", ppr.alpha, "PPR damping");
        cmd->add_option("--tol", ppr.tol, "PPR L1 tolerance");
        cmd->add_option("--max-iter", ppr.max_iter, "PPR iteration cap");
    }

    scd::SearchConfig config(std::uint64_t seed) const {
        scd::SearchConfig c;
        auto pick = [](const std::vector<int>& v, std::vector<int> fallback) { return v.empty() ? fallback : v; };
        std::vector<int> ws = pick(windows, fast ? std::vector<int>{5} : std::vector<int>{1, 3, 5, 10, 30, 50});
        std::vector<int> bs = pick(negatives, fast ? std::vector<int>{1} : std::vector<int>{1, 5, 20});
        std::vector<int> ds =
            pick(dimensions, fast ? std::vector<int>{32} : std::vector<int>{16, 32, 64, 128, 256});
        for (const auto& name : backends) {
            scd::EmbeddingParams p;
            p.backend = scd::backend_from_string(name);
            if (p.backend == scd::Backend::ppr) {
                c.param_sets.push_back(p);
                continue;
            }
            for (int b : bs)
                for (int t : ws)
                    for (int d : ds) {
                        p.negative = b;
                        p.window = t;
                        p.dimension = d;
                        c.param_sets.push_back(p);
                    }
        }
        c.max_k = max_k;
        c.gamma = gamma;
        c.patience = patience;
        c.k_min = k_min;
        if (fine_radius >= 0) c.fine_radius = static_cast<std::size_t>(fine_radius);
        c.normalize = normalize;
        c.seed = seed;
        c.ppr = ppr;
        c.validate();
        return c;
    }

    void describe(ConfigText& c) const {
        c.add("fast", fast).add_list("backends", backends).add_list("windows", windows);
        c.add_list("negatives", negatives).add_list("dimensions", dimensions);
        c.add("max_k", max_k).add("gamma", gamma).add("patience", patience).add("k_min", k_min);
        c.add("fine_radius", fine_radius).add("normalize", normalize);
        c.add("alpha", ppr.alpha).add("tol", ppr.tol).add("max_iter", ppr.max_iter);
    }
};

// Benchmark grid -------------------------------------------------------------

struct GridOptions {
    bool full_grid = false;
    std::vector<std::size_t> nodes{1000};
    std::vector<double> avg_deg{15.0};
    std::vector<int> max_deg{50};
    std::vector<double> mixing{0.1};
    double degree_exp = 2.0;
    double comm_exp = 1.0;
    std::size_t replicates = 1;

    void add(CLI::App* cmd) {
        cmd->add_flag("--full-grid", full_grid, "full 420-combination grid (overrides the lists)");
        cmd->add_option("--nodes", nodes, "node counts");
        cmd->add_option("--avg-deg", avg_deg, "average degrees");
        cmd->add_option("--max-deg", max_deg, "maximum degrees");
        cmd->add_option("--mixing", mixing, "mixing levels");
        cmd->add_option("--degree-exp", degree_exp, "degree power-law exponent");
        cmd->add_option("--comm-exp", comm_exp, "community-size power-law exponent");
        cmd->add_option("--replicates", replicates, "networks per combination");
    }

    scd::LfrGrid grid(std::uint64_t seed) const {
        scd::LfrGrid g;
        if (full_grid) {
            g = scd::LfrGrid::benchmark();
        } else {
            g.nodes = nodes;
            g.avg_deg = avg_deg;
            g.max_deg = max_deg;
            g.mixing = mixing;
        }
        g.degree_exp = degree_exp;
        g.comm_exp = comm_exp;
        g.replicates = replicates;
        g.seed = seed;
        if (g.nodes.empty() || g.avg_deg.empty() || g.max_deg.empty() || g.mixing.empty())
            throw scd::ConfigError("grid: every parameter list needs at least one value");
        if (replicates == 0) throw scd::ConfigError("replicates: must be positive");
        for (double m : g.mixing)
            if (!(m >= 0.0 && m <= 1.0)) throw scd::ConfigError("mixing: values must lie in [0, 1]");
        return g;
    }

    void describe(ConfigText& c) const {
        c.add("full_grid", full_grid).add_list("nodes", nodes).add_list("avg_deg", avg_deg);
        c.add_list("max_deg", max_deg).add_list("mixing", mixing).add("degree_exp", degree_exp);
        c.add("comm_exp", comm_exp).add("replicates", replicates);
    }
};

// Commands -------------------------------------------------------------------

struct GenerateCmd {
    GridOptions grid;
    std::string out;

    void run(const Globals& g) const {
        auto spec = grid.grid(g.seed);
        ConfigText cfg;
        grid.describe(cfg);
        fs::create_directories(out);
        auto manifest = open_output((fs::path(out) / "manifest.tsv").string());
        scd::write_report_header(manifest, "generate", cfg.hash(), g.seed);
        manifest << "cell\treplicate\tn\tavg_deg\tmax_deg\tmixing\tdegree_exp\tcomm_exp\tseed\tstatus\tedges\t"
                    "truth\tempirical_mixing\tnote\n";
        std::size_t emitted = 0, total = 0;
        scd::generate_grid(spec, [&](scd::GridCell&& cell) {
            ++total;
            const auto& p = cell.params;
            char stem[32];
            std::snprintf(stem, sizeof(stem), "cell_%04zu", cell.index);
            manifest << cell.index << '\t' << cell.replicate << '\t' << p.n << '\t' << p.avg_deg << '\t'
                     << p.max_deg << '\t' << p.mixing << '\t' << p.degree_exp << '\t' << p.comm_exp << '\t'
                     << p.seed << '\t';
            if (!cell.network) {
                std::cerr << "skipped " << p.describe() << ": " << cell.skip_reason << '\n';
                manifest << "infeasible\t-\t-\t-\t" << cell.skip_reason << '\n';
                return;
            }
            const auto& net = *cell.network;
            auto ids = scd::NodeIdMap::identity(net.graph.num_nodes());
            std::string edges = std::string(stem) + ".edges";
            std::string truth = std::string(stem) + ".truth";
            auto eo = open_output((fs::path(out) / edges).string());
            scd::write_edge_list(net.graph, ids, eo);
            auto to = open_output((fs::path(out) / truth).string());
            scd::write_partition(net.truth, ids, to);
            manifest << "ok\t" << edges << '\t' << truth << '\t' << fixed6(net.empirical_mixing) << '\t'
                     << "dropped_stubs=" << net.dropped_stubs << '\n';
            ++emitted;
        });
        std::cout << "generated " << emitted << " of " << total << " networks in " << out << '\n';
    }
};

struct EmbedCmd {
    std::string graph;
    bool weighted = false;
    std::string out;
    EmbedOptions embed;

    void run(const Globals& g) const {
        auto params = embed.params(g.seed);
        auto loaded = scd::load_edge_list_file(graph, weighted);
        scd::SearchConfig sc;
        sc.ppr = embed.ppr;
        auto emb = scd::embed(loaded.graph, params, sc);
        if (!emb.all_finite()) throw scd::DataError("embedding contains non-finite values");
        auto os = open_output(out);
        scd::write_embedding(emb.matrix, os);
        std::cout << "embedded " << emb.rows() << " nodes in " << emb.cols() << " dimensions\n";
    }
};

struct DetectCmd {
    std::string graph;
    bool weighted = false;
    std::string out;
    std::string report;
    SearchOptions search;

    void run(const Globals& g) const {
        auto config = search.config(g.seed);
        ConfigText cfg;
        search.describe(cfg);
        cfg.add("weighted", weighted);
        auto loaded = scd::load_edge_list_file(graph, weighted);
        auto det = scd::scd_detect(loaded.graph, config);

        auto po = open_output(out);
        scd::write_partition(det.partition, loaded.ids, po);
        auto ro = open_output(report.empty() ? out + ".report" : report);
        scd::write_report_header(ro, "detect", cfg.hash(), g.seed);
        scd::write_search_report(det.report, ro, g.timings);
        std::cout << "communities " << det.partition.num_communities() << " silhouette "
                  << fixed6(det.report.best_quality) << '\n';
    }
};

struct EvalCmd {
    std::string graph;
    bool weighted = false;
    std::string pred;
    std::string truth;
    std::string out;

    void run(const Globals& g) const {
        ConfigText cfg;
        cfg.add("weighted", weighted).add("truth", !truth.empty());
        auto loaded = scd::load_edge_list_file(graph, weighted);
        auto p = scd::load_partition_file(pred, loaded.ids);
        std::ostringstream os;
        scd::write_report_header(os, "eval", cfg.hash(), g.seed);
        os << "metric\tvalue\n";
        if (!truth.empty()) {
            auto t = scd::load_partition_file(truth, loaded.ids);
            os << "nmi\t" << fixed6(scd::nmi(t, p)) << '\n';
            os << "ari\t" << fixed6(scd::ari(t, p)) << '\n';
        }
        os << "modularity\t" << fixed6(scd::modularity(loaded.graph, p)) << '\n';
        if (out.empty()) {
            std::cout << os.str();
        } else {
            auto f = open_output(out);
            f << os.str();
        }
    }
};

struct SweepCmd {
    std::string graph;
    bool weighted = false;
    std::string out;
    EmbedOptions embed;
    std::size_t k_min = 2;
    std::size_t k_max = 0;
    std::size_t step = 1;

    void run(const Globals& g) const {
        if (k_min < 2) throw scd::ConfigError("k-min: must be at least 2");
        if (step == 0) throw scd::ConfigError("step: must be positive");
        auto params = embed.params(g.seed);
        ConfigText cfg;
        embed.describe(cfg);
        cfg.add("weighted", weighted).add("k_min", k_min).add("k_max", k_max).add("step", step);
        auto loaded = scd::load_edge_list_file(graph, weighted);

        std::vector<scd::NodeId> active;
        for (scd::NodeId u = 0; u < loaded.graph.num_nodes(); ++u)
            if (loaded.graph.neighbor_count(u) > 0) active.push_back(u);
        if (active.size() < 3) throw scd::DataError("sweep needs at least 3 non-isolated nodes");
        const scd::Graph sub =
            active.size() == loaded.graph.num_nodes() ? loaded.graph : loaded.graph.induced_subgraph(active);
        std::size_t hi = k_max == 0 ? active.size() - 1 : k_max;
        if (hi >= active.size()) throw scd::ConfigError("k-max: must be below the number of non-isolated nodes");
        if (hi < k_min) throw scd::ConfigError("k-max: must be at least k-min");

        scd::SearchConfig sc;
        sc.ppr = embed.ppr;
        sc.seed = g.seed;
        auto emb = scd::embed(sub, params, sc);
        std::vector<std::size_t> range;
        for (std::size_t k = k_min; k <= hi; k += step) range.push_back(k);
        auto trace = scd::silhouette_sweep(emb.matrix, range, sc.kmeans, sc.silhouette, g.seed);

        auto os = open_output(out);
        scd::write_report_header(os, "sweep", cfg.hash(), g.seed);
        os << "k\tsilhouette\tnormalized\n";
        scd::write_sweep_trace(trace, os);
    }
};

struct BenchCmd {
    GridOptions grid;
    SearchOptions search;
    std::vector<std::string> algorithms{"scd-netmf", "scd-ppr", "louvain", "labelprop"};
    std::string records;

    struct Accumulator {
        std::vector<double> nmi, ari, mod;
        std::size_t failed = 0;
    };

    static std::pair<double, double> mean_std(const std::vector<double>& v) {
        if (v.empty()) return {std::nan(""), std::nan("")};
        double m = 0.0;
        for (double x : v) m += x;
        m /= static_cast<double>(v.size());
        double s = 0.0;
        for (double x : v) s += (x - m) * (x - m);
        return {m, std::sqrt(s / static_cast<double>(v.size()))};
    }

    scd::Partition run_algorithm(const std::string& name, const scd::Graph& g, const scd::SearchConfig& base,
                                 std::uint64_t seed) const {
        if (name == "louvain") return scd::louvain(g, {.seed = seed});
        if (name == "labelprop") return scd::label_propagation(g, seed);
        scd::SearchConfig c = base;
        c.seed = seed;
        auto backend = name == "scd-ppr" ? scd::Backend::ppr : scd::Backend::netmf;
        std::erase_if(c.param_sets, [&](const scd::EmbeddingParams& p) { return p.backend != backend; });
        if (c.param_sets.empty()) {
            if (backend == scd::Backend::netmf) {
                c.param_sets = search.fast ? scd::fast_param_grid() : scd::default_param_grid();
            } else {
                c.param_sets.emplace_back();
                c.param_sets.back().backend = backend;
            }
        }
        return scd::scd_detect(g, c).partition;
    }

    void run(const Globals& g) const {
        static const std::vector<std::string> known{"scd-netmf", "scd-ppr", "louvain", "labelprop"};
        for (const auto& a : algorithms)
            if (std::find(known.begin(), known.end(), a) == known.end())
                throw scd::ConfigError("algorithms: unknown algorithm '" + a + "'");
        auto spec = grid.grid(g.seed);
        auto base = search.config(g.seed);
        ConfigText cfg;
        grid.describe(cfg);
        search.describe(cfg);
        cfg.add_list("algorithms", algorithms);

        std::map<std::pair<double, std::size_t>, Accumulator> acc;
        for (double m : spec.mixing)
            for (std::size_t a = 0; a < algorithms.size(); ++a) acc[{m, a}];
        std::size_t skipped = 0;
        scd::generate_grid(spec, [&](scd::GridCell&& cell) {
            if (!cell.network) {
                ++skipped;
                std::cerr << "skipped " << cell.params.describe() << ": " << cell.skip_reason << '\n';
                return;
            }
            const auto& net = *cell.network;
            for (std::size_t a = 0; a < algorithms.size(); ++a) {
                auto& slot = acc[{cell.params.mixing, a}];
                try {
                    auto seed = scd::derive_seed(g.seed, {cell.index, a});
                    auto pred = run_algorithm(algorithms[a], net.graph, base, seed);
                    slot.nmi.push_back(scd::nmi(net.truth, pred));
                    slot.ari.push_back(scd::ari(net.truth, pred));
                    slot.mod.push_back(scd::modularity(net.graph, pred));
                } catch (const std::exception& e) {
                    ++slot.failed;
                    std::cerr << "cell " << cell.index << ' ' << algorithms[a] << " failed: " << e.what() << '\n';
                }
            }
        });

        auto cell = [](const std::vector<double>& v) {
            auto [m, s] = mean_std(v);
            if (std::isnan(m)) return std::string("-");
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.3f +- %.3f", m, s);
            return std::string(buf);
        };
        std::ostringstream table;
        scd::write_report_header(table, "bench", cfg.hash(), g.seed);
        char line[256];
        std::snprintf(line, sizeof(line), "%-7s %-10s %5s %6s  %-15s %-15s %-15s\n", "mixing", "algorithm", "cells",
                      "failed", "nmi", "ari", "modularity");
        table << line;
        std::ostringstream rec;
        scd::write_report_header(rec, "bench", cfg.hash(), g.seed);
        rec << "mixing\talgorithm\tcells\tfailed\tnmi_mean\tnmi_std\tari_mean\tari_std\tmodularity_mean\t"
               "modularity_std\n";
        for (const auto& [key, a] : acc) {
            const auto& name = algorithms[key.second];
            std::snprintf(line, sizeof(line), "%-7.2f %-10s %5zu %6zu  %-15s %-15s %-15s\n", key.first, name.c_str(),
                          a.nmi.size(), a.failed, cell(a.nmi).c_str(), cell(a.ari).c_str(), cell(a.mod).c_str());
            table << line;
            rec << key.first << '\t' << name << '\t' << a.nmi.size() << '\t' << a.failed;
            for (const auto* v : {&a.nmi, &a.ari, &a.mod}) {
                auto [m, s] = mean_std(*v);
                rec << '\t' << (std::isnan(m) ? "-" : fixed6(m)) << '\t' << (std::isnan(s) ? "-" : fixed6(s));
            }
            rec << '\n';
        }
        if (skipped) table << "# skipped infeasible cells " << skipped << '\n';
        std::cout << table.str();
        if (!records.empty()) {
            auto f = open_output(records);
            f << rec.str();
        }
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Silhouette community detection"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", SCD_VERSION);
    app.set_config("--config", "", "INI/TOML config file; command line flags override it");

    Globals globals;
    app.add_option("--seed", globals.seed, "random seed");
    app.add_option("--threads", globals.threads, "worker threads; 0 = runtime default")->check(CLI::NonNegativeNumber);
    app.add_flag("--timings", globals.timings, "include wall-clock timings in reports");

    GenerateCmd generate;
    auto* gen = app.add_subcommand("generate", "write LFR benchmark networks and a manifest");
    generate.grid.add(gen);
    gen->add_option("--out", generate.out, "run directory")->required();

    EmbedCmd embed;
    auto* emb = app.add_subcommand("embed", "compute a node embedding");
    emb->add_option("--graph", embed.graph, "edge list")->required();
    emb->add_flag("--weighted", embed.weighted, "read the third column as weight");
    emb->add_option("--out", embed.out, "embedding file")->required();
    embed.embed.add(emb);

    DetectCmd detect;
    auto* det = app.add_subcommand("detect", "detect communities with SCD");
    det->add_option("--graph", detect.graph, "edge list")->required();
    det->add_flag("--weighted", detect.weighted, "read the third column as weight");
    det->add_option("--out", detect.out, "partition file")->required();
    det->add_option("--report", detect.report, "search report (default <out>.report)");
    detect.search.add(det);

    EvalCmd eval;
    auto* ev = app.add_subcommand("eval", "score a partition");
    ev->add_option("--graph", eval.graph, "edge list")->required();
    ev->add_flag("--weighted", eval.weighted, "read the third column as weight");
    ev->add_option("--pred", eval.pred, "predicted partition")->required();
    ev->add_option("--truth", eval.truth, "ground-truth partition");
    ev->add_option("--out", eval.out, "metric report (default stdout)");

    BenchCmd bench;
    auto* be = app.add_subcommand("bench", "compare algorithms on an LFR grid");
    bench.grid.add(be);
    bench.search.add(be);
    be->add_option("--algorithms", bench.algorithms, "scd-netmf, scd-ppr, louvain, labelprop");
    be->add_option("--records", bench.records, "machine-readable aggregate records");

    SweepCmd sweep;
    auto* sw = app.add_subcommand("sweep", "silhouette as a function of k");
    sw->add_option("--graph", sweep.graph, "edge list")->required();
    sw->add_flag("--weighted", sweep.weighted, "read the third column as weight");
    sw->add_option("--out", sweep.out, "trace file")->required();
    sweep.embed.add(sw);
    sw->add_option("--k-min", sweep.k_min, "first k");
    sw->add_option("--k-max", sweep.k_max, "last k; 0 = non-isolated nodes - 1");
    sw->add_option("--step", sweep.step, "k increment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (globals.threads > 0) scd::set_num_threads(globals.threads);
        if (gen->parsed()) generate.run(globals);
        else if (emb->parsed()) embed.run(globals);
        else if (det->parsed()) detect.run(globals);
        else if (ev->parsed()) eval.run(globals);
        else if (be->parsed()) bench.run(globals);
        else if (sw->parsed()) sweep.run(globals);
    } catch (const scd::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const scd::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
