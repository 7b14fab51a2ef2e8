#include "scd/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "scd/error.hpp"
#include "scd/random.hpp"

namespace scd {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SweepRecord to_record(const KEvaluation& e, Phase phase) {
    return {e.k, e.ok, e.ok ? e.silhouette : 0.0, e.error, phase, e.millis};
}

} // namespace

std::size_t gamma_estimate(std::size_t max_k) {
    const double g = std::round(std::pow(static_cast<double>(max_k), 2.0 / 3.0));
    return std::max<std::size_t>(1, static_cast<std::size_t>(g));
}

std::vector<std::size_t> valid_range(std::size_t max_k, std::size_t gamma, std::size_t k_min) {
    if (gamma < 1) throw std::invalid_argument("valid_range: gamma must be >= 1");
    if (k_min > max_k)
        throw std::invalid_argument("valid_range: empty range (k_min " + std::to_string(k_min) + " > K " +
                                    std::to_string(max_k) + ")");
    std::vector<std::size_t> out;
    for (std::size_t k = k_min; k <= max_k; k += gamma) out.push_back(k);
    return out;
}

const char* to_string(Phase p) { return p == Phase::coarse ? "coarse" : "fine"; }

CoarseResult coarse_sweep(std::span<const std::size_t> range, std::size_t patience, double incumbent,
                          const KEvaluator& evaluate) {
    if (range.empty()) throw std::invalid_argument("coarse_sweep: empty range");
    if (patience < 1) throw std::invalid_argument("coarse_sweep: patience must be >= 1");
    CoarseResult out;
    double best = incumbent;
    std::size_t remaining = patience;
    for (std::size_t idx = 0; idx < range.size() && remaining != 0; ++idx) {
        auto eval = evaluate(range[idx]);
        out.trace.push_back(to_record(eval, Phase::coarse));
        --remaining;
        if (eval.ok && eval.silhouette > best) {
            best = eval.silhouette;
            out.improved = true;
            out.best_k = eval.k;
            out.best_quality = eval.silhouette;
            out.best_labels = std::move(eval.labels);
            remaining = patience;
        }
    }
    return out;
}

FineResult fine_grained(std::size_t best_k, double best_quality, std::vector<std::uint32_t> best_labels,
                        std::size_t radius, std::size_t max_k, const KEvaluator& evaluate) {
    FineResult out;
    out.best_k = best_k;
    out.best_quality = best_quality;
    out.best_labels = std::move(best_labels);
    const std::size_t lo = std::max<std::size_t>(2, best_k > radius ? best_k - radius : 0);
    const std::size_t hi = std::min(max_k, best_k + radius);
    std::vector<std::size_t> ks;
    for (std::size_t k = lo; k <= hi; ++k)
        if (k != best_k) ks.push_back(k);
    std::vector<KEvaluation> results(ks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(ks.size()); ++i) results[i] = evaluate(ks[i]);

    for (auto& r : results) {
        out.trace.push_back(to_record(r, Phase::fine));
        if (!r.ok) continue;
        if (r.silhouette > out.best_quality || (r.silhouette == out.best_quality && r.k < out.best_k)) {
            out.best_quality = r.silhouette;
            out.best_k = r.k;
            out.best_labels = std::move(r.labels);
        }
    }
    return out;
}

void SearchConfig::validate() const {
    if (param_sets.empty()) throw ConfigError("param_sets: at least one embedding parameter set is required");
    for (const auto& p : param_sets) p.validate();
    if (k_min < 2) throw ConfigError("k_min: must be >= 2");
    if (max_k != 0 && max_k < k_min) throw ConfigError("max_k: must be >= k_min");
    if (patience < 1) throw ConfigError("patience: must be >= 1");
    ppr.validate();
    if (kmeans.max_iters < 1) throw ConfigError("kmeans.max_iters: must be >= 1");
    if (kmeans.n_init < 1) throw ConfigError("kmeans.n_init: must be >= 1");
    if (kmeans.max_no_improvement < 1) throw ConfigError("kmeans.max_no_improvement: must be >= 1");
}

KEvaluator make_evaluator(const RowMatrix& embedding, const SilhouetteEvaluator& silhouette,
                          const KMeansOptions& kmeans, std::uint64_t seed, std::size_t param_index) {
    return [&embedding, &silhouette, kmeans, seed, param_index](std::size_t k) {
        KEvaluation e;
        e.k = k;
        const auto start = Clock::now();
        try {
            auto model = minibatch_kmeans(embedding, k, derive_seed(seed, {param_index, k}), kmeans);
            e.silhouette = silhouette.global(model.labels);
            e.labels = std::move(model.labels);
            e.ok = true;
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        e.millis = millis_since(start);
        return e;
    };
}

Embedding embed(const Graph& g, const EmbeddingParams& params, const SearchConfig& config) {
    if (params.backend == Backend::netmf) return netmf_embed(g, params, config.netmf);
    return ppr_embed(g, params, config.ppr).embedding;
}

Detection scd_detect(const Graph& g, const SearchConfig& config) {
    config.validate();
    const auto start = Clock::now();

    std::vector<NodeId> active;
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        if (g.neighbor_count(u) > 0) active.push_back(u);
    if (active.size() < 2 || g.num_edges() == 0) throw DataError("scd_detect: graph needs at least one edge");
    const Graph sub = active.size() == g.num_nodes() ? g : g.induced_subgraph(active);
    const std::size_t n = sub.num_nodes();

    SearchReport report;
    report.isolated_nodes = g.num_nodes() - n;
    report.max_k = config.max_k == 0 ? n : std::min(config.max_k, n);
    report.gamma = config.gamma == 0 ? gamma_estimate(report.max_k) : config.gamma;
    report.k_min = std::min(config.k_min, std::max<std::size_t>(2, report.max_k / 10));
    report.fine_radius = config.fine_radius.value_or(report.gamma - 1);
    report.range = valid_range(report.max_k, report.gamma, report.k_min);

    double global_quality = -std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> global_labels;
    bool any_embedded = false;

    for (std::size_t pi = 0; pi < config.param_sets.size(); ++pi) {
        ParamSetSummary summary;
        summary.params = config.param_sets[pi];
        auto params = summary.params;
        params.seed = derive_seed(config.seed, {pi, 0x656d626564ULL});
        const auto embed_start = Clock::now();
        Embedding emb;
        try {
            emb = embed(sub, params, config);
            summary.embedded = true;
            any_embedded = true;
        } catch (const std::exception& ex) {
            summary.error = ex.what();
        }
        summary.embed_millis = millis_since(embed_start);
        if (!summary.embedded) {
            report.param_sets.push_back(summary);
            continue;
        }

        const auto search_start = Clock::now();
        SilhouetteEvaluator silhouette(emb.matrix, config.silhouette);
        auto evaluate = make_evaluator(emb.matrix, silhouette, config.kmeans, config.seed, pi);
        auto coarse = coarse_sweep(report.range, config.patience, global_quality, evaluate);
        for (const auto& r : coarse.trace)
            report.records.push_back({pi, r.k, r.ok, r.silhouette, std::numeric_limits<double>::quiet_NaN(),
                                      r.phase, r.millis, r.error});
        if (coarse.improved) {
            summary.improved = true;
            global_quality = coarse.best_quality;
            global_labels = std::move(coarse.best_labels);
            report.best_param = pi;
            report.best_k = coarse.best_k;
            if (report.fine_radius > 0) {
                auto fine = fine_grained(coarse.best_k, coarse.best_quality, std::move(global_labels),
                                         report.fine_radius, report.max_k, evaluate);
                for (const auto& r : fine.trace)
                    report.records.push_back({pi, r.k, r.ok, r.silhouette, std::numeric_limits<double>::quiet_NaN(),
                                              r.phase, r.millis, r.error});
                global_quality = fine.best_quality;
                global_labels = std::move(fine.best_labels);
                report.best_k = fine.best_k;
            }
        }
        summary.search_millis = millis_since(search_start);
        report.param_sets.push_back(summary);
    }

    if (!any_embedded) throw DataError("scd_detect: every embedding failed");
    if (global_labels.empty()) throw DataError("scd_detect: no clustering could be evaluated");
    report.best_quality = global_quality;

    if (config.normalize) {
        // Group by embedding dimension (ppr forms its own group).
        std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
        for (std::size_t r = 0; r < report.records.size(); ++r) {
            if (!report.records[r].ok) continue;
            const auto& p = config.param_sets[report.records[r].param_index];
            groups[{static_cast<int>(p.backend), p.backend == Backend::ppr ? 0 : p.dimension}].push_back(r);
        }
        for (const auto& [key, idx] : groups) {
            std::vector<std::pair<std::size_t, double>> scores;
            for (auto r : idx) scores.emplace_back(report.records[r].k, report.records[r].silhouette);
            auto norm = normalize_scores(scores);
            for (std::size_t j = 0; j < idx.size(); ++j) report.records[idx[j]].normalized = norm.scores[j].second;
        }
    }

    // Map back: active nodes keep their cluster, isolated nodes become singletons.
    std::vector<std::int64_t> raw(g.num_nodes(), -1);
    for (std::size_t i = 0; i < n; ++i) raw[active[i]] = global_labels[i];
    std::int64_t next = static_cast<std::int64_t>(report.best_k) + 1;
    for (auto& v : raw)
        if (v < 0) v = next++;
    report.total_millis = millis_since(start);
    return {Partition::from_labels(raw), std::move(report)};
}

std::vector<SweepRecord> silhouette_sweep(const RowMatrix& embedding, std::span<const std::size_t> range,
                                          const KMeansOptions& kmeans, const SilhouetteOptions& silhouette,
                                          std::uint64_t seed) {
    SilhouetteEvaluator eval(embedding, silhouette);
    auto evaluate = make_evaluator(embedding, eval, kmeans, seed, 0);
    std::vector<KEvaluation> results(range.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(range.size()); ++i) results[i] = evaluate(range[i]);
    std::vector<SweepRecord> out;
    for (const auto& r : results) out.push_back(to_record(r, Phase::coarse));
    return out;
}

std::vector<EmbeddingParams> default_param_grid() {
    std::vector<EmbeddingParams> out;
    for (int b : {1, 5, 20})
        for (int t : {1, 3, 5, 10, 30, 50})
            for (int d : {16, 32, 64, 128, 256}) {
                EmbeddingParams p;
                p.backend = Backend::netmf;
                p.negative = b;
                p.window = t;
                p.dimension = d;
                out.push_back(p);
            }
    return out;
}

std::vector<EmbeddingParams> fast_param_grid() {
    EmbeddingParams p;
    p.backend = Backend::netmf;
    p.negative = 1;
    p.window = 5;
    p.dimension = 32;
    return {p};
}

} // namespace scd
