#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scd/embedding.hpp"
#include "scd/graph.hpp"
#include "scd/kmeans.hpp"
#include "scd/netmf.hpp"
#include "scd/partition.hpp"
#include "scd/ppr.hpp"
#include "scd/silhouette.hpp"

namespace scd {

/// max(1, round(K^(2/3))).
std::size_t gamma_estimate(std::size_t max_k);

/// k_min, k_min + gamma, ... up to and including max_k when it lies on the
/// grid. Throws std::invalid_argument for an empty range.
std::vector<std::size_t> valid_range(std::size_t max_k, std::size_t gamma, std::size_t k_min);

enum class Phase { coarse, fine };
const char* to_string(Phase p);

/// Outcome of clustering the embedding into k clusters and scoring it.
struct KEvaluation {
    std::size_t k = 0;
    bool ok = false;
    double silhouette = -std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> labels;
    std::string error;
    double millis = 0.0;
};

/// Must be safe to call concurrently for different k.
using KEvaluator = std::function<KEvaluation(std::size_t k)>;

struct SweepRecord {
    std::size_t k = 0;
    bool ok = false;
    double silhouette = 0.0;
    std::string error;
    Phase phase = Phase::coarse;
    double millis = 0.0;
};

struct CoarseResult {
    bool improved = false;  ///< beat the incumbent at least once
    std::size_t best_k = 0;
    double best_quality = -std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> best_labels;
    std::vector<SweepRecord> trace;
};

/**
 * Coarse sweep over @a range in order with patience: the counter starts at
 * @a patience, drops by one per evaluation, and is reset whenever the score
 * beats the running best (initially @a incumbent). The sweep ends when the
 * counter reaches zero or the range is exhausted. Failed evaluations are
 * traced and count as non-improving.
 */
CoarseResult coarse_sweep(std::span<const std::size_t> range, std::size_t patience, double incumbent,
                          const KEvaluator& evaluate);

struct FineResult {
    std::size_t best_k = 0;
    double best_quality = 0.0;
    std::vector<std::uint32_t> best_labels;
    std::vector<SweepRecord> trace;
};

/// Exhaustive evaluation of every k in [best_k - radius, best_k + radius]
/// clipped to [2, max_k], reusing the supplied result at best_k. Returns the
/// best score, lowest k on ties. Evaluations run in parallel.
FineResult fine_grained(std::size_t best_k, double best_quality, std::vector<std::uint32_t> best_labels,
                        std::size_t radius, std::size_t max_k, const KEvaluator& evaluate);

struct SearchConfig {
    std::vector<EmbeddingParams> param_sets;
    std::size_t max_k = 0;      ///< K; 0 means the number of non-isolated nodes
    std::size_t gamma = 0;      ///< grid step; 0 means gamma_estimate(K)
    std::size_t patience = 5;   ///< w
    std::size_t k_min = 5;
    /// Fine-grained half width; unset means gamma - 1.
    std::optional<std::size_t> fine_radius;
    bool normalize = false;
    std::uint64_t seed = 0;
    KMeansOptions kmeans;
    PprParams ppr;
    NetmfOptions netmf;
    SilhouetteOptions silhouette;

    /// Throws ConfigError naming the first invalid field.
    void validate() const;
};

struct EvaluationRecord {
    std::size_t param_index = 0;
    std::size_t k = 0;
    bool ok = false;
    double silhouette = 0.0;
    /// Min-max normalized within the records sharing an embedding dimension;
    /// NaN unless SearchConfig::normalize is set.
    double normalized = std::numeric_limits<double>::quiet_NaN();
    Phase phase = Phase::coarse;
    double millis = 0.0;
    std::string error;
};

struct ParamSetSummary {
    EmbeddingParams params;
    bool embedded = false;
    std::string error;
    bool improved = false;
    double embed_millis = 0.0;
    double search_millis = 0.0;
};

struct SearchReport {
    std::vector<EvaluationRecord> records;
    std::vector<ParamSetSummary> param_sets;
    std::size_t max_k = 0;
    std::size_t gamma = 0;
    std::size_t k_min = 0;
    std::size_t fine_radius = 0;
    std::vector<std::size_t> range;
    std::size_t best_param = 0;
    std::size_t best_k = 0;
    double best_quality = -std::numeric_limits<double>::infinity();
    std::size_t isolated_nodes = 0;  ///< emitted as singleton communities
    double total_millis = 0.0;
};

struct Detection {
    Partition partition;
    SearchReport report;
};

/// Evaluator over one embedding: minibatch_kmeans with the seed
/// derive_seed(seed, {param_index, k}) followed by the global silhouette.
KEvaluator make_evaluator(const RowMatrix& embedding, const SilhouetteEvaluator& silhouette,
                          const KMeansOptions& kmeans, std::uint64_t seed, std::size_t param_index);

/// Embeds @a g with one parameter set (netmf or ppr).
Embedding embed(const Graph& g, const EmbeddingParams& params, const SearchConfig& config);

/**
 * Silhouette community detection.
 *
 * Degree-0 nodes are set aside and returned as singleton communities. For
 * each parameter set: embed, coarse sweep against the global best, and if
 * that sweep improved the global best, a fine-grained pass around the new
 * optimum. The partition with the highest global silhouette over all
 * evaluated (parameter set, k) pairs is returned. Deterministic given
 * config.seed.
 *
 * The effective k_min is min(k_min, max(2, K / 10)) so graphs with few
 * nodes still reach k = 2.
 */
Detection scd_detect(const Graph& g, const SearchConfig& config);

/// Silhouette of every k in @a range for one embedding, no patience.
std::vector<SweepRecord> silhouette_sweep(const RowMatrix& embedding, std::span<const std::size_t> range,
                                          const KMeansOptions& kmeans, const SilhouetteOptions& silhouette,
                                          std::uint64_t seed);

/// Full default parameter space: b in {1,5,20}, T in {1,3,5,10,30,50},
/// d in {16,32,64,128,256}.
std::vector<EmbeddingParams> default_param_grid();
/// Single fast parameter set b = 1, T = 5, d = 32.
std::vector<EmbeddingParams> fast_param_grid();

} // namespace scd
