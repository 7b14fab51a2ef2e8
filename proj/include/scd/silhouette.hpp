#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "scd/embedding.hpp"

namespace scd {

struct SilhouetteResult {
    /// s(i) for each evaluated point, in [-1, 1]. All points unless sampling.
    std::vector<double> per_point;
    /// Point indices of per_point when sampling; empty means 0..n-1.
    std::vector<std::size_t> indices;
    double global = 0.0;
    std::size_t k = 0;
    bool approximate = false;
};

struct SilhouetteOptions {
    /// Pairwise distances are cached when n_rows is at most this.
    std::size_t cache_limit = 4096;
    /// 0 evaluates every point. Otherwise s(i) is averaged over a seeded
    /// uniform sample of this many points (approximate).
    std::size_t sample_size = 0;
    std::uint64_t sample_seed = 0;
};

/**
 * Silhouette evaluation over a fixed point set, reused across labelings.
 *
 * For point i in cluster C_i, with Euclidean distance dist:
 *   a(i) = mean dist to the other members of C_i
 *   b(i) = min over other clusters C of the mean dist to members of C
 *   s(i) = (b - a) / max(a, b), 0 for singleton clusters and when a = b = 0.
 * Per-cluster distance sums for a point are accumulated in one pass over its
 * distance row. Labels may be any integers; at least two distinct labels are
 * required (DataError otherwise).
 */
class SilhouetteEvaluator {
public:
    explicit SilhouetteEvaluator(const RowMatrix& x, SilhouetteOptions options = {});

    SilhouetteResult evaluate(std::span<const std::uint32_t> labels) const;
    double global(std::span<const std::uint32_t> labels) const { return evaluate(labels).global; }

    std::size_t size() const { return static_cast<std::size_t>(x_.rows()); }
    bool cached() const { return !distances_.empty(); }

private:
    void distance_row(std::size_t i, std::vector<double>& out) const;

    const RowMatrix& x_;
    SilhouetteOptions options_;
    std::vector<double> distances_;  // row-major n x n, empty when not cached
};

/// s(i) computed directly from its definition in O(n d).
double silhouette_point(std::size_t i, const RowMatrix& x, std::span<const std::uint32_t> labels);

/// Mean of s(i) over all points.
double silhouette_global(const RowMatrix& x, std::span<const std::uint32_t> labels);

struct NormalizedScores {
    std::vector<std::pair<std::size_t, double>> scores;  ///< (k, value in [0, 1])
    bool degenerate = false;                              ///< all inputs equal
};

/// Min-max rescaling (s - min) / (max - min) of one group's (k, score) list.
/// A constant list maps to zeros with the degenerate flag set.
NormalizedScores normalize_scores(std::span<const std::pair<std::size_t, double>> scores);

} // namespace scd
