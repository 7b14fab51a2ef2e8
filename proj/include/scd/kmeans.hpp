#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "scd/embedding.hpp"
#include "scd/random.hpp"

namespace scd {

struct KMeansOptions {
    std::size_t batch_size = 0;  ///< 0 selects min(1024, n_rows)
    int max_iters = 100;
    /// Stop after this many consecutive batches without a lower batch inertia.
    int max_no_improvement = 10;
    /// Relative decrease of the batch inertia that counts as an improvement.
    double tol = 1e-4;
    /// Independent k-means++ restarts; the lowest final inertia wins.
    int n_init = 10;
};

struct ClusterModel {
    RowMatrix centers;            ///< k x d
    std::vector<std::uint32_t> labels;
    double inertia = 0.0;         ///< sum of squared distances to the nearest center
    std::size_t k = 0;
    std::uint64_t seed = 0;
};

/// Number of pairwise-distinct rows (bitwise comparison).
std::size_t count_distinct_rows(const RowMatrix& x);

/// Greedy k-means++ seeding: first center uniform; for each further center,
/// 2 + floor(ln k) candidates are drawn with probability proportional to the
/// squared distance to the nearest chosen center and the one leaving the
/// smallest total squared distance is kept. Throws DataError when k exceeds
/// the number of distinct rows.
RowMatrix kmeanspp_init(const RowMatrix& x, std::size_t k, Rng& rng);

/// Nearest center by squared Euclidean distance, ties to the lowest index.
std::vector<std::uint32_t> assign(const RowMatrix& x, const RowMatrix& centers);

/// Mini-batch k-means: per batch, nearest-center assignment followed by
/// per-center running-mean updates with learning rate 1 / (assignment count).
/// Every epoch (n_rows sampled points) clusters left empty are re-seeded at
/// the point farthest from its own center. Stops after max_iters batches,
/// after max_no_improvement stale batches, or (full batches only) when an
/// assignment repeats. A final full pass yields labels and inertia.
/// Deterministic for a given seed.
ClusterModel minibatch_kmeans(const RowMatrix& x, std::size_t k, std::uint64_t seed,
                              const KMeansOptions& options = {});

} // namespace scd
