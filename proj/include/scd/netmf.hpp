#pragma once

#include <cstddef>
#include <cstdint>

#include "scd/embedding.hpp"
#include "scd/graph.hpp"

namespace scd {

struct NetmfOptions {
    /// netmf_target refuses graphs above this many nodes (the target is dense).
    std::size_t dense_limit = 20000;
    /// Up to this size the factorization uses a full symmetric
    /// eigendecomposition; above it, randomized subspace iteration.
    std::size_t exact_eigen_limit = 2000;
    int oversampling = 10;
    int power_iterations = 6;
};

/**
 * DeepWalk matrix-factorization target
 *
 *   M = log(max(1, vol(G) / (T b) * (sum_{r=1..T} (D^-1 A)^r) D^-1))
 *
 * with the logarithm applied elementwise. Degree-0 nodes contribute zero
 * inverse degree, so their rows and columns are 0. The result is exactly
 * symmetric. The power series is accumulated with T-1 sparse-dense
 * products, parallel over rows with a fixed per-row reduction order.
 *
 * Throws DataError when the graph exceeds options.dense_limit nodes.
 */
RowMatrix netmf_target(const Graph& g, int window, int negative, const NetmfOptions& options = {});

/// emb = U_d sqrt(max(Lambda_d, 0)) for the d algebraically largest
/// eigenpairs of the symmetric matrix @a m, eigenvalues non-increasing.
/// Eigenvector signs are fixed so the largest-magnitude entry is positive.
RowMatrix factorize(const RowMatrix& m, int dimension, std::uint64_t seed, const NetmfOptions& options = {});

/// factorize(netmf_target(g, T, b), min(d, |N|), seed).
Embedding netmf_embed(const Graph& g, const EmbeddingParams& params, const NetmfOptions& options = {});

} // namespace scd
