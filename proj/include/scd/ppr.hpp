#pragma once

#include <cstddef>
#include <vector>

#include "scd/embedding.hpp"
#include "scd/graph.hpp"

namespace scd {

struct PprParams {
    double alpha = 0.85;   ///< probability of following an edge
    double tol = 1e-6;     ///< L1 change between iterates that stops the iteration
    int max_iter = 100;

    void validate() const;
};

struct PprVector {
    std::vector<double> values;
    int iterations = 0;
    bool converged = false;
};

/**
 * Personalized PageRank vector of @a source by power iteration:
 *
 *   x <- alpha * P^T x + (1 - alpha) e_source
 *
 * where P is the weight-normalized transition matrix. Mass that reaches a
 * node without edges restarts at the source. The iteration is restricted to
 * the source's connected component (entries elsewhere are exactly 0) and
 * starts from e_source.
 */
PprVector ppr_vector(const Graph& g, NodeId source, const PprParams& params = {});

struct PprEmbedding {
    Embedding embedding;
    std::vector<NodeId> unconverged;  ///< sources that hit max_iter
};

/// Row u is ppr_vector(g, u); d = |N|. Rows are computed independently.
PprEmbedding ppr_embed(const Graph& g, const EmbeddingParams& params, const PprParams& ppr = {});

} // namespace scd
