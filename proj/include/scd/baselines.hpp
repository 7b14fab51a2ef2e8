#pragma once

#include <cstdint>

#include "scd/graph.hpp"
#include "scd/partition.hpp"

namespace scd {

/// Asynchronous label propagation. Every node starts in its own community;
/// each pass visits nodes in a fresh seeded order and moves a node to the
/// label with the largest total edge weight among its neighbors unless its
/// current label already attains that maximum (ties otherwise broken
/// uniformly at random). Stops after a pass without changes or @a max_iter
/// passes.
Partition label_propagation(const Graph& g, std::uint64_t seed, int max_iter = 100);

struct LouvainOptions {
    std::uint64_t seed = 0;
    int max_levels = 32;
    int max_passes = 100;  ///< local-moving passes per level
};

/// Multi-level Louvain modularity optimization (resolution 1). Local moving
/// to the best strictly positive gain, aggregation, repeat until a level
/// moves nothing; a final local-moving pass on the input graph leaves the
/// result a local optimum under single-node moves. DataError for edgeless
/// graphs.
Partition louvain(const Graph& g, const LouvainOptions& options = {});

} // namespace scd
