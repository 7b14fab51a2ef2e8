#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scd/graph.hpp"
#include "scd/partition.hpp"

namespace scd {

struct LfrParams {
    std::size_t n = 1000;
    double avg_deg = 15.0;
    int max_deg = 50;
    double mixing = 0.1;       ///< fraction of each node's edges leaving its community
    double degree_exp = 2.0;
    double comm_exp = 1.0;
    std::uint64_t seed = 0;

    /// Empty when the combination passes the static feasibility rules,
    /// otherwise a description of the failing constraint.
    std::string infeasibility() const;
    std::string describe() const;
};

struct LfrGraph {
    Graph graph;
    Partition truth;
    double empirical_mixing = 0.0;  ///< cross-community edges / edges
    std::size_t dropped_stubs = 0;  ///< stubs left unmatched by the wiring
};

/**
 * Simplified LFR benchmark.
 *
 * Degrees follow a power law with exponent degree_exp on [x_min, max_deg],
 * x_min chosen so the mean is avg_deg. Community sizes follow a power law
 * with exponent comm_exp on [max(3, x_min), max(max_deg, needed)],
 * truncated below so that every node fits in a community larger than its
 * internal degree; communities open in order of decreasing need until they
 * cover n and the last one is trimmed. Each node keeps
 * round((1 - mixing) * degree) stubs inside its community and the rest
 * outside; both stub pools are matched configuration-model style, rejecting
 * self-loops, multi-edges and (externally) same-community pairs, with edge
 * swaps for stubborn leftovers. The rejection budget is 100 x stub count.
 *
 * With zero mixing, internal stubs that cannot be wired are dropped rather
 * than turned into cross edges.
 *
 * Throws DataError naming the failing constraint when the parameters are
 * infeasible, more than 5% of stubs cannot be matched, or the empirical
 * mixing misses the target by more than 0.05.
 */
LfrGraph generate_lfr(const LfrParams& params);

struct LfrGrid {
    std::vector<std::size_t> nodes;
    std::vector<double> avg_deg;
    std::vector<int> max_deg;
    std::vector<double> mixing;
    double degree_exp = 2.0;
    double comm_exp = 1.0;
    std::size_t replicates = 1;
    std::uint64_t seed = 0;

    /// The full benchmark grid: 7 sizes x 3 average degrees x 4 maximum
    /// degrees x 5 mixing levels.
    static LfrGrid benchmark();
    /// Cartesian product in nodes-major order; cell seeds derive from
    /// (seed, cell index).
    std::vector<LfrParams> expand() const;
};

struct GridCell {
    std::size_t index = 0;
    std::size_t replicate = 0;
    LfrParams params;
    std::optional<LfrGraph> network;
    std::string skip_reason;  ///< set when network is empty
};

/// Generates every cell and hands it to @a sink in grid order. Infeasible
/// cells are passed with a skip reason instead of a network.
void generate_grid(const LfrGrid& grid, const std::function<void(GridCell&&)>& sink);

} // namespace scd
