#pragma once

#include "scd/graph.hpp"
#include "scd/partition.hpp"

namespace scd {

struct EvalScores {
    double nmi = 0.0;
    double ari = 0.0;
    double modularity = 0.0;
};

/// 2 I(Y;C) / (H(Y) + H(C)) with natural-log entropies. Two single-cluster
/// partitions give 1; otherwise a zero entropy on either side gives 0.
double nmi(const Partition& truth, const Partition& pred);

/// Adjusted Rand index from the pair-counting contingency table. Returns 1
/// when the expected and maximum index coincide (both partitions trivial and
/// identical in pair structure).
double ari(const Partition& truth, const Partition& pred);

/// Weighted modularity, per-community form sum_c [in_c / 2m - (deg_c / 2m)^2]
/// where in_c counts each internal edge twice. DataError for edgeless graphs.
double modularity(const Graph& g, const Partition& p);

} // namespace scd
