#include "scd/baselines.hpp"

#include <numeric>
#include <vector>

#include "scd/random.hpp"

namespace scd {

Partition label_propagation(const Graph& g, std::uint64_t seed, int max_iter) {
    const std::size_t n = g.num_nodes();
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> weight(n, 0.0);
    std::vector<std::uint32_t> touched, best;
    Rng rng(seed);

    for (int pass = 0; pass < max_iter; ++pass) {
        shuffle(order.begin(), order.end(), rng);
        bool changed = false;
        for (NodeId u : order) {
            auto nbrs = g.neighbors(u);
            if (nbrs.empty()) continue;
            touched.clear();
            for (const auto& nb : nbrs) {
                const auto l = labels[nb.node];
                if (weight[l] == 0.0) touched.push_back(l);
                weight[l] += nb.w;
            }
            double top = 0.0;
            for (auto l : touched) top = std::max(top, weight[l]);
            best.clear();
            for (auto l : touched)
                if (weight[l] == top) best.push_back(l);
            const bool keep = weight[labels[u]] == top;
            for (auto l : touched) weight[l] = 0.0;
            if (keep) continue;
            labels[u] = best[uniform_index(rng, best.size())];
            changed = true;
        }
        if (!changed) break;
    }
    return Partition::from_labels(std::span<const std::uint32_t>(labels));
}

} // namespace scd
