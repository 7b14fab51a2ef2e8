#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "scd/baselines.hpp"
#include "scd/error.hpp"
#include "scd/random.hpp"

namespace scd {

namespace {

// Weighted graph with explicit node strengths; aggregated levels carry the
// internal weight of merged communities only through `strength`.
struct Level {
    std::vector<std::vector<Neighbor>> adj;  // no self entries
    std::vector<double> strength;
};

Level from_graph(const Graph& g) {
    Level lv;
    lv.adj.resize(g.num_nodes());
    lv.strength.assign(g.degrees().begin(), g.degrees().end());
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        auto nbrs = g.neighbors(u);
        lv.adj[u].assign(nbrs.begin(), nbrs.end());
    }
    return lv;
}

// Local moving on one level. Returns true when any node changed community.
bool local_moving(const Level& lv, std::vector<std::uint32_t>& comm, double two_m, Rng& rng, int max_passes) {
    const std::size_t n = lv.adj.size();
    std::vector<double> total(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) total[comm[v]] += lv.strength[v];
    std::vector<double> link(n, 0.0);
    std::vector<std::uint32_t> touched;
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);

    bool any = false;
    for (int pass = 0; pass < max_passes; ++pass) {
        shuffle(order.begin(), order.end(), rng);
        bool moved = false;
        for (NodeId v : order) {
            const std::uint32_t own = comm[v];
            const double k = lv.strength[v];
            touched.clear();
            touched.push_back(own);
            link[own] = 0.0;
            for (const auto& nb : lv.adj[v]) {
                const auto c = comm[nb.node];
                if (link[c] == 0.0 && c != own) touched.push_back(c);
                link[c] += nb.w;
            }
            total[own] -= k;
            // Gain of inserting v into c, up to the common factor 1/m.
            auto gain = [&](std::uint32_t c) { return link[c] - total[c] * k / two_m; };
            std::uint32_t best = own;
            double best_gain = gain(own);
            for (auto c : touched) {
                const double g = gain(c);
                if (g > best_gain + 1e-12 * (std::abs(best_gain) + k)) {
                    best_gain = g;
                    best = c;
                }
            }
            total[best] += k;
            for (auto c : touched) link[c] = 0.0;
            if (best != own) {
                comm[v] = best;
                moved = true;
                any = true;
            }
        }
        if (!moved) break;
    }
    return any;
}

std::vector<std::uint32_t> compact(std::vector<std::uint32_t>& comm) {
    auto p = Partition::from_labels(std::span<const std::uint32_t>(comm));
    std::vector<std::uint32_t> out(p.labels().begin(), p.labels().end());
    comm = out;
    return out;
}

Level aggregate(const Level& lv, const std::vector<std::uint32_t>& comm, std::size_t count) {
    Level next;
    next.adj.resize(count);
    next.strength.assign(count, 0.0);
    std::vector<double> acc(count, 0.0);
    std::vector<std::uint32_t> touched;
    std::vector<std::vector<NodeId>> members(count);
    for (std::size_t v = 0; v < lv.adj.size(); ++v) {
        members[comm[v]].push_back(static_cast<NodeId>(v));
        next.strength[comm[v]] += lv.strength[v];
    }
    for (std::uint32_t c = 0; c < count; ++c) {
        touched.clear();
        for (auto v : members[c])
            for (const auto& nb : lv.adj[v]) {
                const auto d = comm[nb.node];
                if (d == c) continue;
                if (acc[d] == 0.0) touched.push_back(d);
                acc[d] += nb.w;
            }
        std::sort(touched.begin(), touched.end());
        for (auto d : touched) {
            next.adj[c].push_back({d, acc[d]});
            acc[d] = 0.0;
        }
    }
    return next;
}

} // namespace

Partition louvain(const Graph& g, const LouvainOptions& options) {
    if (g.num_edges() == 0) throw DataError("louvain: graph has no edges");
    const double two_m = g.volume();
    Rng rng(options.seed);

    const Level base = from_graph(g);
    std::vector<std::uint32_t> membership(g.num_nodes());
    std::iota(membership.begin(), membership.end(), 0);

    Level lv = base;
    for (int level = 0; level < options.max_levels; ++level) {
        std::vector<std::uint32_t> comm(lv.adj.size());
        std::iota(comm.begin(), comm.end(), 0);
        if (!local_moving(lv, comm, two_m, rng, options.max_passes)) break;
        compact(comm);
        std::size_t count = 0;
        for (auto c : comm) count = std::max<std::size_t>(count, c + 1);
        for (auto& m : membership) m = comm[m];
        if (count == lv.adj.size()) break;
        lv = aggregate(lv, comm, count);
    }

    local_moving(base, membership, two_m, rng, options.max_passes);
    return Partition::from_labels(std::span<const std::uint32_t>(membership));
}

} // namespace scd
