#include "scd/lfr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "scd/error.hpp"
#include "scd/random.hpp"

namespace scd {

namespace {

constexpr int kMaxRetries = 20;
constexpr double kMixingTolerance = 0.05;

// Mean of the continuous power law x^-tau on [a, b].
double power_law_mean(double a, double b, double tau) {
    if (b <= a) return a;
    auto integral = [](double lo, double hi, double p) {  // int x^p dx
        if (std::abs(p + 1.0) < 1e-12) return std::log(hi / lo);
        return (std::pow(hi, p + 1.0) - std::pow(lo, p + 1.0)) / (p + 1.0);
    };
    return integral(a, b, 1.0 - tau) / integral(a, b, -tau);
}

double sample_power_law(Rng& rng, double a, double b, double tau) {
    const double u = uniform_real(rng);
    if (b <= a) return a;
    if (std::abs(tau - 1.0) < 1e-12) return a * std::pow(b / a, u);
    const double e = 1.0 - tau;
    const double lo = std::pow(a, e), hi = std::pow(b, e);
    return std::pow(lo + u * (hi - lo), 1.0 / e);
}

// Lower cutoff giving the requested mean; the mean grows with the cutoff.
double solve_min_degree(double avg, double max_deg, double tau) {
    double lo = 1.0, hi = max_deg;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (power_law_mean(mid, max_deg, tau) < avg) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

int internal_degree(int degree, double mixing) {
    return static_cast<int>(std::lround((1.0 - mixing) * degree));
}

struct Bounds {
    double min_deg;
    std::size_t min_comm;
    std::size_t max_comm;
};

Bounds bounds_for(const LfrParams& p) {
    Bounds b{};
    b.min_deg = solve_min_degree(p.avg_deg, p.max_deg, p.degree_exp);
    const std::size_t needed = static_cast<std::size_t>(internal_degree(p.max_deg, p.mixing)) + 1;
    b.max_comm = std::min<std::size_t>(p.n, std::max<std::size_t>(static_cast<std::size_t>(p.max_deg), needed));
    b.min_comm = std::min<std::size_t>(b.max_comm, std::max<std::size_t>(3, static_cast<std::size_t>(std::lround(b.min_deg))));
    return b;
}

std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Configuration-model matching of one stub pool. `allowed` rejects pairs the
// pool must not produce (beyond self-loops and duplicates). Returns the
// stubs left unmatched.
template <class Allowed>
std::vector<NodeId> match_stubs(std::vector<NodeId> stubs, Allowed allowed, std::unordered_set<std::uint64_t>& present,
                        std::vector<Edge>& out, Rng& rng) {
    const std::size_t budget = 100 * std::max<std::size_t>(stubs.size(), 1);
    std::size_t attempts = 0;
    std::vector<Edge> pool_edges;
    auto ok = [&](NodeId u, NodeId v) { return u != v && allowed(u, v) && !present.count(edge_key(u, v)); };

    int stale_rounds = 0;
    while (stubs.size() >= 2 && attempts < budget && stale_rounds < 3) {
        shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<NodeId> rest;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            ++attempts;
            const NodeId u = stubs[i], v = stubs[i + 1];
            if (ok(u, v)) {
                present.insert(edge_key(u, v));
                pool_edges.push_back({u, v, 1.0});
            } else {
                rest.push_back(u);
                rest.push_back(v);
            }
        }
        if (stubs.size() % 2) rest.push_back(stubs.back());
        stale_rounds = rest.size() == stubs.size() ? stale_rounds + 1 : 0;
        stubs.swap(rest);
    }

    // Edge swaps: pair a stuck stub pair (u, v) with an existing edge (x, y)
    // and rewire to (u, x), (v, y).
    while (stubs.size() >= 2 && attempts < budget && !pool_edges.empty()) {
        ++attempts;
        const std::size_t i = uniform_index(rng, stubs.size() / 2) * 2;
        const NodeId u = stubs[i], v = stubs[i + 1];
        const std::size_t e = uniform_index(rng, pool_edges.size());
        NodeId x = pool_edges[e].u, y = pool_edges[e].v;
        if (uniform_real(rng) < 0.5) std::swap(x, y);
        if (ok(u, x) && ok(v, y) && edge_key(u, x) != edge_key(v, y)) {
            present.erase(edge_key(x, y));
            present.insert(edge_key(u, x));
            present.insert(edge_key(v, y));
            pool_edges[e] = {u, x, 1.0};
            pool_edges.push_back({v, y, 1.0});
            stubs[i] = stubs[stubs.size() - 2];
            stubs[i + 1] = stubs[stubs.size() - 1];
            stubs.resize(stubs.size() - 2);
        } else if (ok(u, v)) {
            present.insert(edge_key(u, v));
            pool_edges.push_back({u, v, 1.0});
            stubs[i] = stubs[stubs.size() - 2];
            stubs[i + 1] = stubs[stubs.size() - 1];
            stubs.resize(stubs.size() - 2);
        } else if (stubs.size() >= 4) {
            // Re-pair: trade one stub of the stuck pair with a random other stub.
            std::swap(stubs[i + 1], stubs[uniform_index(rng, stubs.size())]);
        }
    }
    out.insert(out.end(), pool_edges.begin(), pool_edges.end());
    return stubs;
}

// Community sizes drawn in order of decreasing need: walking the internal
// degrees from largest to smallest, a new community opens whenever the open
// ones are full, with its size drawn from the power law restricted to sizes
// that can host the current node. Every node then has enough room in a
// community larger than its internal degree, so greedy placement cannot
// get stuck.
std::vector<std::size_t> draw_sizes(const LfrParams& p, const Bounds& b, const std::vector<int>& need_desc, Rng& rng) {
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> floor;  // smallest size each community may shrink to
    std::size_t room = 0;
    for (int need : need_desc) {
        if (room == 0) {
            const std::size_t lo = std::max(b.min_comm, static_cast<std::size_t>(need) + 1);
            if (lo > b.max_comm) return {};
            auto s = static_cast<std::size_t>(std::lround(
                sample_power_law(rng, static_cast<double>(lo), static_cast<double>(b.max_comm), p.comm_exp)));
            sizes.push_back(std::clamp(s, lo, b.max_comm));
            floor.push_back(lo);
            room = sizes.back();
        }
        --room;
    }
    sizes.back() -= room;
    if (sizes.back() < floor.back() && sizes.size() > 1) {
        // The last community holds the lowest-need nodes, which fit anywhere.
        std::size_t spare = sizes.back();
        sizes.pop_back();
        std::size_t cursor = 0, guard = 0;
        while (spare > 0 && guard < sizes.size()) {
            if (sizes[cursor] < b.max_comm) {
                ++sizes[cursor];
                --spare;
                guard = 0;
            } else {
                ++guard;
            }
            cursor = (cursor + 1) % sizes.size();
        }
        if (spare > 0) return {};
    }
    return sizes;
}

} // namespace

std::string LfrParams::infeasibility() const {
    if (n < 4) return "n must be at least 4";
    if (!(mixing >= 0.0 && mixing <= 1.0)) return "mixing must lie in [0, 1]";
    if (!(avg_deg >= 1.0)) return "avg_deg must be >= 1";
    if (max_deg < 1) return "max_deg must be >= 1";
    if (avg_deg > static_cast<double>(max_deg)) return "max_deg < avg_deg";
    if (static_cast<std::size_t>(max_deg) >= n) return "max_deg must be < n";
    if (!(degree_exp >= 0.0) || !(comm_exp >= 0.0)) return "exponents must be non-negative";
    if (power_law_mean(1.0, max_deg, degree_exp) > avg_deg)
        return "avg_deg too small for degree_exp and max_deg";
    const auto b = bounds_for(*this);
    if (static_cast<std::size_t>(internal_degree(max_deg, mixing)) + 1 > b.max_comm)
        return "no community can hold the largest internal degree";
    return {};
}

std::string LfrParams::describe() const {
    std::ostringstream os;
    os << "n=" << n << " avg_deg=" << avg_deg << " max_deg=" << max_deg << " mixing=" << mixing
       << " degree_exp=" << degree_exp << " comm_exp=" << comm_exp << " seed=" << seed;
    return os.str();
}

LfrGraph generate_lfr(const LfrParams& p) {
    if (auto why = p.infeasibility(); !why.empty()) throw DataError("lfr: infeasible parameters: " + why);
    const Bounds b = bounds_for(p);
    Rng rng(p.seed);

    std::vector<int> degree(p.n);
    for (auto& d : degree)
        d = std::clamp(static_cast<int>(std::lround(sample_power_law(rng, b.min_deg, p.max_deg, p.degree_exp))), 1,
                       p.max_deg);
    std::vector<int> k_in(p.n);
    for (std::size_t i = 0; i < p.n; ++i) k_in[i] = internal_degree(degree[i], p.mixing);

    // Nodes by decreasing internal degree get first pick of communities.
    std::vector<NodeId> order(p.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId c) { return k_in[a] > k_in[c]; });

    std::vector<int> need_desc(p.n);
    for (std::size_t i = 0; i < p.n; ++i) need_desc[i] = k_in[order[i]];

    std::vector<std::size_t> sizes;
    std::vector<std::uint32_t> community(p.n);
    bool placed = false;
    for (int attempt = 0; attempt < kMaxRetries && !placed; ++attempt) {
        sizes = draw_sizes(p, b, need_desc, rng);
        if (sizes.empty()) continue;
        std::vector<std::size_t> room = sizes;
        std::vector<std::uint32_t> candidates;
        placed = true;
        for (NodeId v : order) {
            candidates.clear();
            for (std::uint32_t c = 0; c < sizes.size(); ++c)
                if (room[c] > 0 && sizes[c] > static_cast<std::size_t>(k_in[v])) candidates.push_back(c);
            if (candidates.empty()) {
                placed = false;
                break;
            }
            const auto c = candidates[uniform_index(rng, candidates.size())];
            community[v] = c;
            --room[c];
        }
    }
    if (!placed)
        throw DataError("lfr: infeasible parameters: could not place nodes into communities large enough for their "
                        "internal degrees after " + std::to_string(kMaxRetries) + " attempts");

    std::vector<std::vector<NodeId>> members(sizes.size());
    for (NodeId v = 0; v < p.n; ++v) members[community[v]].push_back(v);
    // Each pool needs an even stub count: shift one stub from internal to
    // external, then drop one external stub if the external total is odd.
    for (auto& m : members) {
        long total = 0;
        for (auto v : m) total += k_in[v];
        if (total % 2) {
            auto it = std::max_element(m.begin(), m.end(), [&](NodeId a, NodeId c) { return k_in[a] < k_in[c]; });
            if (k_in[*it] > 0) {
                --k_in[*it];
                if (p.mixing == 0.0) --degree[*it];  // no external pool to absorb it
            } else {
                ++k_in[*it];
            }
        }
    }
    long external_total = 0;
    for (std::size_t v = 0; v < p.n; ++v) external_total += std::max(0, degree[v] - k_in[v]);
    if (external_total % 2) {
        auto it = std::max_element(order.begin(), order.end(),
                                   [&](NodeId a, NodeId c) { return degree[a] - k_in[a] < degree[c] - k_in[c]; });
        --degree[*it];
    }

    std::unordered_set<std::uint64_t> present;
    std::vector<Edge> edges;
    std::size_t stubs_total = 0;
    // Internal stubs that cannot be wired (non-graphical community degree
    // sequences) are moved to the external pool so node degrees survive.
    // With zero mixing they are dropped instead, keeping communities disjoint.
    std::vector<NodeId> outside;
    std::size_t internal_dropped = 0;
    for (const auto& m : members) {
        std::vector<NodeId> stubs;
        for (auto v : m) stubs.insert(stubs.end(), static_cast<std::size_t>(k_in[v]), v);
        stubs_total += stubs.size();
        auto left = match_stubs(std::move(stubs), [](NodeId, NodeId) { return true; }, present, edges, rng);
        if (p.mixing == 0.0) internal_dropped += left.size();
        else outside.insert(outside.end(), left.begin(), left.end());
    }
    for (NodeId v = 0; v < p.n; ++v) {
        const auto k_out = static_cast<std::size_t>(std::max(0, degree[v] - k_in[v]));
        outside.insert(outside.end(), k_out, v);
        stubs_total += k_out;
    }
    if (outside.size() % 2) outside.pop_back();
    const std::size_t dropped = internal_dropped +
        match_stubs(std::move(outside), [&](NodeId u, NodeId v) { return community[u] != community[v]; }, present,
                    edges, rng).size();
    if (static_cast<double>(dropped) > 0.05 * static_cast<double>(stubs_total))
        throw DataError("lfr: infeasible parameters: " + std::to_string(dropped) + " of " + std::to_string(stubs_total) +
                        " stubs could not be matched within the rejection budget");

    LfrGraph out;
    out.graph = Graph::from_edges(p.n, edges);
    out.truth = Partition::from_labels(std::span<const std::uint32_t>(community));
    out.dropped_stubs = dropped;
    std::size_t cross = 0;
    for (const auto& e : out.graph.edges()) cross += community[e.u] != community[e.v];
    out.empirical_mixing = out.graph.num_edges() ? static_cast<double>(cross) / static_cast<double>(out.graph.num_edges()) : 0.0;
    if (std::abs(out.empirical_mixing - p.mixing) > kMixingTolerance) {
        std::ostringstream os;
        os << "lfr: infeasible parameters: empirical mixing " << out.empirical_mixing << " misses target " << p.mixing
           << " by more than " << kMixingTolerance;
        throw DataError(os.str());
    }
    return out;
}

LfrGrid LfrGrid::benchmark() {
    LfrGrid g;
    g.nodes = {100, 500, 750, 1000, 2500, 5000, 10000};
    g.avg_deg = {15, 30, 50};
    g.max_deg = {10, 50, 100, 500};
    g.mixing = {0.1, 0.2, 0.5, 0.7, 0.9};
    return g;
}

std::vector<LfrParams> LfrGrid::expand() const {
    std::vector<LfrParams> out;
    for (auto n : nodes)
        for (auto a : avg_deg)
            for (auto m : max_deg)
                for (auto mu : mixing)
                    for (std::size_t r = 0; r < replicates; ++r) {
                        LfrParams p;
                        p.n = n;
                        p.avg_deg = a;
                        p.max_deg = m;
                        p.mixing = mu;
                        p.degree_exp = degree_exp;
                        p.comm_exp = comm_exp;
                        p.seed = derive_seed(seed, {out.size()});
                        out.push_back(p);
                    }
    return out;
}

void generate_grid(const LfrGrid& grid, const std::function<void(GridCell&&)>& sink) {
    const auto cells = grid.expand();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        GridCell cell;
        cell.index = i;
        cell.replicate = grid.replicates ? i % grid.replicates : 0;
        cell.params = cells[i];
        if (auto why = cell.params.infeasibility(); !why.empty()) {
            cell.skip_reason = why;
        } else {
            try {
                cell.network = generate_lfr(cell.params);
            } catch (const DataError& e) {
                cell.skip_reason = e.what();
            }
        }
        sink(std::move(cell));
    }
}

} // namespace scd
