#include "scd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "scd/error.hpp"

namespace scd {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t* dropped_self_loops) {
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    std::size_t loops = 0;
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (!(e.w > 0.0)) throw std::invalid_argument("edge weight must be strictly positive");
        if (e.u == e.v) {
            ++loops;
            continue;
        }
        canon.push_back(e.u < e.v ? e : Edge{e.v, e.u, e.w});
    }
    // Stable so merged weights are summed in input order.
    std::stable_sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });

    Graph g;
    for (const auto& e : canon) {
        if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v)
            g.edges_.back().w += e.w;
        else
            g.edges_.push_back(e);
    }

    std::vector<std::size_t> counts(n + 1, 0);
    for (const auto& e : g.edges_) {
        ++counts[e.u + 1];
        ++counts[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) counts[i + 1] += counts[i];
    g.offsets_ = counts;
    g.adjacency_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (u, v): pushing (u -> v) then (v -> u) in this order
    // leaves every list sorted by neighbor id.
    for (const auto& e : g.edges_) g.adjacency_[cursor[e.v]++] = {e.u, e.w};
    for (const auto& e : g.edges_) g.adjacency_[cursor[e.u]++] = {e.v, e.w};
    for (NodeId u = 0; u < n; ++u) {
        auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
        auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
        std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }

    g.degrees_.assign(n, 0.0);
    for (NodeId u = 0; u < n; ++u)
        for (const auto& nb : g.neighbors(u)) g.degrees_[u] += nb.w;

    if (dropped_self_loops) *dropped_self_loops = loops;
    return g;
}

double Graph::volume() const {
    double total = 0.0;
    for (const auto& e : edges_) total += e.w;
    return 2.0 * total;
}

bool Graph::check_invariants() const {
    const std::size_t n = num_nodes();
    if (offsets_.size() != n + 1 && !(n == 0 && offsets_.size() <= 1)) return false;
    for (NodeId u = 0; u < n; ++u) {
        double deg = 0.0;
        auto nbrs = neighbors(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const auto& nb = nbrs[i];
            if (nb.node >= n || nb.node == u || !(nb.w > 0.0)) return false;
            if (i > 0 && nbrs[i - 1].node >= nb.node) return false;
            auto back = neighbors(nb.node);
            auto it = std::lower_bound(back.begin(), back.end(), u,
                                       [](const Neighbor& a, NodeId x) { return a.node < x; });
            if (it == back.end() || it->node != u || it->w != nb.w) return false;
            deg += nb.w;
        }
        if (deg != degrees_[u]) return false;
    }
    return true;
}

Graph Graph::induced_subgraph(std::span<const NodeId> nodes) const {
    std::vector<NodeId> remap(num_nodes(), static_cast<NodeId>(-1));
    for (std::size_t i = 0; i < nodes.size(); ++i) remap[nodes[i]] = static_cast<NodeId>(i);
    std::vector<Edge> sub;
    for (const auto& e : edges_) {
        if (remap[e.u] != static_cast<NodeId>(-1) && remap[e.v] != static_cast<NodeId>(-1))
            sub.push_back({remap[e.u], remap[e.v], e.w});
    }
    return from_edges(nodes.size(), sub);
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
    }
    return true;
}

NodeId NodeIdMap::intern(std::string_view token) {
    auto it = index_.find(std::string(token));
    if (it != index_.end()) return it->second;
    auto id = static_cast<NodeId>(tokens_.size());
    tokens_.emplace_back(token);
    index_.emplace(tokens_.back(), id);
    return id;
}

bool NodeIdMap::find(std::string_view token, NodeId& out) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return false;
    out = it->second;
    return true;
}

NodeIdMap NodeIdMap::identity(std::size_t n) {
    NodeIdMap m;
    for (std::size_t i = 0; i < n; ++i) m.intern(std::to_string(i));
    return m;
}

namespace {

// Splits on tabs and runs of spaces.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_double(std::string_view s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

LoadedGraph load_edge_list(std::istream& in, bool weighted) {
    LoadedGraph result;
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        auto fields = split_fields(view);
        if (fields.empty() || fields[0].front() == '#') continue;
        if (fields.size() > 3)
            throw DataError("edge list line " + std::to_string(lineno) + ": expected 'u v' or 'u v w'");
        if (fields.size() == 1) {  // isolated node
            result.ids.intern(fields[0]);
            continue;
        }
        double w = 1.0;
        if (fields.size() == 3 && weighted) {
            if (!parse_double(fields[2], w))
                throw DataError("edge list line " + std::to_string(lineno) + ": invalid weight '" +
                                std::string(fields[2]) + "'");
            if (!(w > 0.0) || !std::isfinite(w))
                throw DataError("edge list line " + std::to_string(lineno) + ": weight must be positive");
        }
        NodeId u = result.ids.intern(fields[0]);
        NodeId v = result.ids.intern(fields[1]);
        edges.push_back({u, v, w});
    }
    if (result.ids.size() == 0) throw DataError("edge list is empty");
    result.graph = Graph::from_edges(result.ids.size(), edges, &result.dropped_self_loops);
    return result;
}

LoadedGraph load_edge_list_file(const std::string& path, bool weighted) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list '" + path + "'");
    return load_edge_list(in, weighted);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_edge_list(const Graph& g, const NodeIdMap& ids, std::ostream& out) {
    for (const auto& e : g.edges())
        out << ids.token(e.u) << '\t' << ids.token(e.v) << '\t' << format_double(e.w) << '\n';
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        if (g.neighbor_count(u) == 0) out << ids.token(u) << '\n';
}

} // namespace scd
