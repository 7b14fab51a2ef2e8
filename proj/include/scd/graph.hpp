#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scd {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
    double w;
};

struct Neighbor {
    NodeId node;
    double w;
};

/**
 * Weighted undirected simple graph in CSR form.
 *
 * Node ids are dense in [0, num_nodes()). Every stored edge has u < v and a
 * strictly positive weight; the adjacency lists are symmetric and sorted by
 * neighbor id. Immutable after construction.
 */
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an arbitrary edge list. Self-loops are dropped and
    /// counted in @a dropped_self_loops; repeated pairs (in either direction)
    /// are merged by summing their weights. Throws std::invalid_argument on
    /// out-of-range ids or non-positive weights.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                            std::size_t* dropped_self_loops = nullptr);

    std::size_t num_nodes() const { return degrees_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    bool empty() const { return degrees_.empty(); }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const Neighbor> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }
    std::size_t neighbor_count(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

    /// Generalized degree: sum of incident edge weights.
    double degree(NodeId u) const { return degrees_[u]; }
    std::span<const double> degrees() const { return degrees_; }

    /// Sum over all ordered pairs of A_ij, i.e. twice the total edge weight.
    double volume() const;

    /// Full scan of the adjacency structure: symmetry, sortedness, no loops,
    /// positive weights, degree consistency.
    bool check_invariants() const;

    /// Induced subgraph on @a nodes (which must be sorted and unique); node i
    /// of the result corresponds to nodes[i].
    Graph induced_subgraph(std::span<const NodeId> nodes) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
    std::vector<double> degrees_;
};

bool operator==(const Graph& a, const Graph& b);

/// Maps external node tokens to dense ids in first-seen order.
class NodeIdMap {
public:
    NodeId intern(std::string_view token);
    /// Returns false when the token is unknown.
    bool find(std::string_view token, NodeId& out) const;
    const std::string& token(NodeId id) const { return tokens_[id]; }
    std::size_t size() const { return tokens_.size(); }

    /// Identity map "0", "1", ... for generated graphs.
    static NodeIdMap identity(std::size_t n);

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, NodeId> index_;
};

struct LoadedGraph {
    Graph graph;
    NodeIdMap ids;
    std::size_t dropped_self_loops = 0;
};

/// Parses a whitespace-separated edge list ("u v" or "u v w"; '#' comments).
/// A line holding a single token declares an isolated node.
/// With @a weighted false any third column is ignored and weights are 1.0.
/// Throws DataError naming the line for malformed input, non-positive
/// weights, or an input without any node.
LoadedGraph load_edge_list(std::istream& in, bool weighted);
LoadedGraph load_edge_list_file(const std::string& path, bool weighted);

/// Writes "u<TAB>v<TAB>w" per edge using the tokens of @a ids, weights with
/// shortest round-trip precision, followed by one line per isolated node.
void write_edge_list(const Graph& g, const NodeIdMap& ids, std::ostream& out);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

} // namespace scd
