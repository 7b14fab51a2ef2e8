#include "scd/ppr.hpp"

#include <cmath>
#include <stdexcept>

#include "scd/error.hpp"

namespace scd {

void PprParams::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha: must lie in (0, 1)");
    if (!(tol > 0.0)) throw ConfigError("tol: must be > 0");
    if (max_iter < 1) throw ConfigError("max_iter: must be >= 1");
}

namespace {

std::vector<NodeId> component_of(const Graph& g, NodeId source, std::vector<NodeId>& local) {
    std::vector<NodeId> nodes{source};
    local[source] = 0;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        for (const auto& nb : g.neighbors(nodes[head])) {
            if (local[nb.node] == static_cast<NodeId>(-1)) {
                local[nb.node] = static_cast<NodeId>(nodes.size());
                nodes.push_back(nb.node);
            }
        }
    }
    return nodes;
}

// Power iteration over one connected component. `nodes` lists the component,
// `local` maps global ids to positions in `nodes`.
PprVector iterate(const Graph& g, const std::vector<NodeId>& nodes, const std::vector<NodeId>& local,
                  NodeId source, const PprParams& params) {
    const std::size_t m = nodes.size();
    std::vector<double> x(m, 0.0), y(m);
    const std::size_t s = local[source];
    x[s] = 1.0;
    PprVector out;
    for (int it = 1; it <= params.max_iter; ++it) {
        std::fill(y.begin(), y.end(), 0.0);
        double restart = 1.0 - params.alpha;
        for (std::size_t a = 0; a < m; ++a) {
            const NodeId j = nodes[a];
            const double deg = g.degree(j);
            if (deg > 0.0) {
                const double share = params.alpha * x[a] / deg;
                for (const auto& nb : g.neighbors(j)) y[local[nb.node]] += share * nb.w;
            } else {
                restart += params.alpha * x[a];
            }
        }
        y[s] += restart;
        double change = 0.0;
        for (std::size_t a = 0; a < m; ++a) change += std::abs(y[a] - x[a]);
        x.swap(y);
        out.iterations = it;
        if (change < params.tol) {
            out.converged = true;
            break;
        }
    }
    out.values.assign(g.num_nodes(), 0.0);
    for (std::size_t a = 0; a < m; ++a) out.values[nodes[a]] = x[a];
    return out;
}

} // namespace

PprVector ppr_vector(const Graph& g, NodeId source, const PprParams& params) {
    params.validate();
    if (g.empty()) throw DataError("ppr_vector: empty graph");
    if (source >= g.num_nodes()) throw std::invalid_argument("ppr_vector: source out of range");
    std::vector<NodeId> local(g.num_nodes(), static_cast<NodeId>(-1));
    auto nodes = component_of(g, source, local);
    return iterate(g, nodes, local, source, params);
}

PprEmbedding ppr_embed(const Graph& g, const EmbeddingParams& params, const PprParams& ppr) {
    params.validate();
    ppr.validate();
    if (g.empty()) throw DataError("ppr_embed: empty graph");
    const std::size_t n = g.num_nodes();

    // Components once; every source reuses its component's node list.
    std::vector<NodeId> local(n, static_cast<NodeId>(-1));
    std::vector<std::uint32_t> comp_of(n, 0);
    std::vector<std::vector<NodeId>> comps;
    for (NodeId u = 0; u < n; ++u) {
        if (local[u] != static_cast<NodeId>(-1)) continue;
        comps.push_back(component_of(g, u, local));
        for (auto v : comps.back()) comp_of[v] = static_cast<std::uint32_t>(comps.size() - 1);
    }

    PprEmbedding out;
    out.embedding.params = params;
    out.embedding.params.backend = Backend::ppr;
    out.embedding.effective_dimension = static_cast<int>(n);
    out.embedding.matrix = RowMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    std::vector<char> converged(n, 1);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(n); ++u) {
        auto r = iterate(g, comps[comp_of[u]], local, static_cast<NodeId>(u), ppr);
        converged[u] = r.converged ? 1 : 0;
        for (std::size_t v = 0; v < n; ++v) out.embedding.matrix(u, static_cast<Eigen::Index>(v)) = r.values[v];
    }
    for (NodeId u = 0; u < n; ++u) {
        if (!converged[u]) out.unconverged.push_back(u);
        if (g.neighbor_count(u) == 0) ++out.embedding.isolated_rows;
    }
    return out;
}

} // namespace scd
