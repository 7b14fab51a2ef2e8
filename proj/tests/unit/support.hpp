// Graph builders and independent reference implementations for the unit tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "scd/embedding.hpp"
#include "scd/graph.hpp"
#include "scd/random.hpp"

namespace scd::test {

inline Graph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
    return Graph::from_edges(n, edges);
}

inline Graph two_triangles() { return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

inline Graph complete(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u < n; ++u) e.emplace_back(u, static_cast<NodeId>((u + 1) % n));
    return make_graph(n, e);
}

/// G(n, p) with optional uniform weights in (0.5, 2.5).
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed, bool weighted = false) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (uniform_real(rng) < p) edges.push_back({u, v, weighted ? 0.5 + 2.0 * uniform_real(rng) : 1.0});
    return Graph::from_edges(n, edges);
}

/// Random graph made of `blocks` dense groups joined by sparse random edges.
inline Graph planted_graph(std::size_t n, std::size_t blocks, double p_in, double p_out, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) {
            double p = (u % blocks == v % blocks) ? p_in : p_out;
            if (uniform_real(rng) < p) edges.push_back({u, v, 1.0});
        }
    return Graph::from_edges(n, edges);
}

inline Eigen::MatrixXd dense_adjacency(const Graph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.num_nodes(), g.num_nodes());
    for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = e.w;
    return a;
}

/// Cyclic Jacobi eigensolver for symmetric matrices. Returns eigenvalues in
/// descending order with eigenvectors as matching columns.
inline std::pair<Eigen::VectorXd, Eigen::MatrixXd> jacobi_eigen(Eigen::MatrixXd a) {
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-26 * std::max(1.0, a.squaredNorm())) break;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }
    std::vector<Eigen::Index> order(n);
    for (Eigen::Index i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x) > a(y, y); });
    Eigen::VectorXd values(n);
    Eigen::MatrixXd vectors(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        values(i) = a(order[i], order[i]);
        vectors.col(i) = v.col(order[i]);
    }
    return {values, vectors};
}

/// sum_{i<d} max(lambda_i, 0) u_i u_i^T from the Jacobi oracle.
inline Eigen::MatrixXd truncated_psd(const Eigen::MatrixXd& m, int d) {
    auto [values, vectors] = jacobi_eigen(m);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    for (int i = 0; i < d; ++i)
        if (values(i) > 0) out += values(i) * vectors.col(i) * vectors.col(i).transpose();
    return out;
}

/// NetMF target from explicit dense matrix powers.
inline Eigen::MatrixXd dense_netmf(const Graph& g, int window, int negative) {
    const auto n = static_cast<Eigen::Index>(g.num_nodes());
    Eigen::MatrixXd a = dense_adjacency(g);
    Eigen::VectorXd deg = a.rowwise().sum();
    double vol = deg.sum();
    Eigen::MatrixXd dinv = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        if (deg(i) > 0) dinv(i, i) = 1.0 / deg(i);
    Eigen::MatrixXd p = dinv * a;
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (int r = 1; r <= window; ++r) {
        power = power * p;
        sum += power;
    }
    Eigen::MatrixXd x = vol / (window * static_cast<double>(negative)) * sum * dinv;
    return x.unaryExpr([](double v) { return std::log(std::max(1.0, v)); });
}

/// PPR from a dense solve of (I - alpha P~^T) x = (1 - alpha) e_u, where rows
/// of dangling nodes in P~ send everything back to u.
inline Eigen::VectorXd dense_ppr(const Graph& g, NodeId u, double alpha) {
    const auto n = static_cast<Eigen::Index>(g.num_nodes());
    Eigen::MatrixXd a = dense_adjacency(g);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double d = a.row(i).sum();
        if (d > 0) p.row(i) = a.row(i) / d;
        else p(i, u) = 1.0;
    }
    Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - alpha * p.transpose();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(u) = 1.0 - alpha;
    return lhs.fullPivLu().solve(rhs);
}

/// Silhouette from a plain double loop over point pairs.
inline std::vector<double> naive_silhouette(const RowMatrix& x, const std::vector<std::uint32_t>& labels) {
    const std::size_t n = labels.size();
    auto dist = [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (Eigen::Index c = 0; c < x.cols(); ++c) s += (x(i, c) - x(j, c)) * (x(i, c) - x(j, c));
        return std::sqrt(s);
    };
    std::uint32_t k = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> sum(k, 0.0);
        std::vector<std::size_t> cnt(k, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            sum[labels[j]] += dist(i, j);
            ++cnt[labels[j]];
        }
        if (cnt[labels[i]] == 0) {
            out[i] = 0.0;
            continue;
        }
        double a = sum[labels[i]] / cnt[labels[i]];
        double b = INFINITY;
        for (std::uint32_t c = 0; c < k; ++c)
            if (c != labels[i] && cnt[c] > 0) b = std::min(b, sum[c] / cnt[c]);
        double m = std::max(a, b);
        out[i] = m == 0.0 ? 0.0 : (b - a) / m;
    }
    return out;
}

/// Q = 1/2m sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
inline double naive_modularity(const Graph& g, std::span<const std::uint32_t> labels) {
    Eigen::MatrixXd a = dense_adjacency(g);
    Eigen::VectorXd k = a.rowwise().sum();
    double two_m = k.sum();
    double q = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (labels[i] == labels[j]) q += a(i, j) - k(i) * k(j) / two_m;
    return q / two_m;
}

/// Calls @a visit with every set partition of {0..n-1} as a restricted growth
/// string whose block count lies in [min_blocks, max_blocks].
inline void for_each_partition(std::size_t n, std::size_t min_blocks, std::size_t max_blocks,
                               const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    std::vector<std::uint32_t> labels(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t used) {
        if (i == n) {
            if (used >= min_blocks && used <= max_blocks) visit(labels);
            return;
        }
        for (std::uint32_t c = 0; c <= used && c < max_blocks; ++c) {
            labels[i] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    if (n == 0) return;
    labels[0] = 0;
    rec(1, 1);
}

inline RowMatrix random_points(std::size_t n, std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    RowMatrix x(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) x(i, j) = 2.0 * uniform_real(rng) - 1.0;
    return x;
}

inline std::vector<std::uint32_t> random_labels(std::size_t n, std::uint32_t k, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint32_t> labels(n);
    for (auto& l : labels) l = static_cast<std::uint32_t>(uniform_index(rng, k));
    return labels;
}

} // namespace scd::test
