#include "scd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "scd/error.hpp"

namespace scd {

namespace {

void check_sizes(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("partition sizes differ: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
}

// Sparse contingency table keyed by (truth label, pred label).
std::map<std::pair<Label, Label>, double> contingency(const Partition& a, const Partition& b) {
    std::map<std::pair<Label, Label>, double> table;
    for (std::size_t i = 0; i < a.size(); ++i) table[{a[i], b[i]}] += 1.0;
    return table;
}

std::vector<double> marginal(const Partition& p) {
    std::vector<double> out(p.num_communities(), 0.0);
    for (auto l : p.labels()) out[l] += 1.0;
    return out;
}

// Summing in sorted order makes the result independent of label order.
double sorted_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
}

double entropy(const std::vector<double>& counts, double n) {
    std::vector<double> terms;
    for (double c : counts)
        if (c > 0.0) terms.push_back(-(c / n) * std::log(c / n));
    return sorted_sum(std::move(terms));
}

double choose2(double x) { return 0.5 * x * (x - 1.0); }

} // namespace

double nmi(const Partition& truth, const Partition& pred) {
    check_sizes(truth, pred);
    if (truth.size() == 0) throw std::invalid_argument("nmi: empty partitions");
    const double n = static_cast<double>(truth.size());
    const auto rows = marginal(truth);
    const auto cols = marginal(pred);
    const double hy = entropy(rows, n);
    const double hc = entropy(cols, n);
    if (hy == 0.0 || hc == 0.0) return (hy == 0.0 && hc == 0.0) ? 1.0 : 0.0;
    std::vector<double> terms;
    for (const auto& [key, c] : contingency(truth, pred))
        terms.push_back((c / n) * std::log((c * n) / (rows[key.first] * cols[key.second])));
    const double mi = sorted_sum(std::move(terms));
    return std::clamp(2.0 * mi / (hy + hc), 0.0, 1.0);
}

double ari(const Partition& truth, const Partition& pred) {
    check_sizes(truth, pred);
    if (truth.size() < 2) throw std::invalid_argument("ari: need at least two elements");
    const double n = static_cast<double>(truth.size());
    double index = 0.0;
    for (const auto& [key, c] : contingency(truth, pred)) index += choose2(c);
    double sum_rows = 0.0, sum_cols = 0.0;
    for (double c : marginal(truth)) sum_rows += choose2(c);
    for (double c : marginal(pred)) sum_cols += choose2(c);
    // (index - expected) / (max - expected) scaled by 2 * C(n, 2): every term
    // is an integer, so small cases are exact.
    const double pairs = choose2(n);
    const double num = 2.0 * (pairs * index - sum_rows * sum_cols);
    const double den = pairs * (sum_rows + sum_cols) - 2.0 * sum_rows * sum_cols;
    if (den == 0.0) return 1.0;
    return num / den;
}

double modularity(const Graph& g, const Partition& p) {
    if (p.size() != g.num_nodes()) throw std::invalid_argument("modularity: partition does not cover the graph");
    const double two_m = g.volume();
    if (g.num_edges() == 0 || !(two_m > 0.0)) throw DataError("modularity: graph has no edges");
    std::vector<double> internal(p.num_communities(), 0.0), degree(p.num_communities(), 0.0);
    for (const auto& e : g.edges())
        if (p[e.u] == p[e.v]) internal[p[e.u]] += 2.0 * e.w;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) degree[p[v]] += g.degree(static_cast<NodeId>(v));
    double q = 0.0;
    for (std::size_t c = 0; c < internal.size(); ++c) {
        const double frac = degree[c] / two_m;
        q += internal[c] / two_m - frac * frac;
    }
    return q;
}

} // namespace scd
