#include "scd/silhouette.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "scd/error.hpp"
#include "scd/partition.hpp"
#include "scd/random.hpp"

namespace scd {

namespace {

double distance(const RowMatrix& x, std::size_t i, std::size_t j) {
    const double* a = x.row(static_cast<Eigen::Index>(i)).data();
    const double* b = x.row(static_cast<Eigen::Index>(j)).data();
    double s = 0.0;
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const double t = a[c] - b[c];
        s += t * t;
    }
    return std::sqrt(s);
}

double score(double a, double b) {
    const double m = std::max(a, b);
    if (m <= 0.0) return 0.0;
    return std::clamp((b - a) / m, -1.0, 1.0);
}

struct Compacted {
    std::vector<std::uint32_t> labels;
    std::vector<std::size_t> sizes;
};

Compacted compact(std::span<const std::uint32_t> labels, std::size_t n) {
    if (labels.size() != n) throw std::invalid_argument("silhouette: label count does not match row count");
    auto p = Partition::from_labels(labels);
    if (p.num_communities() < 2) throw DataError("silhouette: at least two clusters are required");
    return {{p.labels().begin(), p.labels().end()}, p.community_sizes()};
}

double point_from_sums(std::uint32_t own, const std::vector<double>& sums, const std::vector<std::size_t>& sizes) {
    if (sizes[own] <= 1) return 0.0;
    const double a = sums[own] / static_cast<double>(sizes[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < sizes.size(); ++c)
        if (c != own && sizes[c] > 0) b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
    return score(a, b);
}

} // namespace

SilhouetteEvaluator::SilhouetteEvaluator(const RowMatrix& x, SilhouetteOptions options)
    : x_(x), options_(options) {
    const std::size_t n = size();
    if (n <= options_.cache_limit) {
        distances_.assign(n * n, 0.0);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
                const double d = distance(x_, static_cast<std::size_t>(i), j);
                distances_[static_cast<std::size_t>(i) * n + j] = d;
                distances_[j * n + static_cast<std::size_t>(i)] = d;
            }
    }
}

void SilhouetteEvaluator::distance_row(std::size_t i, std::vector<double>& out) const {
    const std::size_t n = size();
    out.resize(n);
    if (cached()) {
        std::copy_n(distances_.begin() + static_cast<std::ptrdiff_t>(i * n), n, out.begin());
        return;
    }
    for (std::size_t j = 0; j < n; ++j) out[j] = j == i ? 0.0 : distance(x_, i, j);
}

SilhouetteResult SilhouetteEvaluator::evaluate(std::span<const std::uint32_t> labels) const {
    const std::size_t n = size();
    auto [compact_labels, sizes] = compact(labels, n);
    SilhouetteResult result;
    result.k = sizes.size();

    std::vector<std::size_t> points;
    if (options_.sample_size > 0 && options_.sample_size < n) {
        result.approximate = true;
        points.resize(n);
        std::iota(points.begin(), points.end(), 0);
        Rng rng(options_.sample_seed);
        for (std::size_t i = 0; i < options_.sample_size; ++i)
            std::swap(points[i], points[i + uniform_index(rng, n - i)]);
        points.resize(options_.sample_size);
        std::sort(points.begin(), points.end());
        result.indices = points;
    } else {
        points.resize(n);
        std::iota(points.begin(), points.end(), 0);
    }

    result.per_point.assign(points.size(), 0.0);
    const std::size_t k = sizes.size();
#pragma omp parallel
    {
        std::vector<double> row;
        std::vector<double> sums(k);
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t p = 0; p < static_cast<std::int64_t>(points.size()); ++p) {
            const std::size_t i = points[static_cast<std::size_t>(p)];
            distance_row(i, row);
            std::fill(sums.begin(), sums.end(), 0.0);
            for (std::size_t j = 0; j < n; ++j) sums[compact_labels[j]] += row[j];
            result.per_point[static_cast<std::size_t>(p)] = point_from_sums(compact_labels[i], sums, sizes);
        }
    }
    double total = 0.0;
    for (double s : result.per_point) total += s;
    result.global = total / static_cast<double>(result.per_point.size());
    return result;
}

double silhouette_point(std::size_t i, const RowMatrix& x, std::span<const std::uint32_t> labels) {
    const std::size_t n = static_cast<std::size_t>(x.rows());
    if (i >= n) throw std::invalid_argument("silhouette_point: index out of range");
    auto [compact_labels, sizes] = compact(labels, n);
    std::vector<double> sums(sizes.size(), 0.0);
    for (std::size_t j = 0; j < n; ++j)
        if (j != i) sums[compact_labels[j]] += distance(x, i, j);
    return point_from_sums(compact_labels[i], sums, sizes);
}

double silhouette_global(const RowMatrix& x, std::span<const std::uint32_t> labels) {
    SilhouetteEvaluator eval(x, {.cache_limit = 0});
    return eval.global(labels);
}

NormalizedScores normalize_scores(std::span<const std::pair<std::size_t, double>> scores) {
    NormalizedScores out;
    if (scores.empty()) return out;
    double lo = scores[0].second, hi = scores[0].second;
    for (const auto& [k, s] : scores) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    out.degenerate = !(hi > lo);
    for (const auto& [k, s] : scores) {
        double v = out.degenerate ? 0.0 : (s - lo) / (hi - lo);
        // Only the maxima may map to 1 so the argmax survives rounding.
        if (s < hi && v >= 1.0) v = std::nextafter(1.0, 0.0);
        out.scores.emplace_back(k, v);
    }
    return out;
}

} // namespace scd
