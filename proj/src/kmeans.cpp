#include "scd/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "scd/error.hpp"

namespace scd {

namespace {

double squared_distance(const double* a, const double* b, Eigen::Index d) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
        const double t = a[j] - b[j];
        s += t * t;
    }
    return s;
}

struct RowHash {
    const RowMatrix* m;
    std::size_t operator()(Eigen::Index i) const {
        std::uint64_t h = 1469598103934665603ULL;
        const auto* bytes = reinterpret_cast<const unsigned char*>(m->row(i).data());
        for (std::size_t b = 0; b < sizeof(double) * static_cast<std::size_t>(m->cols()); ++b) {
            h ^= bytes[b];
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct RowEq {
    const RowMatrix* m;
    bool operator()(Eigen::Index a, Eigen::Index b) const {
        return std::memcmp(m->row(a).data(), m->row(b).data(), sizeof(double) * static_cast<std::size_t>(m->cols())) == 0;
    }
};

std::uint32_t nearest(const double* row, const RowMatrix& centers, double& best) {
    best = std::numeric_limits<double>::infinity();
    std::uint32_t arg = 0;
    for (Eigen::Index c = 0; c < centers.rows(); ++c) {
        const double d = squared_distance(row, centers.row(c).data(), centers.cols());
        if (d < best) {
            best = d;
            arg = static_cast<std::uint32_t>(c);
        }
    }
    return arg;
}

void full_assignment(const RowMatrix& x, const RowMatrix& centers, std::vector<std::uint32_t>& labels,
                     std::vector<double>& dist) {
    const Eigen::Index n = x.rows();
    labels.resize(static_cast<std::size_t>(n));
    dist.resize(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (Eigen::Index i = 0; i < n; ++i) labels[i] = nearest(x.row(i).data(), centers, dist[i]);
}

// Moves the centers of empty clusters onto the points farthest from their
// own centers. Returns true when anything changed.
bool reseed_empty(const RowMatrix& x, RowMatrix& centers, const std::vector<std::uint32_t>& labels,
                  const std::vector<double>& dist, std::vector<double>& counts) {
    const auto k = static_cast<std::size_t>(centers.rows());
    std::vector<std::size_t> members(k, 0);
    for (auto l : labels) ++members[l];
    std::vector<std::size_t> empty;
    for (std::size_t c = 0; c < k; ++c)
        if (members[c] == 0) empty.push_back(c);
    if (empty.empty()) return false;
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] > dist[b]; });
    bool changed = false;
    std::size_t next = 0;
    for (auto c : empty) {
        // Skip points that sit exactly on their center; they cannot seed anything new.
        if (next >= order.size() || dist[order[next]] <= 0.0) break;
        centers.row(static_cast<Eigen::Index>(c)) = x.row(static_cast<Eigen::Index>(order[next++]));
        counts[c] = 1.0;
        changed = true;
    }
    return changed;
}

ClusterModel run_once(const RowMatrix& x, std::size_t k, std::uint64_t seed, const KMeansOptions& options) {
    const auto n = static_cast<std::size_t>(x.rows());
    Rng rng(seed);
    ClusterModel model;
    model.k = k;
    model.seed = seed;
    model.centers = kmeanspp_init(x, k, rng);

    const std::size_t batch = options.batch_size == 0 ? std::min<std::size_t>(1024, n)
                                                      : std::min(options.batch_size, n);
    std::vector<double> counts(k, 0.0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> indices(batch);
    std::vector<std::uint32_t> batch_labels(batch);
    std::vector<double> batch_dist(batch);
    std::vector<std::uint32_t> labels;
    std::vector<double> dist;
    std::vector<std::uint32_t> previous_labels;

    double best_inertia = std::numeric_limits<double>::infinity();
    int stale = 0;
    std::size_t seen_in_epoch = 0;
    for (int it = 0; it < options.max_iters; ++it) {
        if (batch == n) {
            std::iota(indices.begin(), indices.end(), 0);
        } else {
            // Partial Fisher-Yates: a fresh sample without replacement.
            for (std::size_t i = 0; i < batch; ++i) {
                std::size_t j = i + uniform_index(rng, n - i);
                std::swap(perm[i], perm[j]);
                indices[i] = perm[i];
            }
        }
#pragma omp parallel for schedule(static)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(batch); ++b)
            batch_labels[b] = nearest(x.row(static_cast<Eigen::Index>(indices[b])).data(), model.centers, batch_dist[b]);
        double inertia = 0.0;
        for (std::size_t b = 0; b < batch; ++b) inertia += batch_dist[b];

        for (std::size_t b = 0; b < batch; ++b) {
            const auto c = batch_labels[b];
            counts[c] += 1.0;
            const double eta = 1.0 / counts[c];
            auto center = model.centers.row(c);
            center = (1.0 - eta) * center + eta * x.row(static_cast<Eigen::Index>(indices[b]));
        }

        seen_in_epoch += batch;
        if (seen_in_epoch >= n) {
            seen_in_epoch = 0;
            full_assignment(x, model.centers, labels, dist);
            if (reseed_empty(x, model.centers, labels, dist, counts)) {
                best_inertia = std::numeric_limits<double>::infinity();
                stale = 0;
                continue;
            }
        }

        if (batch == n) {
            // Full batches: an assignment identical to the previous one is a fixed point.
            if (batch_labels == previous_labels) break;
            previous_labels = batch_labels;
        }
        if (inertia < best_inertia * (1.0 - options.tol) || best_inertia == std::numeric_limits<double>::infinity()) {
            best_inertia = inertia;
            stale = 0;
        } else if (++stale >= options.max_no_improvement) {
            break;
        }
    }

    full_assignment(x, model.centers, labels, dist);
    for (int round = 0; round < 3 && reseed_empty(x, model.centers, labels, dist, counts); ++round)
        full_assignment(x, model.centers, labels, dist);
    model.labels = std::move(labels);
    model.inertia = 0.0;
    for (double v : dist) model.inertia += v;
    return model;
}

} // namespace

std::size_t count_distinct_rows(const RowMatrix& x) {
    std::unordered_set<Eigen::Index, RowHash, RowEq> set(16, RowHash{&x}, RowEq{&x});
    for (Eigen::Index i = 0; i < x.rows(); ++i) set.insert(i);
    return set.size();
}

namespace {

// Row drawn with probability proportional to d2. Falls back to the last
// positive-weight row on rounding, or to any row not yet used as a center
// when every weight underflowed to zero.
std::size_t sample_d2(const RowMatrix& x, const RowMatrix& centers, std::size_t chosen,
                      const std::vector<double>& d2, double total, Rng& rng) {
    const std::size_t n = d2.size();
    if (total > 0.0) {
        const double target = uniform_real(rng) * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += d2[i];
            if (d2[i] > 0.0 && acc > target) return i;
        }
        for (std::size_t i = n; i-- > 0;)
            if (d2[i] > 0.0) return i;
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool used = false;
        for (std::size_t j = 0; j < chosen && !used; ++j)
            used = x.row(static_cast<Eigen::Index>(i)) == centers.row(static_cast<Eigen::Index>(j));
        if (!used) return i;
    }
    return 0;
}

} // namespace

RowMatrix kmeanspp_init(const RowMatrix& x, std::size_t k, Rng& rng) {
    const auto n = static_cast<std::size_t>(x.rows());
    if (k == 0) throw std::invalid_argument("kmeanspp_init: k must be >= 1");
    const std::size_t distinct = count_distinct_rows(x);
    if (k > distinct)
        throw DataError("kmeanspp_init: k = " + std::to_string(k) + " exceeds the " + std::to_string(distinct) +
                        " distinct rows");
    RowMatrix centers(static_cast<Eigen::Index>(k), x.cols());
    std::size_t first = uniform_index(rng, n);
    centers.row(0) = x.row(static_cast<Eigen::Index>(first));
    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i)
        d2[i] = squared_distance(x.row(static_cast<Eigen::Index>(i)).data(), centers.row(0).data(), x.cols());

    // Greedy variant: several D^2 candidates per step, keep the one that
    // leaves the smallest potential.
    const int trials = 2 + static_cast<int>(std::log(static_cast<double>(k)));
    std::vector<double> trial_d2(n), best_d2(n);
    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (double v : d2) total += v;
        std::size_t best = n;
        double best_potential = std::numeric_limits<double>::infinity();
        for (int t = 0; t < trials; ++t) {
            std::size_t cand = sample_d2(x, centers, c, d2, total, rng);
            double potential = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                trial_d2[i] = std::min(d2[i], squared_distance(x.row(static_cast<Eigen::Index>(i)).data(),
                                                               x.row(static_cast<Eigen::Index>(cand)).data(), x.cols()));
                potential += trial_d2[i];
            }
            if (potential < best_potential) {
                best_potential = potential;
                best = cand;
                best_d2.swap(trial_d2);
            }
        }
        centers.row(static_cast<Eigen::Index>(c)) = x.row(static_cast<Eigen::Index>(best));
        d2.swap(best_d2);
    }
    return centers;
}

std::vector<std::uint32_t> assign(const RowMatrix& x, const RowMatrix& centers) {
    if (centers.rows() == 0) throw std::invalid_argument("assign: no centers");
    if (centers.cols() != x.cols())
        throw std::invalid_argument("assign: dimension mismatch (" + std::to_string(x.cols()) + " vs " +
                                    std::to_string(centers.cols()) + ")");
    std::vector<std::uint32_t> labels;
    std::vector<double> dist;
    full_assignment(x, centers, labels, dist);
    return labels;
}

ClusterModel minibatch_kmeans(const RowMatrix& x, std::size_t k, std::uint64_t seed, const KMeansOptions& options) {
    if (x.rows() == 0) throw DataError("minibatch_kmeans: empty input");
    if (k < 1 || k > static_cast<std::size_t>(x.rows()))
        throw std::invalid_argument("minibatch_kmeans: k must lie in [1, n_rows]");
    if (options.max_iters < 1 || options.n_init < 1 || options.max_no_improvement < 1)
        throw std::invalid_argument("minibatch_kmeans: iteration counts must be >= 1");
    ClusterModel best;
    for (int r = 0; r < options.n_init; ++r) {
        auto model = run_once(x, k, derive_seed(seed, {static_cast<std::uint64_t>(r)}), options);
        if (r == 0 || model.inertia < best.inertia) best = std::move(model);
    }
    best.seed = seed;
    return best;
}

} // namespace scd
