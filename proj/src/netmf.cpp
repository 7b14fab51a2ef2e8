#include "scd/netmf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "scd/error.hpp"
#include "scd/random.hpp"

namespace scd {

RowMatrix netmf_target(const Graph& g, int window, int negative, const NetmfOptions& options) {
    if (window < 1) throw std::invalid_argument("netmf_target: window must be >= 1");
    if (negative < 1) throw std::invalid_argument("netmf_target: negative must be >= 1");
    const auto n = static_cast<Eigen::Index>(g.num_nodes());
    if (g.num_nodes() > options.dense_limit)
        throw DataError("netmf_target: " + std::to_string(g.num_nodes()) + " nodes exceed the dense limit of " +
                        std::to_string(options.dense_limit) + "; use a smaller graph or the ppr backend");

    std::vector<double> inv_deg(g.num_nodes(), 0.0);
    for (std::size_t i = 0; i < g.num_nodes(); ++i)
        if (g.degree(static_cast<NodeId>(i)) > 0.0) inv_deg[i] = 1.0 / g.degree(static_cast<NodeId>(i));

    // power = (D^-1 A)^r, starting at r = 1.
    RowMatrix power = RowMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (const auto& nb : g.neighbors(static_cast<NodeId>(i))) power(i, nb.node) = nb.w * inv_deg[i];
    RowMatrix sum = power;
    RowMatrix next(n, n);
    for (int r = 2; r <= window; ++r) {
#pragma omp parallel for schedule(static)
        for (Eigen::Index i = 0; i < n; ++i) {
            auto row = next.row(i);
            row.setZero();
            for (const auto& nb : g.neighbors(static_cast<NodeId>(i)))
                row.noalias() += (nb.w * inv_deg[i]) * power.row(nb.node);
        }
        power.swap(next);
        sum += power;
    }

    const double scale = g.volume() / (static_cast<double>(window) * static_cast<double>(negative));
    RowMatrix m(n, n);
#pragma omp parallel for schedule(static)
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double x_ij = std::log(std::max(1.0, scale * sum(i, j) * inv_deg[j]));
            const double x_ji = std::log(std::max(1.0, scale * sum(j, i) * inv_deg[i]));
            // Equal in exact arithmetic; averaging makes M exactly symmetric.
            const double v = 0.5 * (x_ij + x_ji);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

namespace {

double gaussian(Rng& rng) {
    double u1 = uniform_real(rng);
    while (u1 <= 0.0) u1 = uniform_real(rng);
    const double u2 = uniform_real(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

void fix_signs(Eigen::MatrixXd& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        Eigen::Index arg = 0;
        vectors.col(c).cwiseAbs().maxCoeff(&arg);
        if (vectors(arg, c) < 0.0) vectors.col(c) = -vectors.col(c);
    }
}

RowMatrix assemble(const Eigen::VectorXd& values, const Eigen::MatrixXd& vectors, int dimension) {
    // values ascending; take the last `dimension` in reverse.
    const Eigen::Index n = vectors.rows();
    const Eigen::Index total = values.size();
    Eigen::MatrixXd top(n, dimension);
    Eigen::VectorXd lambda(dimension);
    for (int c = 0; c < dimension; ++c) {
        top.col(c) = vectors.col(total - 1 - c);
        lambda(c) = values(total - 1 - c);
    }
    fix_signs(top);
    RowMatrix emb(n, dimension);
    for (int c = 0; c < dimension; ++c) emb.col(c) = top.col(c) * std::sqrt(std::max(lambda(c), 0.0));
    return emb;
}

} // namespace

RowMatrix factorize(const RowMatrix& m, int dimension, std::uint64_t seed, const NetmfOptions& options) {
    if (m.rows() != m.cols()) throw std::invalid_argument("factorize: matrix must be square");
    const Eigen::Index n = m.rows();
    if (dimension < 1 || dimension > n)
        throw std::invalid_argument("factorize: dimension " + std::to_string(dimension) +
                                    " larger than matrix dimension " + std::to_string(n));

    if (static_cast<std::size_t>(n) <= options.exact_eigen_limit) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Eigen::MatrixXd(m), Eigen::ComputeEigenvectors);
        if (solver.info() != Eigen::Success) throw std::runtime_error("factorize: eigensolver failed");
        return assemble(solver.eigenvalues(), solver.eigenvectors(), dimension);
    }

    // Randomized subspace iteration (range finder + Rayleigh-Ritz).
    const Eigen::Index width = std::min<Eigen::Index>(n, dimension + options.oversampling);
    Rng rng(derive_seed(seed, {0x6e65746d66ULL}));
    Eigen::MatrixXd omega(n, width);
    for (Eigen::Index j = 0; j < width; ++j)
        for (Eigen::Index i = 0; i < n; ++i) omega(i, j) = gaussian(rng);
    auto orthonormalize = [&](const Eigen::MatrixXd& y) {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
        return Eigen::MatrixXd(qr.householderQ() * Eigen::MatrixXd::Identity(n, width));
    };
    Eigen::MatrixXd q = orthonormalize(m * omega);
    for (int it = 0; it < options.power_iterations; ++it) q = orthonormalize(m * q);
    Eigen::MatrixXd small = q.transpose() * (m * q);
    small = 0.5 * (small + small.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(small, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw std::runtime_error("factorize: eigensolver failed");
    Eigen::MatrixXd vectors = q * solver.eigenvectors();
    return assemble(solver.eigenvalues(), vectors, dimension);
}

Embedding netmf_embed(const Graph& g, const EmbeddingParams& params, const NetmfOptions& options) {
    params.validate();
    if (params.backend != Backend::netmf) throw std::invalid_argument("netmf_embed: backend must be netmf");
    if (g.empty()) throw DataError("netmf_embed: empty graph");
    Embedding emb;
    emb.params = params;
    emb.effective_dimension = std::min<int>(params.dimension, static_cast<int>(g.num_nodes()));
    emb.matrix = factorize(netmf_target(g, params.window, params.negative, options), emb.effective_dimension,
                           params.seed, options);
    for (std::size_t i = 0; i < g.num_nodes(); ++i)
        if (g.neighbor_count(static_cast<NodeId>(i)) == 0) ++emb.isolated_rows;
    return emb;
}

} // namespace scd
