#include <gtest/gtest.h>

#include <cmath>

#include "scd/error.hpp"
#include "scd/netmf.hpp"
#include "support.hpp"

namespace scd {
namespace {

double max_abs(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(NetmfTarget, SingleEdge) {
    auto m = netmf_target(test::make_graph(2, {{0, 1}}), 1, 1);
    EXPECT_NEAR(m(0, 1), std::log(2.0), 1e-12);
    EXPECT_NEAR(m(1, 0), std::log(2.0), 1e-12);
    EXPECT_EQ(m(0, 0), 0.0);
    EXPECT_EQ(m(1, 1), 0.0);
}

TEST(NetmfTarget, Triangle) {
    auto m = netmf_target(test::complete(3), 1, 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_NEAR(m(i, j), i == j ? 0.0 : std::log(1.5), 1e-12);
}

TEST(NetmfTarget, LargeNegativeSamplingFloorsToZero) {
    auto m = netmf_target(test::random_graph(20, 0.3, 1), 3, 1000000);
    EXPECT_EQ(m.cwiseAbs().maxCoeff(), 0.0);
}

TEST(NetmfTarget, SymmetricNonNegativeAndMatchesDenseOracle) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        std::size_t n = 5 + seed * 4;
        auto g = test::random_graph(n, 0.25, seed, seed % 3 == 0);
        for (int window : {1, 2, 5, 10}) {
            for (int negative : {1, 5}) {
                RowMatrix m = netmf_target(g, window, negative);
                EXPECT_EQ((m - m.transpose()).cwiseAbs().maxCoeff(), 0.0);
                EXPECT_GE(m.minCoeff(), 0.0);
                EXPECT_LE(max_abs(m, test::dense_netmf(g, window, negative)), 1e-9)
                    << "n=" << n << " T=" << window << " b=" << negative;
            }
        }
    }
}

TEST(NetmfTarget, IsolatedNodesGiveZeroRows) {
    std::vector<Edge> e{{0, 1, 1.0}, {1, 2, 1.0}};
    auto g = Graph::from_edges(4, e);
    auto m = netmf_target(g, 3, 1);
    EXPECT_EQ(m.row(3).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(m.col(3).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE(max_abs(m, test::dense_netmf(g, 3, 1)), 1e-12);
}

TEST(NetmfTarget, RefusesGraphsAboveDenseLimit) {
    NetmfOptions opts;
    opts.dense_limit = 10;
    EXPECT_THROW(netmf_target(test::cycle(11), 1, 1, opts), DataError);
}

TEST(JacobiOracle, ReconstructsItsInput) {
    auto x = test::random_points(12, 12, 9);
    Eigen::MatrixXd s = x + x.transpose();
    auto [values, vectors] = test::jacobi_eigen(s);
    Eigen::MatrixXd back = vectors * values.asDiagonal() * vectors.transpose();
    EXPECT_LE(max_abs(back, s), 1e-10);
    for (Eigen::Index i = 1; i < values.size(); ++i) EXPECT_GE(values(i - 1), values(i));
}

TEST(Factorize, ZeroMatrixGivesZeroEmbedding) {
    RowMatrix z = RowMatrix::Zero(2, 2);
    auto emb = factorize(z, 1, 0);
    EXPECT_EQ(emb.rows(), 2);
    EXPECT_EQ(emb.cols(), 1);
    EXPECT_EQ(emb.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Factorize, IdentityGivesOrthonormalRows) {
    RowMatrix id = RowMatrix::Identity(2, 2);
    auto emb = factorize(id, 2, 0);
    EXPECT_NEAR(emb.row(0).norm(), 1.0, 1e-12);
    EXPECT_NEAR(emb.row(1).norm(), 1.0, 1e-12);
    EXPECT_NEAR(emb.row(0).dot(emb.row(1)), 0.0, 1e-12);
}

TEST(Factorize, TriangleRankTwoIsBestPsdApproximation) {
    // M = c (J - I) has spectrum {2c, -c, -c}. emb emb^T is positive
    // semidefinite, so the reachable optimum is the clipped truncation.
    RowMatrix m = netmf_target(test::complete(3), 1, 1);
    auto emb = factorize(m, 2, 0);
    Eigen::MatrixXd best_psd = test::truncated_psd(m, 2);
    double achieved = (Eigen::MatrixXd(m) - emb * emb.transpose()).norm();
    EXPECT_LE(achieved, (Eigen::MatrixXd(m) - best_psd).norm() + 1e-9);
    EXPECT_LE(max_abs(emb * emb.transpose(), best_psd), 1e-9);
    const double c = std::log(1.5);
    EXPECT_NEAR(achieved, std::sqrt(2.0) * c, 1e-9);
}

TEST(Factorize, MatchesJacobiOracleOnRandomSymmetricMatrices) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto x = test::random_points(25, 25, seed);
        RowMatrix s = x * x.transpose() - 2.0 * RowMatrix::Identity(25, 25);
        for (int d : {1, 4, 10, 25}) {
            auto emb = factorize(s, d, seed);
            ASSERT_EQ(emb.cols(), d);
            EXPECT_LE(max_abs(emb * emb.transpose(), test::truncated_psd(s, d)), 1e-8) << "d=" << d;
        }
    }
}

TEST(Factorize, RandomizedSolverApproximatesLeadingSubspace) {
    auto g = test::planted_graph(150, 4, 0.3, 0.01, 5);
    RowMatrix m = netmf_target(g, 5, 1);
    NetmfOptions opts;
    opts.exact_eigen_limit = 0;
    auto emb = factorize(m, 4, 11, opts);
    Eigen::MatrixXd oracle = test::truncated_psd(m, 4);
    EXPECT_LE((emb * emb.transpose() - oracle).norm(), 1e-6 * oracle.norm());
}

TEST(NetmfEmbed, TwoTrianglesSeparate) {
    EmbeddingParams p;
    p.window = 2;
    p.negative = 1;
    p.dimension = 4;
    auto emb = netmf_embed(test::two_triangles(), p);
    ASSERT_EQ(emb.rows(), 6u);
    ASSERT_EQ(emb.cols(), 4u);
    double worst_within = 0.0, best_across = INFINITY;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            double d = (emb.matrix.row(i) - emb.matrix.row(j)).norm();
            if (i / 3 == j / 3) worst_within = std::max(worst_within, d);
            else best_across = std::min(best_across, d);
        }
    EXPECT_LT(worst_within, best_across);
}

TEST(NetmfEmbed, FullDimensionReproducesPsdPart) {
    auto g = test::random_graph(30, 0.2, 4);
    EmbeddingParams p;
    p.window = 3;
    p.dimension = 30;
    auto emb = netmf_embed(g, p);
    Eigen::MatrixXd m = test::dense_netmf(g, 3, 1);
    Eigen::MatrixXd psd = test::truncated_psd(m, 30);
    EXPECT_LE((emb.matrix * emb.matrix.transpose() - psd).norm(), 1e-6);
}

TEST(NetmfEmbed, DimensionClampedToNodeCount) {
    EmbeddingParams p;
    p.dimension = 256;
    auto emb = netmf_embed(test::two_triangles(), p);
    EXPECT_EQ(emb.cols(), 6u);
    EXPECT_EQ(emb.effective_dimension, 6);
}

TEST(NetmfEmbed, DeterministicForSeed) {
    auto g = test::random_graph(60, 0.1, 2);
    EmbeddingParams p;
    p.seed = 17;
    NetmfOptions opts;
    opts.exact_eigen_limit = 0;
    auto a = netmf_embed(g, p, opts);
    auto b = netmf_embed(g, p, opts);
    EXPECT_TRUE(a.matrix == b.matrix);
    auto c = netmf_embed(g, p);
    auto d = netmf_embed(g, p);
    EXPECT_TRUE(c.matrix == d.matrix);
}

TEST(NetmfEmbed, RelabelingPermutesDistances) {
    auto g = test::random_graph(25, 0.25, 8);
    const std::size_t n = g.num_nodes();
    std::vector<NodeId> perm(n);
    for (NodeId i = 0; i < n; ++i) perm[i] = i;
    Rng rng(3);
    shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabeled;
    for (const auto& e : g.edges()) relabeled.push_back({perm[e.u], perm[e.v], e.w});
    auto h = Graph::from_edges(n, relabeled);
    EmbeddingParams p;
    p.dimension = static_cast<int>(n);
    auto eg = netmf_embed(g, p);
    auto eh = netmf_embed(h, p);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j) {
            double dg = (eg.matrix.row(i) - eg.matrix.row(j)).norm();
            double dh = (eh.matrix.row(perm[i]) - eh.matrix.row(perm[j])).norm();
            EXPECT_NEAR(dg, dh, 1e-7);
        }
}

} // namespace
} // namespace scd
