#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "scd/error.hpp"
#include "scd/ppr.hpp"
#include "support.hpp"

namespace scd {
namespace {

TEST(Ppr, SingleEdgeClosedForm) {
    const double alpha = 0.85;
    auto r = ppr_vector(test::make_graph(2, {{0, 1}}), 0);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.values[0], 1.0 / (1.0 + alpha), 1e-4);
    EXPECT_NEAR(r.values[1], alpha / (1.0 + alpha), 1e-4);
    EXPECT_NEAR(r.values[0], 0.5405, 1e-4);
    EXPECT_NEAR(r.values[1], 0.4594, 1e-4);
}

TEST(Ppr, VanishingDampingIsPureRestart) {
    PprParams p;
    p.alpha = 1e-9;
    auto r = ppr_vector(test::cycle(5), 2, p);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(r.values[i], i == 2 ? 1.0 : 0.0, 1e-8);
}

TEST(Ppr, IsolatedNodeIsItsOwnVector) {
    std::vector<Edge> e{{0, 1, 1.0}};
    auto g = Graph::from_edges(3, e);
    auto r = ppr_vector(g, 2);
    EXPECT_EQ(r.values, (std::vector<double>{0.0, 0.0, 1.0}));
    EXPECT_EQ(r.iterations, 1);
    EXPECT_TRUE(r.converged);
}

TEST(Ppr, MassStaysInComponent) {
    auto emb = ppr_embed(test::two_triangles(), EmbeddingParams{.backend = Backend::ppr}).embedding;
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v)
            if (u / 3 != v / 3) EXPECT_EQ(emb.matrix(u, v), 0.0);
}

TEST(Ppr, CycleRowsAreRotations) {
    auto g = test::cycle(4);
    auto emb = ppr_embed(g, EmbeddingParams{.backend = Backend::ppr}).embedding;
    for (NodeId u = 0; u < 4; ++u) {
        Eigen::VectorXd exact = test::dense_ppr(g, u, 0.85);
        for (NodeId v = 0; v < 4; ++v) {
            EXPECT_NEAR(emb.matrix(u, v), exact(v), 1e-5);
            EXPECT_NEAR(emb.matrix(u, v), emb.matrix(0, (v - u + 4) % 4), 1e-9);
        }
    }
}

TEST(Ppr, ProbabilityVectors) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = test::random_graph(40, 0.08, seed, true);
        for (NodeId u = 0; u < g.num_nodes(); u += 7) {
            auto r = ppr_vector(g, u);
            EXPECT_GE(*std::min_element(r.values.begin(), r.values.end()), 0.0);
            EXPECT_NEAR(std::accumulate(r.values.begin(), r.values.end(), 0.0), 1.0, 1e-9);
        }
    }
}

TEST(Ppr, MatchesDirectLinearSolve) {
    PprParams p;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        std::size_t n = 3 + seed * 2;
        auto g = test::random_graph(n, 0.2, seed + 100, seed % 2 == 1);
        for (double alpha : {0.5, 0.85}) {
            p.alpha = alpha;
            for (NodeId u = 0; u < n; ++u) {
                auto r = ppr_vector(g, u, p);
                Eigen::VectorXd exact = test::dense_ppr(g, u, alpha);
                for (std::size_t v = 0; v < n; ++v) EXPECT_NEAR(r.values[v], exact(v), 10 * p.tol);
            }
        }
    }
}

TEST(Ppr, HighDampingConvergesWithTighterTolerance) {
    PprParams p;
    p.alpha = 0.95;
    p.tol = 1e-9;
    p.max_iter = 2000;
    auto g = test::random_graph(20, 0.2, 77);
    for (NodeId u = 0; u < 20; ++u) {
        auto r = ppr_vector(g, u, p);
        ASSERT_TRUE(r.converged);
        Eigen::VectorXd exact = test::dense_ppr(g, u, p.alpha);
        for (std::size_t v = 0; v < 20; ++v) EXPECT_NEAR(r.values[v], exact(v), 1e-6);
    }
}

TEST(Ppr, SupportWithinComponent) {
    auto g = test::random_graph(30, 0.05, 42);
    // Component labels by flood fill.
    std::vector<int> comp(g.num_nodes(), -1);
    int c = 0;
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<NodeId> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (const auto& nb : g.neighbors(x))
                if (comp[nb.node] < 0) {
                    comp[nb.node] = c;
                    stack.push_back(nb.node);
                }
        }
        ++c;
    }
    ASSERT_GT(c, 1);
    auto emb = ppr_embed(g, EmbeddingParams{.backend = Backend::ppr}).embedding;
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        for (NodeId v = 0; v < g.num_nodes(); ++v)
            if (comp[u] != comp[v]) EXPECT_EQ(emb.matrix(u, v), 0.0);
}

TEST(Ppr, EmbeddingIsDeterministic) {
    auto g = test::random_graph(50, 0.1, 7);
    auto a = ppr_embed(g, EmbeddingParams{.backend = Backend::ppr});
    auto b = ppr_embed(g, EmbeddingParams{.backend = Backend::ppr});
    EXPECT_TRUE(a.embedding.matrix == b.embedding.matrix);
    EXPECT_EQ(a.embedding.cols(), 50u);
}

TEST(Ppr, ReportsUnconvergedSources) {
    PprParams p;
    p.max_iter = 1;
    auto r = ppr_embed(test::cycle(6), EmbeddingParams{.backend = Backend::ppr}, p);
    EXPECT_EQ(r.unconverged.size(), 6u);
}

TEST(Ppr, ParameterValidation) {
    PprParams p;
    p.alpha = 1.0;
    EXPECT_THROW(p.validate(), ConfigError);
    p.alpha = 0.5;
    p.tol = 0.0;
    EXPECT_THROW(p.validate(), ConfigError);
    p.tol = 1e-6;
    p.max_iter = 0;
    EXPECT_THROW(p.validate(), ConfigError);
    EXPECT_THROW(ppr_vector(test::cycle(3), 5), std::exception);
}

} // namespace
} // namespace scd
