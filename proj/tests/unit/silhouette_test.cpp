#include <gtest/gtest.h>

#include <cmath>

#include "scd/error.hpp"
#include "scd/silhouette.hpp"
#include "support.hpp"

namespace scd {
namespace {

RowMatrix line(std::initializer_list<double> values) {
    RowMatrix x(values.size(), 1);
    Eigen::Index i = 0;
    for (double v : values) x(i++, 0) = v;
    return x;
}

using Labels = std::vector<std::uint32_t>;

TEST(Silhouette, HandComputedPoint) {
    auto x = line({0.0, 0.1, 10.0, 10.1});
    Labels l{0, 0, 1, 1};
    EXPECT_NEAR(silhouette_point(0, x, l), 9.95 / 10.05, 1e-12);
    EXPECT_NEAR(silhouette_point(0, x, l), 0.99005, 1e-5);
}

TEST(Silhouette, HandComputedGlobal) {
    auto x = line({0.0, 0.1, 10.0, 10.1});
    Labels l{0, 0, 1, 1};
    double expected = (2 * (10.05 - 0.1) / 10.05 + 2 * (9.95 - 0.1) / 9.95) / 4.0;
    EXPECT_NEAR(silhouette_global(x, l), expected, 1e-12);
    EXPECT_NEAR(SilhouetteEvaluator(x).global(l), expected, 1e-12);
    EXPECT_NEAR(expected, 0.9900, 1e-4);
}

TEST(Silhouette, SingletonIsZero) {
    auto x = line({0.0, 1.0, 1.2, 5.0});
    Labels l{0, 0, 0, 1};
    EXPECT_EQ(silhouette_point(3, x, l), 0.0);
    EXPECT_EQ(SilhouetteEvaluator(x).evaluate(l).per_point[3], 0.0);
}

TEST(Silhouette, MisassignedPointIsNegative) {
    auto x = line({0.0, 0.0, 5.0, 5.0});
    Labels l{0, 0, 1, 1};
    RowMatrix moved = x;
    moved(0, 0) = 5.0;  // member of cluster 0 sitting on cluster 1
    EXPECT_LT(silhouette_point(0, moved, l), 0.0);
}

TEST(Silhouette, CoincidentPointsScoreZero) {
    RowMatrix x = RowMatrix::Constant(6, 3, 2.5);
    Labels l{0, 1, 0, 1, 0, 1};
    EXPECT_EQ(silhouette_global(x, l), 0.0);
    EXPECT_EQ(SilhouetteEvaluator(x).global(l), 0.0);
}

TEST(Silhouette, NeedsTwoClusters) {
    auto x = test::random_points(5, 2, 0);
    Labels l(5, 3);
    EXPECT_THROW(SilhouetteEvaluator(x).evaluate(l), DataError);
    EXPECT_THROW(silhouette_global(x, l), DataError);
}

TEST(Silhouette, RandomLabelsScoreNearZero) {
    for (std::uint64_t t = 0; t < 100; ++t) {
        auto x = test::random_points(100, 3, t);
        auto l = test::random_labels(100, 2 + t % 4, t + 7);
        EXPECT_LT(std::abs(SilhouetteEvaluator(x).global(l)), 0.2);
    }
}

TEST(Silhouette, BoundedOnRandomInstances) {
    for (std::uint64_t t = 0; t < 1000; ++t) {
        std::size_t n = 2 + t % 30;
        auto x = test::random_points(n, 1 + t % 5, t);
        if (t % 3 == 0) x.row(n - 1) = x.row(0);  // duplicates
        auto l = test::random_labels(n, 2 + t % 5, t + 1);
        l[0] = 0;
        l[1] = 1;
        auto r = SilhouetteEvaluator(x).evaluate(l);
        for (double s : r.per_point) {
            EXPECT_GE(s, -1.0);
            EXPECT_LE(s, 1.0);
        }
    }
}

TEST(Silhouette, MatchesNaiveDoubleLoop) {
    for (std::uint64_t t = 0; t < 30; ++t) {
        std::size_t n = 3 + (t * 37) % 198;
        auto x = test::random_points(n, 1 + t % 6, t + 300);
        auto l = test::random_labels(n, 2 + t % 7, t);
        l[0] = 0;
        l[1] = 1;
        auto naive = test::naive_silhouette(x, l);
        for (std::size_t limit : {std::size_t{4096}, std::size_t{0}}) {
            SilhouetteOptions opts;
            opts.cache_limit = limit;
            SilhouetteEvaluator eval(x, opts);
            EXPECT_EQ(eval.cached(), limit > 0);
            auto r = eval.evaluate(l);
            double mean = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_NEAR(r.per_point[i], naive[i], 1e-9);
                EXPECT_NEAR(silhouette_point(i, x, l), naive[i], 1e-9);
                mean += naive[i];
            }
            EXPECT_NEAR(r.global, mean / n, 1e-9);
        }
    }
}

TEST(Silhouette, GeometricInvariances) {
    auto x = test::random_points(50, 3, 8);
    auto l = test::random_labels(50, 4, 9);
    double base = silhouette_global(x, l);

    // Point order.
    std::vector<std::size_t> perm(50);
    for (std::size_t i = 0; i < 50; ++i) perm[i] = (i * 17) % 50;
    RowMatrix xp(50, 3);
    Labels lp(50);
    for (std::size_t i = 0; i < 50; ++i) {
        xp.row(i) = x.row(perm[i]);
        lp[i] = l[perm[i]];
    }
    EXPECT_NEAR(silhouette_global(xp, lp), base, 1e-12);

    // Label names.
    Labels renamed(l);
    for (auto& v : renamed) v = 10 + 3 * (3 - v);
    EXPECT_NEAR(SilhouetteEvaluator(x).global(renamed), base, 1e-12);

    // Rotation plus translation, and uniform scaling.
    Eigen::Matrix3d q = Eigen::Quaterniond(0.3, -0.5, 0.2, 0.7).normalized().toRotationMatrix();
    RowMatrix moved = (x * q.transpose()).rowwise() + Eigen::RowVector3d(4.0, -2.0, 9.0);
    EXPECT_NEAR(silhouette_global(moved, l), base, 1e-12);
    RowMatrix scaled = 123.0 * x;
    EXPECT_NEAR(silhouette_global(scaled, l), base, 1e-12);
}

TEST(Silhouette, SamplingIsMarkedApproximate) {
    auto x = test::random_points(400, 2, 3);
    Labels l(400);
    for (std::size_t i = 0; i < 400; ++i) l[i] = x(i, 0) > 0 ? 1 : 0;
    SilhouetteOptions opts;
    opts.sample_size = 100;
    opts.sample_seed = 5;
    auto r = SilhouetteEvaluator(x, opts).evaluate(l);
    EXPECT_TRUE(r.approximate);
    EXPECT_EQ(r.per_point.size(), 100u);
    EXPECT_EQ(r.indices.size(), 100u);
    EXPECT_NEAR(r.global, SilhouetteEvaluator(x).global(l), 0.05);
    EXPECT_EQ(r.global, SilhouetteEvaluator(x, opts).global(l));
}

TEST(NormalizeScores, AffineEndpoints) {
    std::vector<std::pair<std::size_t, double>> s{{2, 0.2}, {3, 0.5}, {4, 0.8}};
    auto r = normalize_scores(s);
    EXPECT_FALSE(r.degenerate);
    ASSERT_EQ(r.scores.size(), 3u);
    EXPECT_EQ(r.scores[0].second, 0.0);
    EXPECT_NEAR(r.scores[1].second, 0.5, 1e-12);
    EXPECT_EQ(r.scores[2].second, 1.0);
    EXPECT_EQ(r.scores[1].first, 3u);
}

TEST(NormalizeScores, ConstantListIsDegenerate) {
    std::vector<std::pair<std::size_t, double>> s{{2, 0.3}, {3, 0.3}};
    auto r = normalize_scores(s);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.scores[0].second, 0.0);
    EXPECT_EQ(r.scores[1].second, 0.0);
}

TEST(NormalizeScores, PreservesArgmaxExactly) {
    Rng rng(1);
    for (int t = 0; t < 2000; ++t) {
        std::size_t n = 2 + uniform_index(rng, 20);
        std::vector<std::pair<std::size_t, double>> s;
        double base = uniform_real(rng);
        for (std::size_t i = 0; i < n; ++i) {
            // Mix of widely spread and nearly tied values.
            double v = t % 2 ? uniform_real(rng) * 2 - 1 : base + uniform_index(rng, 4) * 1e-16;
            s.emplace_back(i + 2, v);
        }
        auto r = normalize_scores(s);
        if (r.degenerate) continue;
        std::size_t raw = 0, norm = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (s[i].second > s[raw].second) raw = i;
            if (r.scores[i].second > r.scores[norm].second) norm = i;
        }
        EXPECT_EQ(raw, norm);
        for (const auto& [k, v] : r.scores) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

} // namespace
} // namespace scd
