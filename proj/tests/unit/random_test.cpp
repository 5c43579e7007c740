#include <gtest/gtest.h>

#include <thincoalg/random.hpp>
#include <thincoalg/thinness.hpp>

using namespace thincoalg;

TEST(Rng, BelowStaysInRange) {
    Rng rng(1);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
    for (int h : hits) EXPECT_GT(h, 800);
    for (int i = 0; i < 1000; ++i) {
        auto x = rng.between(3, 5);
        EXPECT_GE(x, 3u);
        EXPECT_LE(x, 5u);
    }
}

TEST(Rng, SameSeedSameOutput) {
    auto sig = stock::server();
    Rng a(99), b(99);
    for (int i = 0; i < 20; ++i) {
        EXPECT_EQ(random_coalgebra(sig, 12, a).transitions(), random_coalgebra(sig, 12, b).transitions());
        EXPECT_EQ(random_term(*sig, a), random_term(*sig, b));
    }
}

TEST(RandomCoalgebra, ThinShapeIsThin) {
    std::vector<SignaturePtr> sigs{stock::polynomial012(), stock::server(), stock::bag(3), stock::cyclic(3)};
    Rng rng(5);
    CoalgebraGenOptions opts;
    opts.shape = CoalgebraGenOptions::Shape::thin;
    for (int i = 0; i < 400; ++i) {
        const auto& sig = sigs[i % sigs.size()];
        Coalgebra c = random_coalgebra(sig, rng.between(1, 40), rng, opts);
        for (StateId s = 0; s < c.size(); ++s) EXPECT_TRUE(is_thin(PointedCoalgebra(c, s)).thin);
    }
}

TEST(RandomCoalgebra, MeanDegree) {
    std::vector<std::size_t> arities{0, 1, 2, 3, 4, 5};
    auto sig = stock::polynomial(arities);
    Rng rng(8);
    CoalgebraGenOptions opts;
    opts.mean_degree = 3.0;
    Coalgebra c = random_coalgebra(sig, 20000, rng, opts);
    const double mean = static_cast<double>(c.edge_count()) / c.size();
    EXPECT_NEAR(mean, 3.0, 0.1);
    opts.mean_degree = 2.5;
    Coalgebra d = random_coalgebra(sig, 20000, rng, opts);
    EXPECT_NEAR(static_cast<double>(d.edge_count()) / d.size(), 2.5, 0.1);
}
