#include <gtest/gtest.h>

#include "oracles.hpp"
#include "urysohn/hyperspace.hpp"
#include "urysohn/random.hpp"

using namespace urysohn;

namespace {
const Rational kHalf(1, 2);
const UrysohnPoint kEmpty;
const UrysohnPoint kHalfOne{{kHalf, 1}};
} // namespace

TEST(FiniteSubset, RejectsEmpty) { EXPECT_THROW(FiniteSubset(std::set<UrysohnPoint>{}), InvalidArgument); }

TEST(HausdorffSupInf, Examples) {
    const FiniteSubset e{kEmpty};
    const FiniteSubset f{kEmpty, kHalfOne};
    EXPECT_EQ(hausdorff_supinf(e, e), Rational(0));
    EXPECT_EQ(hausdorff_supinf(e, f), kHalf);
    EXPECT_EQ(hausdorff_supinf(f, e), kHalf);
}

TEST(BallFamily, Examples) {
    const FiniteSubset e{kEmpty, kHalfOne};
    EXPECT_EQ(ball_family(e, kHalf).size(), 1u);
    EXPECT_EQ(ball_family(e, Rational(1, 4)).size(), 2u);
    EXPECT_EQ(ball_family(e, Rational(0)).size(), 2u);
    EXPECT_EQ(ball_family(e, Rational(3)).size(), 1u);
}

TEST(HausdorffBallMin, Examples) {
    const FiniteSubset e{kEmpty};
    const FiniteSubset f{kEmpty, kHalfOne};
    EXPECT_EQ(hausdorff_ballmin(f, f), Rational(0));
    EXPECT_EQ(hausdorff_ballmin(e, f), kHalf);
}

TEST(HausdorffBallMin, MatchesSupInfAndIsACandidate) {
    gen::Rng rng(301);
    const auto coords = gen::positive_rationals(rng, 8);
    for (int t = 0; t < 500; ++t) {
        const auto pool = gen::clustered_pool(rng, coords, 14);
        const auto e = gen::subset_of(rng, pool, 8);
        const auto f = gen::subset_of(rng, pool, 8);
        const auto value = hausdorff_ballmin(e, f);
        ASSERT_EQ(value, oracle::hausdorff(e.points(), f.points()));
        ASSERT_EQ(hausdorff_supinf(e, f), hausdorff_supinf(f, e));
        const auto c = hausdorff_candidates(e, f);
        ASSERT_TRUE(std::binary_search(c.begin(), c.end(), value));
        // Value lies in the union of the coordinate sets, or is 0.
        bool in_coords = value.is_zero();
        for (const auto* s : {&e, &f}) {
            for (const auto& p : s->points()) {
                in_coords = in_coords || p.support().contains(value);
            }
        }
        ASSERT_TRUE(in_coords);
    }
}

TEST(HausdorffSupInf, StrongTriangle) {
    gen::Rng rng(303);
    const auto coords = gen::positive_rationals(rng, 8);
    for (int t = 0; t < 500; ++t) {
        const auto pool = gen::clustered_pool(rng, coords, 12);
        const auto e = gen::subset_of(rng, pool, 6);
        const auto f = gen::subset_of(rng, pool, 6);
        const auto g = gen::subset_of(rng, pool, 6);
        ASSERT_LE(hausdorff_supinf(e, g), max(hausdorff_supinf(e, f), hausdorff_supinf(f, g)));
    }
}

TEST(SymmetricProduct, Checks) {
    const FiniteSubset three{kEmpty, kHalfOne, UrysohnPoint{{Rational(1), 1}}};
    EXPECT_TRUE(check_symmetric_product(three, SymmetricProductBound::unbounded()));
    EXPECT_FALSE(check_symmetric_product(three, SymmetricProductBound(2, std::nullopt)));
    EXPECT_EQ(three.diameter(), Rational(1));
    EXPECT_TRUE(check_symmetric_product(three, SymmetricProductBound(std::nullopt, Rational(1))));
    EXPECT_FALSE(check_symmetric_product(three, SymmetricProductBound(std::nullopt, kHalf)));
    EXPECT_THROW(SymmetricProductBound(1, std::nullopt), InvalidArgument);
    EXPECT_THROW(SymmetricProductBound(std::nullopt, Rational(0)), InvalidArgument);
}

TEST(HyperspaceFamily, Examples) {
    const FiniteSubset a{kEmpty};
    const auto fam = hyperspace_equidistant_family(a, Rational(1), 2, {});
    ASSERT_EQ(fam.size(), 2u);
    EXPECT_EQ(fam[0], (FiniteSubset{kEmpty}));
    EXPECT_EQ(fam[1], (FiniteSubset{UrysohnPoint{{Rational(1), 1}}}));
    EXPECT_EQ(oracle::hausdorff(fam[0].points(), fam[1].points()), Rational(1));

    const auto single = hyperspace_equidistant_family(a, kHalf, 1, {});
    ASSERT_EQ(single.size(), 1u);
    EXPECT_LE(hausdorff_supinf(single[0], a), kHalf);
}

TEST(HyperspaceFamily, RejectsCenterOutsideTheBound) {
    const FiniteSubset three{kEmpty, kHalfOne, UrysohnPoint{{Rational(1), 1}}};
    EXPECT_THROW(hyperspace_equidistant_family(three, Rational(1), 2, SymmetricProductBound(2, std::nullopt)),
                 PreconditionError);
}

TEST(HyperspaceFamily, EveryBoundCombination) {
    gen::Rng rng(305);
    const auto coords = gen::positive_rationals(rng, 8);
    for (int mode = 0; mode < 4; ++mode) {
        for (int t = 0; t < 60; ++t) {
            const auto a = gen::subset_of(rng, gen::clustered_pool(rng, coords, 10), 5);
            const auto& r = coords[gen::uniform(rng, 0, coords.size() - 1)];
            SymmetricProductBound bound((mode & 1) ? std::optional<std::size_t>(std::max<std::size_t>(2, a.size()))
                                                   : std::nullopt,
                                        (mode & 2) ? std::optional<Rational>(max(a.diameter(), coords[0]))
                                                   : std::nullopt);
            const auto fam = hyperspace_equidistant_family(a, r, 4, bound);
            for (std::size_t i = 0; i < fam.size(); ++i) {
                EXPECT_TRUE(check_symmetric_product(fam[i], bound));
                EXPECT_LE(fam[i].size(), a.size());
                EXPECT_LE(oracle::hausdorff(fam[i].points(), a.points()), r);
                for (std::size_t j = i + 1; j < fam.size(); ++j) {
                    EXPECT_EQ(oracle::hausdorff(fam[i].points(), fam[j].points()), r);
                }
            }
        }
    }
}
