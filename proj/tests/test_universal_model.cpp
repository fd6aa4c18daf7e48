#include <gtest/gtest.h>

#include "oracles.hpp"
#include "urysohn/model.hpp"
#include "urysohn/point.hpp"
#include "urysohn/random.hpp"

using namespace urysohn;

namespace {
const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);
} // namespace

TEST(UrysohnPoint, ZeroValuesAreNeverStored) {
    UrysohnPoint p{{Rational(1), 2}, {kHalf, 0}};
    EXPECT_EQ(p.support().size(), 1u);
    EXPECT_EQ(p, (UrysohnPoint{{Rational(1), 2}}));
    p.set(Rational(1), 0);
    EXPECT_TRUE(p.empty());
    EXPECT_THROW(p.set(Rational(0), 1), InvalidArgument);
    EXPECT_THROW(p.set(Rational(1), -1), InvalidArgument);
}

TEST(Delta, Examples) {
    EXPECT_EQ(delta(UrysohnPoint{}, UrysohnPoint{}), Rational(0));
    EXPECT_EQ(delta(UrysohnPoint{}, UrysohnPoint{{kHalf, 3}}), kHalf);
    EXPECT_EQ(delta(UrysohnPoint{{Rational(1), 2}, {kQuarter, 1}}, UrysohnPoint{{Rational(1), 2}, {kQuarter, 5}}),
              kQuarter);
}

TEST(Delta, IsAnUltrametricValuedInTheSupports) {
    gen::Rng rng(101);
    const auto coords = gen::positive_rationals(rng, 12);
    for (int t = 0; t < 3000; ++t) {
        const auto f = gen::point(rng, coords, 6, 3);
        const auto g = gen::point(rng, coords, 6, 3);
        const auto h = gen::point(rng, coords, 6, 3);
        const auto fg = delta(f, g);
        ASSERT_EQ(fg, oracle::delta(f, g));
        ASSERT_EQ(fg, delta(g, f));
        ASSERT_EQ(fg.is_zero(), f == g);
        ASSERT_LE(delta(f, h), max(fg, delta(g, h)));
        ASSERT_TRUE(fg.is_zero() || f.support().contains(fg) || g.support().contains(fg));
    }
}

TEST(SeedPoint, Examples) {
    EXPECT_EQ(seed_point(UrysohnPoint{}, Rational(1), 0), UrysohnPoint{});
    const auto s = seed_point(UrysohnPoint{}, Rational(1), 2);
    EXPECT_EQ(s, (UrysohnPoint{{Rational(1), 2}}));
    EXPECT_EQ(delta(UrysohnPoint{}, s), Rational(1));

    const UrysohnPoint a{{Rational(2), 5}, {kHalf, 1}};
    const auto q = seed_point(a, Rational(1), 3);
    EXPECT_EQ(q, (UrysohnPoint{{Rational(2), 5}, {Rational(1), 3}}));
    EXPECT_EQ(delta(a, q), Rational(1));
    EXPECT_THROW(seed_point(a, Rational(0), 1), InvalidArgument);
}

TEST(SeedPoint, Guarantees) {
    gen::Rng rng(103);
    const auto coords = gen::positive_rationals(rng, 10);
    for (int t = 0; t < 500; ++t) {
        const auto a = gen::point(rng, coords, 6, 4);
        const auto& r = coords[gen::uniform(rng, 0, coords.size() - 1)];
        const BigInt j = gen::uniform(rng, 0, 5);
        const BigInt k = gen::uniform(rng, 0, 5);
        const auto sj = seed_point(a, r, j);
        const auto sk = seed_point(a, r, k);
        EXPECT_LE(delta(a, sj), r);
        EXPECT_EQ(delta(sj, sk) == r, j != k);
        EXPECT_LT(delta(a, seed_point(a, r, a.at(r))), r);
    }
}

TEST(EquidistantFamily, Examples) {
    const UrysohnPoint a{{Rational(1), 7}};
    EXPECT_EQ(equidistant_family(a, Rational(1), 1), std::vector<UrysohnPoint>{seed_point(a, Rational(1), 0)});
    const auto fam = equidistant_family(UrysohnPoint{}, Rational(1), 3);
    const std::vector<UrysohnPoint> expected{UrysohnPoint{}, UrysohnPoint{{Rational(1), 1}},
                                             UrysohnPoint{{Rational(1), 2}}};
    EXPECT_EQ(fam, expected);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            EXPECT_EQ(oracle::delta(fam[i], fam[j]), Rational(1));
        }
    }
    EXPECT_THROW(equidistant_family(a, Rational(1), 0), InvalidArgument);
}

TEST(EquidistantFamily, TenPointsPairwiseAtRadius) {
    gen::Rng rng(107);
    const auto coords = gen::positive_rationals(rng, 10);
    for (int t = 0; t < 100; ++t) {
        const auto a = gen::point(rng, coords, 6, 4);
        const auto& r = coords[gen::uniform(rng, 0, coords.size() - 1)];
        const auto fam = equidistant_family(a, r, 10);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            EXPECT_LE(oracle::delta(a, fam[i]), r);
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                EXPECT_EQ(oracle::delta(fam[i], fam[j]), r);
            }
        }
    }
}

TEST(AvoidantWitness, Examples) {
    const UrysohnPoint e;
    EXPECT_EQ(avoidant_witness(e, Rational(1), {}), seed_point(e, Rational(1), 0));
    const std::vector<UrysohnPoint> one{e};
    EXPECT_EQ(avoidant_witness(e, Rational(1), one), (UrysohnPoint{{Rational(1), 1}}));
    const std::vector<UrysohnPoint> three{e, UrysohnPoint{{Rational(1), 1}}, UrysohnPoint{{Rational(1), 5}}};
    EXPECT_EQ(avoidant_witness(e, Rational(1), three), (UrysohnPoint{{Rational(1), 2}}));
}

TEST(AvoidantWitness, RejectsPointsOutsideTheBall) {
    const std::vector<UrysohnPoint> far{UrysohnPoint{{Rational(2), 1}}};
    EXPECT_THROW(avoidant_witness(UrysohnPoint{}, Rational(1), far), PreconditionError);
}

TEST(AvoidantWitness, PostconditionOnRandomSets) {
    gen::Rng rng(109);
    const auto coords = gen::positive_rationals(rng, 8);
    for (int t = 0; t < 300; ++t) {
        const auto a = gen::point(rng, coords, 5, 3);
        const auto& r = coords[gen::uniform(rng, 0, coords.size() - 1)];
        std::vector<UrysohnPoint> avoid;
        for (std::size_t i = 0, n = gen::uniform(rng, 0, 6); i < n; ++i) {
            // Random member of B(a, r): keep a above r, randomize at and below r.
            auto x = a.above(r);
            for (const auto& c : coords) {
                if (c <= r && gen::coin(rng)) {
                    x.set(c, BigInt(gen::uniform(rng, 1, 3)));
                }
            }
            avoid.push_back(std::move(x));
        }
        const auto p = avoidant_witness(a, r, avoid);
        EXPECT_LE(oracle::delta(a, p), r);
        for (const auto& x : avoid) {
            EXPECT_EQ(oracle::delta(x, p), r);
        }
    }
}

TEST(BallKey, Examples) {
    const UrysohnPoint a{{Rational(1), 2}, {kQuarter, 1}};
    EXPECT_TRUE(ball_key(a, Rational(1)).trace.empty());
    EXPECT_TRUE(ball_key(a, Rational(3)).trace.empty());
    EXPECT_EQ(ball_key(a, kHalf).trace, (UrysohnPoint{{Rational(1), 2}}));
    EXPECT_EQ(ball_key(a, kHalf).radius, kHalf);
}

TEST(BallKey, EqualKeysIffWithinRadius) {
    gen::Rng rng(113);
    const auto coords = gen::positive_rationals(rng, 6);
    for (int t = 0; t < 2000; ++t) {
        const auto a = gen::point(rng, coords, 4, 2);
        const auto b = gen::point(rng, coords, 4, 2);
        const auto& r = coords[gen::uniform(rng, 0, coords.size() - 1)];
        ASSERT_EQ(ball_key(a, r) == ball_key(b, r), oracle::delta(a, b) <= r);
    }
}
