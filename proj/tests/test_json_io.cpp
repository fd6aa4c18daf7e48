#include <gtest/gtest.h>

#include "urysohn/json_io.hpp"
#include "urysohn/random.hpp"

using namespace urysohn;
using json_io::json;

TEST(JsonIo, Rationals) {
    EXPECT_EQ(json_io::rational_from(json("2/4"), "r"), Rational(1, 2));
    EXPECT_EQ(json_io::rational_from(json(3), "r"), Rational(3));
    EXPECT_EQ(json_io::rational_from(json(std::int64_t{5}), "r"), Rational(5));
    try {
        json_io::rational_from(json(-1), "r");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(std::string(e.what()), "r: negative value -1");
    }
    EXPECT_THROW(json_io::rational_from(json("-1/2"), "r"), ParseError);
    EXPECT_THROW(json_io::rational_from(json(0.5), "r"), ParseError);
    EXPECT_THROW(json_io::rational_from(json("1/0"), "r"), ParseError);
}

TEST(JsonIo, ErrorsCarryThePath) {
    try {
        json_io::space_from(json::parse(R"({"labels":["a","b"],"dist":[["0","x"],["1","0"]]})"), "file.json");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("file.json/dist/0/1"), std::string::npos) << e.what();
    }
}

TEST(JsonIo, Points) {
    const auto p = json_io::point_from(json::parse(R"({"1": 2, "2/4": "3"})"), "p");
    EXPECT_EQ(p, (UrysohnPoint{{Rational(1), 2}, {Rational(1, 2), 3}}));
    EXPECT_EQ(json_io::to_json(p).dump(), R"({"1":2,"1/2":3})");
    EXPECT_THROW(json_io::point_from(json::parse(R"({"1": 0})"), "p"), ParseError);
    EXPECT_THROW(json_io::point_from(json::parse(R"({"0": 1})"), "p"), ParseError);
    EXPECT_THROW(json_io::point_from(json::parse(R"({"1": -1})"), "p"), ParseError);
    EXPECT_THROW(json_io::point_from(json::parse("[1]"), "p"), ParseError);
}

TEST(JsonIo, LargeIntegersAsStrings) {
    const BigInt big = BigInt(1) << 80;
    const auto j = json_io::to_json(big);
    EXPECT_TRUE(j.is_string());
    EXPECT_EQ(json_io::integer_from(j, "k"), big);
    EXPECT_TRUE(json_io::to_json(BigInt(7)).is_number_unsigned());
}

TEST(JsonIo, Subsets) {
    EXPECT_THROW(json_io::subset_from(json::array(), "e"), ParseError);
    const auto e = json_io::subset_from(json::parse(R"([{}, {"1/2": 1}, {}])"), "e");
    EXPECT_EQ(e.size(), 2u);
}

TEST(JsonIo, Problem) {
    const auto pr = json_io::problem_from(json::parse(R"({
        "space": {"labels": ["a", "b"], "dist": [["0", "1"], ["1", "0"]]},
        "theta": "b",
        "phi": {"a": {}}
    })"),
                                          "pr");
    EXPECT_EQ(pr.theta, "b");
    EXPECT_EQ(pr.phi.size(), 1u);
    EXPECT_THROW(json_io::problem_from(json::parse(R"({"space": {}})"), "pr"), ParseError);
}

TEST(JsonIo, SpaceRoundTrip) {
    gen::Rng rng(601);
    for (int t = 0; t < 200; ++t) {
        auto space = gen::space(rng, 7);
        if (gen::coin(rng)) {
            space = space.with_range(distance_set(space));
        }
        const auto j = json_io::to_json(space);
        const auto back = json_io::space_from(json::parse(j.dump()), "rt");
        ASSERT_EQ(back.labels(), space.labels());
        ASSERT_EQ(back.matrix(), space.matrix());
        ASSERT_EQ(back.range().has_value(), space.range().has_value());
        ASSERT_EQ(json_io::to_json(back), j);
    }
}

TEST(JsonIo, PointRoundTrip) {
    gen::Rng rng(603);
    const auto coords = gen::positive_rationals(rng, 8);
    for (int t = 0; t < 500; ++t) {
        const auto p = gen::point(rng, coords, 5, 1000);
        ASSERT_EQ(json_io::point_from(json::parse(json_io::to_json(p).dump()), "p"), p);
    }
}
