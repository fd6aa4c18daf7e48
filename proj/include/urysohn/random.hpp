#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "finite_space.hpp"
#include "hyperspace.hpp"
#include "point.hpp"
#include "range_set.hpp"

/// Seeded generators for property suites. Everything is driven by one
/// std::mt19937_64 so a seed reproduces a whole run.
namespace urysohn::gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// `count` distinct positive rationals with denominators up to 8 and values up to 4.
inline std::vector<Rational> positive_rationals(Rng& rng, std::size_t count) {
    std::set<Rational> pool;
    for (std::int64_t q = 1; q <= 8; ++q) {
        for (std::int64_t p = 1; p <= 4 * q; ++p) {
            pool.insert(Rational(p, q));
        }
    }
    std::vector<Rational> all(pool.begin(), pool.end());
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(count, all.size()));
    std::sort(all.begin(), all.end());
    return all;
}

/// Range set with `nonzero` positive values.
inline RangeSet range_set(Rng& rng, std::size_t nonzero) {
    return RangeSet::from_values(positive_rationals(rng, nonzero));
}

/// Random subset (possibly empty) of the nonzero part of `s`.
inline RangeSet sub_range(Rng& rng, const RangeSet& s, double keep = 0.5) {
    std::vector<Rational> out;
    for (const auto& r : s.nonzero()) {
        if (coin(rng, keep)) {
            out.push_back(r);
        }
    }
    return RangeSet::from_values(std::move(out));
}

/// Point with at most `max_support` coordinates drawn from `coords`, values 1..max_value.
inline UrysohnPoint point(Rng& rng, std::span<const Rational> coords, std::size_t max_support,
                          std::size_t max_value) {
    std::vector<Rational> pick(coords.begin(), coords.end());
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(std::min(uniform(rng, 0, max_support), pick.size()));
    UrysohnPoint out;
    for (const auto& r : pick) {
        out.set(r, BigInt(uniform(rng, 1, max_value)));
    }
    return out;
}

/// Ultrametric on `n` points from a random dendrogram: repeatedly merge two
/// clusters at a non-decreasing height taken from `heights` (ascending).
/// Equal consecutive heights produce non-binary nodes.
inline FiniteUltrametricSpace dendrogram_space(Rng& rng, std::size_t n,
                                               std::span<const Rational> heights) {
    std::vector<std::vector<std::size_t>> clusters(n);
    for (std::size_t i = 0; i < n; ++i) {
        clusters[i] = {i};
    }
    DistanceMatrix m(n, std::vector<Rational>(n, Rational(0)));
    std::size_t level = 0;
    while (clusters.size() > 1) {
        if (level + 1 < heights.size() && coin(rng, 0.6)) {
            level = uniform(rng, level + 1, std::min(heights.size() - 1, level + 2));
        }
        const auto& h = heights[level];
        std::size_t a = uniform(rng, 0, clusters.size() - 1);
        std::size_t b = uniform(rng, 0, clusters.size() - 2);
        if (b >= a) {
            ++b;
        }
        for (auto x : clusters[a]) {
            for (auto y : clusters[b]) {
                m[x][y] = h;
                m[y][x] = h;
            }
        }
        clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::string> labels;
    DistanceMatrix shuffled(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("x" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            shuffled[i][j] = m[order[i]][order[j]];
        }
    }
    return {std::move(labels), std::move(shuffled)};
}

/// Complete tree with `fanout` children per node and one height per level
/// (heights[0] is the lowest level). Every ball has the same number of blocks.
inline FiniteUltrametricSpace balanced_space(std::size_t fanout, std::span<const Rational> heights) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        n *= fanout;
    }
    DistanceMatrix m(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("b" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            std::size_t level = 0;
            for (std::size_t a = i, b = j; a != b; a /= fanout, b /= fanout) {
                ++level;
            }
            m[i][j] = heights[level - 1];
        }
    }
    return {std::move(labels), std::move(m)};
}

/// A random space with 1..max_points points. Mixes dendrogram spaces with
/// balanced ones so that highly haloed spaces show up too.
inline FiniteUltrametricSpace space(Rng& rng, std::size_t max_points) {
    max_points = std::max<std::size_t>(max_points, 1);
    if (coin(rng, 0.2)) {
        const std::size_t fanout = uniform(rng, 1, 3);
        std::size_t levels = 0;
        std::size_t size = 1;
        while (size * fanout <= max_points && levels < 3 && fanout > 1) {
            size *= fanout;
            ++levels;
        }
        levels = uniform(rng, levels == 0 ? 0 : 1, levels);
        return balanced_space(fanout, positive_rationals(rng, levels));
    }
    const std::size_t n = uniform(rng, 1, max_points);
    return dendrogram_space(rng, n, positive_rationals(rng, uniform(rng, 1, 5)));
}

/// Finite subset of size 1..max_points drawn from `pool`.
inline FiniteSubset subset_of(Rng& rng, const std::vector<UrysohnPoint>& pool, std::size_t max_points) {
    std::vector<UrysohnPoint> pick = pool;
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(std::min(uniform(rng, 1, max_points), pick.size()));
    return FiniteSubset::of(pick);
}

/// Pool of points that share prefixes, so that balls overlap in interesting ways.
inline std::vector<UrysohnPoint> clustered_pool(Rng& rng, std::span<const Rational> coords,
                                                std::size_t count) {
    std::vector<UrysohnPoint> pool{UrysohnPoint{}};
    while (pool.size() < count) {
        const auto& parent = pool[uniform(rng, 0, pool.size() - 1)];
        const auto& r = coords[uniform(rng, 0, coords.size() - 1)];
        UrysohnPoint child = parent.above(r);
        child.set(r, BigInt(uniform(rng, 1, 3)));
        if (coin(rng, 0.5)) {
            for (const auto& s : coords) {
                if (s < r && coin(rng, 0.4)) {
                    child.set(s, BigInt(uniform(rng, 1, 3)));
                }
            }
        }
        pool.push_back(std::move(child));
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

} // namespace urysohn::gen
