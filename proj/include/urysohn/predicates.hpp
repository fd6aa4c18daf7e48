#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "detail/subsets.hpp"
#include "errors.hpp"
#include "finite_space.hpp"
#include "range_set.hpp"

namespace urysohn {

/// An r-equidistant subset of the closed ball B(center, radius).
struct HaloWitness {
    std::string center;
    Rational radius;
    std::vector<std::string> points;
};

struct HaloedResult {
    bool holds = false;
    /// One witness per (center, nonzero radius) when holds; empty otherwise.
    std::vector<HaloWitness> witnesses;
    /// First (center, radius) whose ball has too few strict blocks, with the best witness found.
    std::optional<HaloWitness> failure;
};

struct AvoidantCounterexample {
    std::string center;
    Rational radius;
    std::vector<std::string> avoided;
};

struct AvoidantResult {
    bool holds = false;
    std::optional<AvoidantCounterexample> counterexample;
};

/// (range, n)-haloed test. The largest r-equidistant subset of B(a, r) has exactly
/// one point per class of x ~ y :<=> d(x, y) < r, so counting classes decides it.
inline HaloedResult is_haloed(const FiniteUltrametricSpace& space, const RangeSet& range,
                              std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("haloed cardinality must be at least 1");
    }
    const detail::OrdinalSpace ord(space, range.values());
    HaloedResult result;
    result.holds = true;
    for (std::size_t a = 0; a < space.size(); ++a) {
        for (const auto& r : range.nonzero()) {
            const auto rr = ord.rank_of(r);
            HaloWitness witness{space.label(a), r, {}};
            std::vector<std::size_t> reps;
            for (auto x : ord.ball(a, rr)) {
                bool fresh = true;
                for (auto y : reps) {
                    if (ord.d(x, y) < rr) {
                        fresh = false;
                        break;
                    }
                }
                if (fresh) {
                    reps.push_back(x);
                    witness.points.push_back(space.label(x));
                }
            }
            if (reps.size() < n) {
                return HaloedResult{false, {}, std::move(witness)};
            }
            result.witnesses.push_back(std::move(witness));
        }
    }
    return result;
}

/// (range, n)-avoidant test by exhaustive search over subsets A of each ball with |A| < n.
inline AvoidantResult is_avoidant(const FiniteUltrametricSpace& space, const RangeSet& range,
                                  std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("avoidant cardinality must be at least 1");
    }
    const detail::OrdinalSpace ord(space, range.values());
    for (const auto& r : range.nonzero()) {
        const auto rr = ord.rank_of(r);
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t a = 0; a < space.size(); ++a) {
            auto ball = ord.ball(a, rr);
            if (!seen.insert(ball).second) {
                continue; // same ball, same answer
            }
            std::optional<AvoidantCounterexample> bad;
            detail::for_each_subset_upto<std::size_t>(ball, n - 1, [&](std::span<const std::size_t> avoided) {
                for (auto p : ball) {
                    bool ok = true;
                    for (auto x : avoided) {
                        if (ord.d(x, p) != rr) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        return true;
                    }
                }
                AvoidantCounterexample cx{space.label(a), r, {}};
                for (auto x : avoided) {
                    cx.avoided.push_back(space.label(x));
                }
                bad = std::move(cx);
                return false;
            });
            if (bad) {
                return AvoidantResult{false, std::move(bad)};
            }
        }
    }
    return AvoidantResult{true, std::nullopt};
}

} // namespace urysohn
