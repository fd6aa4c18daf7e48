#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "finite_space.hpp"
#include "hyperspace.hpp"
#include "injectivity.hpp"
#include "linear_algebra.hpp"
#include "model.hpp"
#include "petals.hpp"
#include "predicates.hpp"
#include "products.hpp"
#include "random.hpp"

/// The release acceptance criteria as runnable property suites. Shared by the
/// acceptance test binary and the `check` CLI verb. All comparisons are exact.
namespace urysohn::acceptance {

struct Config {
    std::uint64_t seed = 0x5eed2026;
    /// Overrides the per-criterion maximum number of points in generated spaces.
    std::optional<std::size_t> max_points;

    [[nodiscard]] std::size_t points(std::size_t fallback) const { return max_points.value_or(fallback); }
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::size_t cases = 0;
    double seconds = 0;
    /// Runtime target in seconds, when the criterion has one.
    std::optional<double> budget;
    std::string detail;
};

namespace detail {

/// Mixes the run seed with the criterion id so criteria are independent streams.
inline gen::Rng rng_for(const Config& cfg, int id) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(id)};
    return gen::Rng(seq);
}

struct Failure {
    std::string message;
};

inline void expect(bool condition, const std::string& message) {
    if (!condition) {
        throw Failure{message};
    }
}

template <typename Body>
CriterionResult run(int id, std::string title, std::optional<double> budget, Body&& body) {
    CriterionResult result{id, std::move(title), false, 0, 0, budget, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
        result.cases = body();
        result.passed = true;
    } catch (const Failure& f) {
        result.detail = f.message;
    } catch (const std::exception& e) {
        result.detail = std::string("unexpected exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.passed && budget && result.seconds > *budget) {
        result.passed = false;
        std::ostringstream os;
        os << "runtime " << result.seconds << " s exceeds the " << *budget << " s target";
        result.detail = os.str();
    }
    return result;
}

inline bool equidistant_in_ball(const std::vector<UrysohnPoint>& family, const UrysohnPoint& center,
                                const Rational& r) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (r < delta(center, family[i])) {
            return false;
        }
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (delta(family[i], family[j]) != r) {
                return false;
            }
        }
    }
    return true;
}

} // namespace detail

/// 1. delta is an ultrametric on random triples.
inline CriterionResult ultrametric_axioms(const Config& cfg) {
    return detail::run(1, "model delta is an ultrametric (10000 triples)", 5.0, [&] {
        auto rng = detail::rng_for(cfg, 1);
        const auto coords = gen::positive_rationals(rng, 12);
        std::size_t cases = 0;
        for (; cases < 10000; ++cases) {
            const auto f = gen::point(rng, coords, 6, 3);
            const auto g = gen::point(rng, coords, 6, 3);
            const auto h = gen::point(rng, coords, 6, 3);
            const auto fg = delta(f, g), gh = delta(g, h), fh = delta(f, h);
            detail::expect(fg == delta(g, f), "asymmetric delta on " + f.str() + ", " + g.str());
            detail::expect(delta(f, f).is_zero(), "delta(f, f) != 0 for " + f.str());
            detail::expect((fg.is_zero()) == (f == g), "identity of indiscernibles fails");
            detail::expect(fh <= max(fg, gh), "strong triangle fails on " + f.str() + ", " + g.str() +
                                                  ", " + h.str());
            detail::expect(fg.is_zero() || f.support().contains(fg) || g.support().contains(fg),
                           "delta value outside the supports");
        }
        return cases;
    });
}

/// 2. haloed = avoidant = one-point injective for every n <= 8.
inline CriterionResult three_way_equivalence(const Config& cfg) {
    return detail::run(2, "haloed = avoidant = injective (500 spaces, n <= 8)", 60.0, [&] {
        auto rng = detail::rng_for(cfg, 2);
        std::size_t cases = 0;
        for (std::size_t s = 0; s < 500; ++s) {
            const auto space = gen::space(rng, cfg.points(8));
            auto range = distance_set(space);
            if (s % 2 == 1) {
                // A range strictly larger than the distance set is also admissible.
                auto extra = gen::positive_rationals(rng, 1);
                range = range.unite(RangeSet::from_values(extra));
            }
            for (std::size_t n = 1; n <= 8; ++n, ++cases) {
                const bool h = is_haloed(space, range, n).holds;
                const bool a = is_avoidant(space, range, n).holds;
                const bool i = check_one_point_injectivity(space, range, n).holds;
                if (h != a || a != i) {
                    std::ostringstream os;
                    os << "space #" << s << " (" << space.size() << " points), n = " << n
                       << ": haloed=" << h << " avoidant=" << a << " injective=" << i;
                    throw detail::Failure{os.str()};
                }
            }
        }
        return cases;
    });
}

/// 3. Ball-family minimum equals sup-inf Hausdorff distance.
inline CriterionResult hausdorff_oracle(const Config& cfg) {
    return detail::run(3, "ball-family Hausdorff = sup-inf Hausdorff (2000 pairs)", 30.0, [&] {
        auto rng = detail::rng_for(cfg, 3);
        const auto coords = gen::positive_rationals(rng, 8);
        std::size_t cases = 0;
        for (; cases < 2000; ++cases) {
            const auto pool = gen::clustered_pool(rng, coords, 14);
            const auto e = gen::subset_of(rng, pool, cfg.points(8));
            const auto f = gen::subset_of(rng, pool, cfg.points(8));
            const auto supinf = hausdorff_supinf(e, f);
            const auto ballmin = hausdorff_ballmin(e, f);
            detail::expect(supinf == ballmin, "Hausdorff mismatch: sup-inf " + supinf.str() +
                                                  " vs ball-family " + ballmin.str());
            const auto candidates = hausdorff_candidates(e, f);
            detail::expect(std::binary_search(candidates.begin(), candidates.end(), ballmin),
                           "Hausdorff value " + ballmin.str() + " is not a pairwise distance");
        }
        return cases;
    });
}

/// 4. Hausdorff distance satisfies the strong triangle inequality.
inline CriterionResult hausdorff_ultrametric(const Config& cfg) {
    return detail::run(4, "Hausdorff strong triangle (2000 triples)", std::nullopt, [&] {
        auto rng = detail::rng_for(cfg, 4);
        const auto coords = gen::positive_rationals(rng, 8);
        std::size_t cases = 0;
        for (; cases < 2000; ++cases) {
            const auto pool = gen::clustered_pool(rng, coords, 14);
            const auto e = gen::subset_of(rng, pool, cfg.points(8));
            const auto f = gen::subset_of(rng, pool, cfg.points(8));
            const auto g = gen::subset_of(rng, pool, cfg.points(8));
            const auto ef = hausdorff_supinf(e, f), fg = hausdorff_supinf(f, g), eg = hausdorff_supinf(e, g);
            detail::expect(eg <= max(ef, fg), "Hausdorff strong triangle fails");
            detail::expect(ef <= max(eg, fg) && fg <= max(ef, eg), "Hausdorff strong triangle fails");
        }
        return cases;
    });
}

/// 5. embed_space is an exact isometry.
inline CriterionResult embedding_isometry(const Config& cfg) {
    return detail::run(5, "embedding preserves distances (500 spaces, <= 10 points)", std::nullopt, [&] {
        auto rng = detail::rng_for(cfg, 5);
        std::size_t cases = 0;
        for (; cases < 500; ++cases) {
            const auto space = gen::space(rng, cfg.points(10));
            UrysohnPoint base;
            if (gen::coin(rng, 0.3)) {
                auto coords = gen::positive_rationals(rng, 4);
                base = gen::point(rng, coords, 3, 3);
            }
            // extend_one_point re-checks its postcondition on every internal call.
            const auto img = embed_space(space, base);
            detail::expect(img.at(space.label(0)) == base, "first label not at the basepoint");
            for (std::size_t i = 0; i < space.size(); ++i) {
                for (std::size_t j = 0; j < space.size(); ++j) {
                    detail::expect(delta(img.at(space.label(i)), img.at(space.label(j))) == space.dist(i, j),
                                   "embedding distorts " + space.label(i) + ", " + space.label(j));
                }
            }
        }
        return cases;
    });
}

/// 6. Equidistant witnesses in the model, its hyperspace and its square.
inline CriterionResult haloed_witnesses(const Config& cfg) {
    return detail::run(6, "haloed witnesses: model, hyperspace (4 bounds), product", std::nullopt, [&] {
        auto rng = detail::rng_for(cfg, 6);
        const auto coords = gen::positive_rationals(rng, 10);
        std::size_t cases = 0;
        auto radius = [&] { return coords[gen::uniform(rng, 0, coords.size() - 1)]; };
        for (std::size_t c = 0; c < 200; ++c, ++cases) {
            const auto a = gen::point(rng, coords, 6, 4);
            const auto r = radius();
            const auto n = gen::uniform(rng, 1, 10);
            const auto family = equidistant_family(a, r, n);
            detail::expect(family.size() == n && detail::equidistant_in_ball(family, a, r),
                           "model equidistant family fails at " + a.str());
        }
        for (int mode = 0; mode < 4; ++mode) {
            for (std::size_t c = 0; c < 200; ++c, ++cases) {
                const auto pool = gen::clustered_pool(rng, coords, 10);
                const auto a = gen::subset_of(rng, pool, 5);
                const auto r = radius();
                const auto n = gen::uniform(rng, 1, 10);
                std::optional<std::size_t> m;
                std::optional<Rational> l;
                if (mode & 1) {
                    m = std::max<std::size_t>(2, a.size() + gen::uniform(rng, 0, 2));
                }
                if (mode & 2) {
                    l = max(a.diameter(), coords.front());
                    if (gen::coin(rng)) {
                        l = max(*l, coords[gen::uniform(rng, 0, coords.size() - 1)]);
                    }
                }
                const SymmetricProductBound bound(m, l);
                const auto family = hyperspace_equidistant_family(a, r, n, bound);
                detail::expect(family.size() == n, "hyperspace family has the wrong size");
                for (std::size_t i = 0; i < n; ++i) {
                    detail::expect(check_symmetric_product(family[i], bound), "hyperspace member violates the bound");
                    detail::expect(hausdorff_supinf(family[i], a) <= r, "hyperspace member outside the ball");
                    for (std::size_t j = i + 1; j < n; ++j) {
                        detail::expect(hausdorff_supinf(family[i], family[j]) == r,
                                       "hyperspace members not at distance r");
                    }
                }
            }
        }
        for (std::size_t c = 0; c < 200; ++c, ++cases) {
            const ProductPoint center{gen::point(rng, coords, 6, 4), gen::point(rng, coords, 6, 4)};
            const auto r = radius();
            const auto n = gen::uniform(rng, 1, 10);
            const auto family = product_equidistant_family(center, r, n);
            detail::expect(family.size() == n, "product family has the wrong size");
            for (std::size_t i = 0; i < n; ++i) {
                detail::expect(linf_distance(center, family[i]) <= r, "product member outside the ball");
                for (std::size_t j = i + 1; j < n; ++j) {
                    detail::expect(linf_distance(family[i], family[j]) == r, "product members not at distance r");
                }
            }
        }
        return cases;
    });
}

/// Brute-force search of the max system over the grid {0, 1/8, ..., 1}^4.
inline bool linf_grid_solvable(const LpTarget& target) {
    std::vector<Rational> grid;
    for (std::int64_t i = 0; i <= 8; ++i) {
        grid.emplace_back(i, 8);
    }
    for (const auto& x : grid) {
        for (const auto& y : grid) {
            for (const auto& z : grid) {
                for (const auto& w : grid) {
                    if (max(x, z) == target[0] && max(x, w) == target[1] && max(y, z) == target[2] &&
                        max(y, w) == target[3]) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

/// 7. Rank-3 certificate and unsolvable l_p targets.
inline CriterionResult lp_certificates(const Config& cfg) {
    return detail::run(7, "l_p product certificate: rank 3, p in {1, 2, inf} unsolvable", 10.0, [&] {
        std::size_t cases = 0;
        detail::expect(linalg::rank(lp_system_matrix()) == 3, "system matrix rank is not 3");
        ++cases;
        for (std::int64_t p : {1, 2}) {
            const auto exponent = Exponent::finite(Rational(p));
            const auto cert = lp_counterexample(exponent);
            const auto cond = lp_solvability_condition(exponent, cert.target);
            detail::expect(!cond.solvable && cond.defect != 0, "finite-p target is solvable");
            linalg::Vector rhs;
            for (const auto& r : cert.target) {
                rhs.push_back(r.pow(static_cast<unsigned>(p)).value());
            }
            detail::expect(!linalg::solve(lp_system_matrix(), rhs).has_value(),
                           "exact linear solve finds a solution for p = " + std::to_string(p));
            ++cases;
        }
        const auto cert = lp_counterexample(Exponent::infinity());
        detail::expect(!linf_grid_solvable(cert.target), "grid search solves the p = inf target");
        detail::expect(!linf_solve(cert.target).has_value(), "max system solves the p = inf target");
        ++cases;
        // Hyperplane condition vs. exact solve on random targets.
        auto rng = detail::rng_for(cfg, 7);
        std::vector<Rational> quarters{Rational(1, 2), Rational(5, 8), Rational(3, 4), Rational(7, 8), Rational(1)};
        for (int t = 0; t < 200; ++t, ++cases) {
            LpTarget target;
            for (auto& r : target) {
                r = quarters[gen::uniform(rng, 0, quarters.size() - 1)];
            }
            for (unsigned p : {1U, 2U}) {
                const auto cond = lp_solvability_condition(Exponent::finite(Rational(p)), target);
                linalg::Vector rhs;
                for (const auto& r : target) {
                    rhs.push_back(r.pow(p).value());
                }
                const bool solvable = linalg::solve(lp_system_matrix(), rhs).has_value();
                detail::expect(cond.solvable == solvable, "hyperplane condition disagrees with the exact solve");
            }
            detail::expect(linf_grid_solvable(target) == linf_solve(target).has_value(),
                           "grid search disagrees with the max-system solver");
        }
        return cases;
    });
}

/// 8. Inheritance distances agree with delta on generated heir trees.
inline CriterionResult inheritance_distances(const Config& cfg) {
    return detail::run(8, "inheritance distance = delta on heir trees (3 range sets)", std::nullopt, [&] {
        auto rng = detail::rng_for(cfg, 8);
        std::size_t cases = 0;
        for (int t = 0; t < 3; ++t) {
            const auto s = gen::range_set(rng, 4);
            const auto tree = generate_heirs(s, 3, 3);
            std::set<UrysohnPoint> endpoints;
            for (const auto& node : tree.nodes) {
                detail::expect(endpoints.insert(node.point()).second, "two heirs share an endpoint");
            }
            for (const auto& a : tree.nodes) {
                for (const auto& b : tree.nodes) {
                    ++cases;
                    detail::expect(heir_distance(a.inheritance, b.inheritance) == delta(a.point(), b.point()),
                                   "inheritance distance differs from delta for " + a.point().str() + ", " +
                                       b.point().str());
                }
            }
        }
        return cases;
    });
}

/// 9. Petal axioms on truncated pieces.
inline CriterionResult petal_properties(const Config& cfg) {
    return detail::run(9, "petal properties P2-P4, 1-Lipschitz retraction (100 configs)", std::nullopt, [&] {
        auto rng = detail::rng_for(cfg, 9);
        std::size_t cases = 0;
        for (; cases < 100; ++cases) {
            const auto universe = gen::range_set(rng, 8);
            const auto s = gen::sub_range(rng, universe);
            const auto t = gen::sub_range(rng, universe, 0.6);
            std::vector<UrysohnPoint> samples;
            for (int i = 0; i < 16; ++i) {
                const auto& coords = gen::coin(rng, 0.6) ? t : universe;
                samples.push_back(gen::point(rng, coords.nonzero(), 4, 3));
            }
            const auto report = check_petal_properties(s, t, samples);
            detail::expect(report.ok(), report.ok() ? "" : report.violations.front());
            for (const auto& x : samples) {
                if (!in_piece(x, t)) {
                    continue;
                }
                const auto d = distance_to_petal(x, s).distance;
                detail::expect(d.is_zero() || (t.contains(d) && !s.contains(d)),
                               "petal distance outside {0} u (T \\ S)");
            }
            for (const auto& x : samples) {
                for (const auto& y : samples) {
                    detail::expect(delta(distance_to_petal(x, s).nearest, distance_to_petal(y, s).nearest) <=
                                       delta(x, y),
                                   "retraction is not 1-Lipschitz");
                }
            }
        }
        return cases;
    });
}

/// 10. Re-embedded finite sets land in the piece of their distance set.
inline CriterionResult petal_cover(const Config& cfg) {
    return detail::run(10, "re-embedded K lies in the d(K^2)-piece (100 sets)", std::nullopt, [&] {
        auto rng = detail::rng_for(cfg, 10);
        std::size_t cases = 0;
        for (; cases < 100; ++cases) {
            const auto coords = gen::positive_rationals(rng, 6);
            const auto pool = gen::clustered_pool(rng, coords, 10);
            const auto k = gen::subset_of(rng, pool, cfg.points(6));
            const auto cover = build_petal_cover(k);
            detail::expect(cover.inside(), "re-embedded point outside the T-piece");
            std::vector<Rational> direct;
            for (const auto& a : k.points()) {
                for (const auto& b : k.points()) {
                    direct.push_back(delta(a, b));
                }
            }
            detail::expect(cover.t == RangeSet::from_values(direct), "T differs from d(K^2)");
        }
        return cases;
    });
}

inline std::vector<CriterionResult> run_all(const Config& cfg = {}) {
    return {ultrametric_axioms(cfg),    three_way_equivalence(cfg), hausdorff_oracle(cfg),
            hausdorff_ultrametric(cfg), embedding_isometry(cfg),    haloed_witnesses(cfg),
            lp_certificates(cfg),       inheritance_distances(cfg), petal_properties(cfg),
            petal_cover(cfg)};
}

} // namespace urysohn::acceptance
