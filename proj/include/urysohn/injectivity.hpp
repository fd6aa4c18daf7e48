#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detail/subsets.hpp"
#include "errors.hpp"
#include "finite_space.hpp"
#include "model.hpp"
#include "point.hpp"

namespace urysohn {

/// A finite space Y + {theta} together with an isometric image of Y in the model.
struct ExtensionProblem {
    FiniteUltrametricSpace base;
    std::string theta;
    std::map<std::string, UrysohnPoint> phi;

    /// Throws PreconditionError unless base is an ultrametric, phi covers exactly
    /// base minus theta (nonempty), and phi preserves every distance.
    void validate() const {
        require_valid(base, "extension base");
        if (!base.contains(theta)) {
            throw PreconditionError("theta label '" + theta + "' is not in the base space");
        }
        if (phi.size() + 1 != base.size()) {
            throw PreconditionError("phi must map every base label except theta");
        }
        if (phi.empty()) {
            throw PreconditionError("extension needs a nonempty Y");
        }
        for (const auto& [y, img] : phi) {
            if (y == theta || !base.contains(y)) {
                throw PreconditionError("phi maps unexpected label '" + y + "'");
            }
        }
        for (const auto& [y, fy] : phi) {
            for (const auto& [z, fz] : phi) {
                if (delta(fy, fz) != base.dist(y, z)) {
                    throw PreconditionError("phi is not isometric on ('" + y + "', '" + z +
                                            "'): " + delta(fy, fz).str() + " vs " +
                                            base.dist(y, z).str());
                }
            }
        }
    }
};

/// Image point for theta realizing every prescribed distance e(y, theta).
///
/// r = min e(y, theta), q = first label attaining it, A = phi(Y) within r of
/// phi(q); the answer is an avoidant witness for A in B(phi(q), r).
inline UrysohnPoint extend_one_point(const ExtensionProblem& problem) {
    problem.validate();
    const auto& base = problem.base;
    const std::size_t theta = base.index_of(problem.theta);

    std::optional<std::size_t> q;
    for (std::size_t y = 0; y < base.size(); ++y) {
        if (y != theta && (!q || base.dist(y, theta) < base.dist(*q, theta))) {
            q = y;
        }
    }
    const Rational r = base.dist(*q, theta);
    const UrysohnPoint& center = problem.phi.at(base.label(*q));

    std::vector<UrysohnPoint> avoid;
    for (std::size_t y = 0; y < base.size(); ++y) {
        if (y == theta) {
            continue;
        }
        const auto& img = problem.phi.at(base.label(y));
        if (delta(img, center) <= r) {
            avoid.push_back(img);
        }
    }
    UrysohnPoint t = avoidant_witness(center, r, avoid);

    for (const auto& [y, img] : problem.phi) {
        if (delta(img, t) != base.dist(y, problem.theta)) {
            throw PostconditionError("extension point " + t.str() + " is at distance " +
                                     delta(img, t).str() + " from '" + y + "', expected " +
                                     base.dist(y, problem.theta).str());
        }
    }
    return t;
}

using Embedding = std::map<std::string, UrysohnPoint>;

/// Isometric embedding of a finite ultrametric space into the model, built
/// by one-point extensions in label order. The first label goes to `basepoint`.
inline Embedding embed_space(const FiniteUltrametricSpace& space,
                             const UrysohnPoint& basepoint = UrysohnPoint{}) {
    require_valid(space);
    Embedding out;
    if (space.size() == 0) {
        return out;
    }
    out.emplace(space.label(0), basepoint);
    std::vector<std::size_t> prefix{0};
    for (std::size_t i = 1; i < space.size(); ++i) {
        prefix.push_back(i);
        ExtensionProblem problem{space.subspace(prefix).with_range(std::nullopt), space.label(i), out};
        out.emplace(space.label(i), extend_one_point(problem));
    }
    for (std::size_t i = 0; i < space.size(); ++i) {
        for (std::size_t j = 0; j < space.size(); ++j) {
            if (delta(out.at(space.label(i)), out.at(space.label(j))) != space.dist(i, j)) {
                throw PostconditionError("embedding is not isometric on ('" + space.label(i) +
                                         "', '" + space.label(j) + "')");
            }
        }
    }
    return out;
}

/// A one-point extension Y + {theta} of a subspace Y that no point of X realizes.
struct InjectivityFailure {
    std::vector<std::string> subset;
    /// e(y, theta) for each member of `subset`, same order.
    std::vector<Rational> distances;
};

struct InjectivityResult {
    bool holds = false;
    std::optional<InjectivityFailure> failure;
};

/// Exhaustive one-point injectivity: for every Y within X with 1 <= |Y| <= n - 1
/// (so |Y + {theta}| <= n) and every range-valued ultrametric extension of Y by a
/// new point theta, some t in X has d(y, t) = e(y, theta) for all y in Y.
///
/// This is the extension property for the class of spaces with fewer than n + 1
/// points. Distance vectors violating the strong triangle inequality are skipped.
inline InjectivityResult check_one_point_injectivity(const FiniteUltrametricSpace& space,
                                                     const RangeSet& range, std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("injectivity cardinality must be at least 1");
    }
    const detail::OrdinalSpace ord(space, range.values());
    std::vector<std::uint32_t> candidates;
    for (const auto& r : range.nonzero()) {
        candidates.push_back(ord.rank_of(r));
    }
    std::vector<std::size_t> all(space.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }

    std::optional<InjectivityFailure> failure;
    auto realized = [&](std::span<const std::size_t> ys, const std::vector<std::uint32_t>& e) {
        for (std::size_t t = 0; t < ord.n; ++t) {
            bool ok = true;
            for (std::size_t i = 0; i < ys.size(); ++i) {
                if (ord.d(ys[i], t) != e[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                return true;
            }
        }
        return false;
    };

    detail::for_each_subset_upto<std::size_t>(all, n - 1, [&](std::span<const std::size_t> ys) {
        if (ys.empty()) {
            return true;
        }
        std::vector<std::uint32_t> e;
        auto assign = [&](auto&& self) -> bool {
            const std::size_t i = e.size();
            if (i == ys.size()) {
                if (realized(ys, e)) {
                    return true;
                }
                InjectivityFailure f;
                for (std::size_t j = 0; j < ys.size(); ++j) {
                    f.subset.push_back(space.label(ys[j]));
                    f.distances.push_back(ord.values[e[j]]);
                }
                failure = std::move(f);
                return false;
            }
            for (auto v : candidates) {
                bool feasible = true;
                for (std::size_t j = 0; j < i && feasible; ++j) {
                    const auto dij = ord.d(ys[i], ys[j]);
                    feasible = v <= std::max(e[j], dij) && e[j] <= std::max(v, dij) &&
                               dij <= std::max(v, e[j]);
                }
                if (!feasible) {
                    continue;
                }
                e.push_back(v);
                if (!self(self)) {
                    return false;
                }
                e.pop_back();
            }
            return true;
        };
        return assign(assign);
    });
    return InjectivityResult{!failure.has_value(), std::move(failure)};
}

} // namespace urysohn
