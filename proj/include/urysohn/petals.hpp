#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "finite_space.hpp"
#include "hyperspace.hpp"
#include "injectivity.hpp"
#include "model.hpp"
#include "point.hpp"
#include "range_set.hpp"

namespace urysohn {

/// Base point of every inheritance: the empty map.
inline const UrysohnPoint& origin() {
    static const UrysohnPoint kOrigin;
    return kOrigin;
}

/// Chain origin = v0, v1, ..., vm of seed steps at strictly decreasing radii r0 > r1 > ...
struct Inheritance {
    std::vector<UrysohnPoint> points{origin()};
    std::vector<Rational> radii;

    [[nodiscard]] std::size_t length() const { return radii.size(); }
    [[nodiscard]] const UrysohnPoint& endpoint() const { return points.back(); }

    /// Appends the step to seed_point(endpoint, r, k).
    [[nodiscard]] Inheritance extended(const Rational& r, const BigInt& k) const {
        Inheritance out = *this;
        out.points.push_back(seed_point(endpoint(), r, k));
        out.radii.push_back(r);
        return out;
    }
};

struct InheritanceReport {
    std::vector<std::string> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// True when `next` is a member of the seed of `from` at radius r.
inline bool is_seed_step(const UrysohnPoint& from, const Rational& r, const UrysohnPoint& next) {
    return !r.is_zero() && next == seed_point(from, r, next.at(r));
}

/// Checks the five inheritance conditions with radii drawn from S.
inline InheritanceReport validate_inheritance(const Inheritance& inh, const RangeSet& s) {
    InheritanceReport report;
    auto& v = report.violations;
    if (inh.points.size() != inh.radii.size() + 1) {
        v.push_back("expected " + std::to_string(inh.radii.size() + 1) + " points for " +
                    std::to_string(inh.radii.size()) + " radii, got " +
                    std::to_string(inh.points.size()));
        return report;
    }
    if (inh.points.front() != origin()) {
        v.push_back("S1: first point " + inh.points.front().str() + " is not the origin");
    }
    for (std::size_t i = 0; i < inh.radii.size(); ++i) {
        const auto& r = inh.radii[i];
        const auto step = std::to_string(i);
        if (r.is_zero() || !s.contains(r)) {
            v.push_back("radius r" + step + " = " + r.str() + " is not a nonzero member of S");
        } else if (!is_seed_step(inh.points[i], r, inh.points[i + 1])) {
            v.push_back("S3: v" + std::to_string(i + 1) + " = " + inh.points[i + 1].str() +
                        " is not in the seed of v" + step + " at radius " + r.str());
        }
        if (inh.points[i] == inh.points[i + 1]) {
            v.push_back("S4: v" + step + " = v" + std::to_string(i + 1));
        }
        if (i + 1 < inh.radii.size() && !(inh.radii[i + 1] < r)) {
            v.push_back("S5: radii r" + step + " = " + r.str() + " and r" + std::to_string(i + 1) +
                        " = " + inh.radii[i + 1].str() + " are not strictly decreasing");
        }
    }
    return report;
}

/// Distance between two heirs read off their inheritances alone.
///
/// Past the longest common prefix of points, the answer is the larger of the two
/// diverging step radii; if one chain is a prefix of the other, it is the next
/// radius of the longer chain.
inline Rational heir_distance(const Inheritance& a, const Inheritance& b) {
    for (const auto* inh : {&a, &b}) {
        auto own = RangeSet::from_values(std::vector<Rational>(inh->radii));
        auto report = validate_inheritance(*inh, own);
        if (!report.ok()) {
            throw PreconditionError("invalid inheritance: " + report.violations.front());
        }
    }
    std::size_t k = 0;
    while (k + 1 < a.points.size() && k + 1 < b.points.size() && a.points[k + 1] == b.points[k + 1]) {
        ++k;
    }
    const std::size_t m = a.length();
    const std::size_t n = b.length();
    if (k == m && k == n) {
        return Rational(0);
    }
    if (k == m) {
        return b.radii[m];
    }
    if (k == n) {
        return a.radii[n];
    }
    return max(a.radii[k], b.radii[k]);
}

struct HeirNode {
    Inheritance inheritance;
    std::optional<std::size_t> parent;
    std::optional<Rational> step_radius;
    std::optional<BigInt> seed_index;

    [[nodiscard]] const UrysohnPoint& point() const { return inheritance.endpoint(); }
};

/// Truncated tree of S-heirs of the origin; nodes[0] is the root.
struct HeirTree {
    RangeSet range;
    std::size_t depth = 0;
    std::size_t branching = 0;
    std::vector<HeirNode> nodes;
};

/// Every inheritance of length <= depth whose seed indices lie in 1..branching.
/// Children are listed by ascending radius, then ascending index. Index 0 is never
/// used: along decreasing radii it reproduces the parent.
inline HeirTree generate_heirs(const RangeSet& s, std::size_t depth, std::size_t branching) {
    if (branching == 0) {
        throw InvalidArgument("branching must be at least 1");
    }
    HeirTree tree{s, depth, branching, {}};
    tree.nodes.push_back(HeirNode{Inheritance{}, std::nullopt, std::nullopt, std::nullopt});
    for (std::size_t cursor = 0; cursor < tree.nodes.size(); ++cursor) {
        if (tree.nodes[cursor].inheritance.length() >= depth) {
            continue;
        }
        const auto& radii = tree.nodes[cursor].inheritance.radii;
        const std::optional<Rational> last =
            radii.empty() ? std::nullopt : std::optional<Rational>(radii.back());
        for (const auto& r : s.nonzero()) {
            if (last && !(r < *last)) {
                break;
            }
            for (std::size_t k = 1; k <= branching; ++k) {
                auto child = tree.nodes[cursor].inheritance.extended(r, BigInt(k));
                tree.nodes.push_back(HeirNode{std::move(child), cursor, r, BigInt(k)});
            }
        }
    }
    for (const auto& node : tree.nodes) {
        auto report = validate_inheritance(node.inheritance, s);
        if (!report.ok()) {
            throw PostconditionError("generated inheritance is invalid: " + report.violations.front());
        }
    }
    return tree;
}

/// Whether x lies in the S-piece, i.e. its support is inside S.
inline bool in_piece(const UrysohnPoint& x, const RangeSet& s) {
    return std::all_of(x.support().begin(), x.support().end(),
                       [&](const auto& c) { return s.contains(c.first); });
}

struct PetalProjection {
    Rational distance;
    UrysohnPoint nearest;
};

/// Nearest point of the S-piece (restriction of x to S) and the distance to it
/// (largest coordinate of x outside S, or 0).
inline PetalProjection distance_to_petal(const UrysohnPoint& x, const RangeSet& s) {
    PetalProjection out{Rational(0), {}};
    for (const auto& [r, k] : x.support()) {
        if (s.contains(r)) {
            out.nearest.set(r, k);
        } else if (out.distance < r) {
            out.distance = r;
        }
    }
    if (delta(x, out.nearest) != out.distance) {
        throw PostconditionError("petal distance disagrees with delta to the nearest point");
    }
    return out;
}

/// Smallest range set whose piece contains x: {0} and the support of x.
inline RangeSet support_closure(const UrysohnPoint& x) {
    std::vector<Rational> values;
    for (const auto& [r, k] : x.support()) {
        values.push_back(r);
    }
    return RangeSet::from_values(std::move(values));
}

struct PetalReport {
    std::vector<std::string> violations;
    /// Samples skipped for the distance check because their support is not inside T.
    std::vector<std::string> skipped;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Finite checks of the petal axioms on the support-restricted pieces:
/// P2 (each sample lies in the piece of its support closure), P3 (pieces
/// intersect like their range sets), P4 (distance to the S-piece lies in
/// {0} u (T \ S) for samples in the T-piece), the finitary part of P1 (seed
/// families of S-piece points stay in the piece), plus exact minimality of the
/// projection and 1-Lipschitz retraction over the samples.
inline PetalReport check_petal_properties(const RangeSet& s, const RangeSet& t,
                                          const std::vector<UrysohnPoint>& samples) {
    PetalReport report;
    auto& bad = report.violations;
    const RangeSet s_and_t = s.intersect(t);
    std::vector<PetalProjection> proj;
    proj.reserve(samples.size());
    for (const auto& x : samples) {
        proj.push_back(distance_to_petal(x, s));
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& x = samples[i];
        if (!in_piece(x, support_closure(x))) {
            bad.push_back("P2: " + x.str() + " is outside the piece of its support");
        }
        if ((in_piece(x, s) && in_piece(x, t)) != in_piece(x, s_and_t)) {
            bad.push_back("P3: membership of " + x.str() + " disagrees with the intersection piece");
        }
        if (!in_piece(x, t)) {
            report.skipped.push_back(x.str());
        } else {
            const auto& d = proj[i].distance;
            if (!d.is_zero() && !(t.contains(d) && !s.contains(d))) {
                bad.push_back("P4: distance " + d.str() + " from " + x.str() + " is not in {0} u (T \\ S)");
            }
        }
        if (!in_piece(proj[i].nearest, s)) {
            bad.push_back("nearest point " + proj[i].nearest.str() + " is outside the S-piece");
        }
        if (in_piece(x, s)) {
            for (const auto& r : s.nonzero()) {
                for (const auto& q : equidistant_family(x, r, 3)) {
                    if (!in_piece(q, s)) {
                        bad.push_back("P1: seed point " + q.str() + " left the S-piece");
                    }
                }
            }
        }
        for (std::size_t j = 0; j < samples.size(); ++j) {
            const auto& y = samples[j];
            if (in_piece(y, s) && delta(x, y) < proj[i].distance) {
                bad.push_back("projection of " + x.str() + " is beaten by " + y.str());
            }
            if (j > i && delta(x, y) < delta(proj[i].nearest, proj[j].nearest)) {
                bad.push_back("retraction expands the pair " + x.str() + ", " + y.str());
            }
        }
    }
    return report;
}

struct PetalCover {
    RangeSet t;
    Embedding images;
    /// Labels whose re-embedded image has support outside T.
    std::vector<std::string> outside;
    [[nodiscard]] bool inside() const { return outside.empty(); }
};

/// The finite space (K, delta) with labels k0, k1, ... in canonical point order.
inline FiniteUltrametricSpace as_space(const FiniteSubset& k) {
    std::vector<UrysohnPoint> pts(k.points().begin(), k.points().end());
    std::vector<std::string> labels;
    DistanceMatrix m(pts.size(), std::vector<Rational>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        labels.push_back("k" + std::to_string(i));
        for (std::size_t j = 0; j < pts.size(); ++j) {
            m[i][j] = delta(pts[i], pts[j]);
        }
    }
    return {std::move(labels), std::move(m)};
}

/// T = distance set of K; re-embeds K from the origin and checks every image
/// lies in the T-piece.
inline PetalCover build_petal_cover(const FiniteSubset& k) {
    auto space = as_space(k);
    PetalCover cover{distance_set(space), embed_space(space, origin()), {}};
    for (const auto& [label, img] : cover.images) {
        if (!in_piece(img, cover.t)) {
            cover.outside.push_back(label);
        }
    }
    return cover;
}

} // namespace urysohn
