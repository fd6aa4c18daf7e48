#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "model.hpp"
#include "point.hpp"

namespace urysohn {

/// Nonempty finite set of model points, iterated in canonical point order.
class FiniteSubset {
public:
    explicit FiniteSubset(std::set<UrysohnPoint> points) : points_(std::move(points)) {
        if (points_.empty()) {
            throw InvalidArgument("finite subset must be nonempty");
        }
    }

    FiniteSubset(std::initializer_list<UrysohnPoint> points)
        : FiniteSubset(std::set<UrysohnPoint>(points)) {}

    template <typename Range>
    static FiniteSubset of(const Range& points) {
        return FiniteSubset(std::set<UrysohnPoint>(std::begin(points), std::end(points)));
    }

    [[nodiscard]] const std::set<UrysohnPoint>& points() const { return points_; }
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const UrysohnPoint& first() const { return *points_.begin(); }

    [[nodiscard]] Rational diameter() const {
        Rational out(0);
        for (const auto& a : points_) {
            for (const auto& b : points_) {
                out = max(out, delta(a, b));
            }
        }
        return out;
    }

    friend bool operator==(const FiniteSubset&, const FiniteSubset&) = default;
    friend bool operator<(const FiniteSubset& a, const FiniteSubset& b) { return a.points_ < b.points_; }

private:
    std::set<UrysohnPoint> points_;
};

/// Symmetric-product constraint: at most m points and diameter at most l.
/// An empty optional means no constraint on that quantity.
struct SymmetricProductBound {
    std::optional<std::size_t> m;
    std::optional<Rational> l;

    SymmetricProductBound() = default;
    SymmetricProductBound(std::optional<std::size_t> max_card, std::optional<Rational> max_diam)
        : m(max_card), l(std::move(max_diam)) {
        if (m && *m < 2) {
            throw InvalidArgument("symmetric product cardinality bound must be at least 2");
        }
        if (l && l->is_zero()) {
            throw InvalidArgument("symmetric product diameter bound must be positive");
        }
    }

    static SymmetricProductBound unbounded() { return {}; }
};

inline bool check_symmetric_product(const FiniteSubset& e, const SymmetricProductBound& bound) {
    if (bound.m && e.size() > *bound.m) {
        return false;
    }
    return !bound.l || e.diameter() <= *bound.l;
}

inline Rational point_to_set(const UrysohnPoint& a, const FiniteSubset& f) {
    std::optional<Rational> best;
    for (const auto& b : f.points()) {
        auto d = delta(a, b);
        if (!best || d < *best) {
            best = std::move(d);
        }
    }
    return *best;
}

/// Hausdorff distance as the larger of the two directed sup-inf distances.
inline Rational hausdorff_supinf(const FiniteSubset& e, const FiniteSubset& f) {
    Rational out(0);
    for (const auto& a : e.points()) {
        out = max(out, point_to_set(a, f));
    }
    for (const auto& b : f.points()) {
        out = max(out, point_to_set(b, e));
    }
    return out;
}

/// The closed r-balls centered at members of E, as canonical keys.
inline std::set<BallKey> ball_family(const FiniteSubset& e, const Rational& r) {
    std::set<BallKey> out;
    for (const auto& a : e.points()) {
        out.insert(ball_key(a, r));
    }
    return out;
}

/// Radii at which the Hausdorff value can sit: 0 and every distance inside E u F.
inline std::vector<Rational> hausdorff_candidates(const FiniteSubset& e, const FiniteSubset& f) {
    std::vector<UrysohnPoint> all(e.points().begin(), e.points().end());
    all.insert(all.end(), f.points().begin(), f.points().end());
    std::vector<Rational> out{Rational(0)};
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            out.push_back(delta(all[i], all[j]));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Hausdorff distance as the least radius at which E and F have the same ball family.
inline Rational hausdorff_ballmin(const FiniteSubset& e, const FiniteSubset& f) {
    for (const auto& r : hausdorff_candidates(e, f)) {
        if (ball_family(e, r) == ball_family(f, r)) {
            return r;
        }
    }
    // Unreachable: at the largest candidate both families are the single ball around E u F.
    throw PostconditionError("no candidate radius equalizes the ball families");
}

/// n subsets pairwise at Hausdorff distance r, each within r of A, each obeying `bound`.
///
/// With x the first point of A and q_0..q_{n-1} an r-equidistant family around x,
/// the k-th subset replaces the part of A inside B(x, r) by the single point q_k.
inline std::vector<FiniteSubset> hyperspace_equidistant_family(const FiniteSubset& a,
                                                               const Rational& r, std::size_t n,
                                                               const SymmetricProductBound& bound) {
    if (!check_symmetric_product(a, bound)) {
        throw PreconditionError("center set violates the symmetric product bound");
    }
    const UrysohnPoint& x = a.first();
    std::set<UrysohnPoint> outside;
    for (const auto& p : a.points()) {
        if (r < delta(x, p)) {
            outside.insert(p);
        }
    }
    std::vector<FiniteSubset> out;
    for (auto& q : equidistant_family(x, r, n)) {
        auto points = outside;
        points.insert(std::move(q));
        out.emplace_back(std::move(points));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!check_symmetric_product(out[i], bound) || r < hausdorff_supinf(out[i], a)) {
            throw PostconditionError("hyperspace family member left the bound or the ball");
        }
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            if (hausdorff_supinf(out[i], out[j]) != r) {
                throw PostconditionError("hyperspace family is not equidistant");
            }
        }
    }
    return out;
}

} // namespace urysohn
