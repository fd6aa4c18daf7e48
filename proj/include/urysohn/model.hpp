#pragma once

#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "point.hpp"

namespace urysohn {

/// k-th member of the seed of `a` at radius r: copy `a` above r, put k at r,
/// clear everything below r.
///
/// Distinct k give points at distance exactly r from each other, and every
/// seed point lies in B(a, r). Index a(r) lands in the same open r-ball as a.
inline UrysohnPoint seed_point(const UrysohnPoint& a, const Rational& r, const BigInt& k) {
    if (r.is_zero()) {
        throw InvalidArgument("seed radius must be positive");
    }
    UrysohnPoint out = a.above(r);
    out.set(r, k);
    return out;
}

/// n points pairwise at distance r inside B(a, r): seed indices 0..n-1.
inline std::vector<UrysohnPoint> equidistant_family(const UrysohnPoint& a, const Rational& r,
                                                    std::size_t n) {
    if (r.is_zero()) {
        throw InvalidArgument("equidistant radius must be positive");
    }
    if (n == 0) {
        throw InvalidArgument("equidistant family size must be at least 1");
    }
    std::vector<UrysohnPoint> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(seed_point(a, r, BigInt(k)));
    }
    return out;
}

/// A point p in B(a, r) with delta(x, p) = r for every x in `avoid`.
///
/// Takes the smallest seed index whose seed point is at distance >= r from
/// every member of `avoid`; each member rules out at most one index, so some
/// k <= |avoid| always works.
inline UrysohnPoint avoidant_witness(const UrysohnPoint& a, const Rational& r,
                                     std::span<const UrysohnPoint> avoid) {
    if (r.is_zero()) {
        throw InvalidArgument("avoidant radius must be positive");
    }
    for (const auto& x : avoid) {
        if (r < delta(a, x)) {
            throw PreconditionError("point " + x.str() + " lies outside B(" + a.str() + ", " +
                                    r.str() + ")");
        }
    }
    for (std::size_t k = 0; k <= avoid.size(); ++k) {
        auto p = seed_point(a, r, BigInt(k));
        bool clear = true;
        for (const auto& x : avoid) {
            if (delta(x, p) < r) {
                clear = false;
                break;
            }
        }
        if (!clear) {
            continue;
        }
        if (r < delta(a, p)) {
            throw PostconditionError("avoidant witness left the ball");
        }
        for (const auto& x : avoid) {
            if (delta(x, p) != r) {
                throw PostconditionError("avoidant witness " + p.str() + " is not at distance " +
                                         r.str() + " from " + x.str());
            }
        }
        return p;
    }
    throw PostconditionError("no admissible seed index among the first " +
                             std::to_string(avoid.size() + 1));
}

} // namespace urysohn
