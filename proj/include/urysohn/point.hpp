#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace urysohn {

/// A point of the universal model: a finitely supported map from positive
/// rationals to nonnegative integers. Zero values are never stored, so two
/// points are equal exactly when their stored maps are equal.
///
/// Coordinates are kept in descending order, which is the order every
/// distance computation walks them in.
class UrysohnPoint {
public:
    using Support = std::map<Rational, BigInt, std::greater<>>;

    UrysohnPoint() = default;

    UrysohnPoint(std::initializer_list<std::pair<Rational, BigInt>> coords) {
        for (const auto& [r, k] : coords) {
            set(r, k);
        }
    }

    explicit UrysohnPoint(Support coords) {
        for (auto& [r, k] : coords) {
            set(r, k);
        }
    }

    /// Value at coordinate r (0 when absent).
    [[nodiscard]] BigInt at(const Rational& r) const {
        auto it = coords_.find(r);
        return it == coords_.end() ? BigInt(0) : it->second;
    }

    void set(const Rational& r, const BigInt& k) {
        if (r.is_zero()) {
            if (k != 0) {
                throw InvalidArgument("coordinate 0 must carry the value 0");
            }
            return;
        }
        if (k < 0) {
            throw InvalidArgument("coordinate values are nonnegative");
        }
        if (k == 0) {
            coords_.erase(r);
        } else {
            coords_[r] = k;
        }
    }

    [[nodiscard]] const Support& support() const { return coords_; }
    [[nodiscard]] bool empty() const { return coords_.empty(); }

    /// Largest stored coordinate, or 0 for the empty map.
    [[nodiscard]] Rational top() const { return coords_.empty() ? Rational(0) : coords_.begin()->first; }

    /// Coordinates strictly above r.
    [[nodiscard]] UrysohnPoint above(const Rational& r) const {
        UrysohnPoint out;
        for (auto it = coords_.begin(); it != coords_.end() && r < it->first; ++it) {
            out.coords_.emplace_hint(out.coords_.end(), *it);
        }
        return out;
    }

    [[nodiscard]] std::string str() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (const auto& [r, k] : coords_) {
            os << (first ? "" : ", ") << r << "->" << k;
            first = false;
        }
        os << '}';
        return os.str();
    }

    friend bool operator==(const UrysohnPoint&, const UrysohnPoint&) = default;
    /// Canonical total order: lexicographic on the descending (coordinate, value) pairs.
    friend bool operator<(const UrysohnPoint& a, const UrysohnPoint& b) { return a.coords_ < b.coords_; }

    friend std::ostream& operator<<(std::ostream& os, const UrysohnPoint& p) { return os << p.str(); }

private:
    Support coords_;
};

/// The max-difference ultrametric: the largest coordinate where f and g disagree.
inline Rational delta(const UrysohnPoint& f, const UrysohnPoint& g) {
    auto a = f.support().begin();
    auto b = g.support().begin();
    const auto a_end = f.support().end();
    const auto b_end = g.support().end();
    while (a != a_end && b != b_end) {
        if (a->first != b->first) {
            // The larger coordinate is stored (nonzero) on one side only.
            return max(a->first, b->first);
        }
        if (a->second != b->second) {
            return a->first;
        }
        ++a;
        ++b;
    }
    if (a != a_end) {
        return a->first;
    }
    if (b != b_end) {
        return b->first;
    }
    return Rational(0);
}

/// Canonical name of the closed ball B(a, radius) in the model.
struct BallKey {
    Rational radius;
    UrysohnPoint trace;

    friend bool operator==(const BallKey&, const BallKey&) = default;
    friend bool operator<(const BallKey& a, const BallKey& b) {
        if (a.radius != b.radius) {
            return a.radius < b.radius;
        }
        return a.trace < b.trace;
    }
};

inline BallKey ball_key(const UrysohnPoint& a, const Rational& radius) {
    return {radius, a.above(radius)};
}

} // namespace urysohn
