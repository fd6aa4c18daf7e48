#pragma once

// Brute-force reference implementations used only by the tests. Each one takes
// a different route from the library code it checks.

#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "urysohn/urysohn.hpp"

namespace oracle {

using urysohn::FiniteUltrametricSpace;
using urysohn::Rational;

/// Every (i, j, k) with i < j, k distinct, d(i,j) > max(d(i,k), d(k,j)), from all ordered triples.
inline std::set<std::tuple<std::size_t, std::size_t, std::size_t>> triangle_violations(
    const FiniteUltrametricSpace& s) {
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    const auto n = s.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) {
                    continue;
                }
                const auto& dxy = s.dist(x, y);
                if (dxy > s.dist(x, z) && dxy > s.dist(z, y)) {
                    out.emplace(std::min(x, y), std::max(x, y), z);
                }
            }
        }
    }
    return out;
}

/// Connected components of the threshold graph, via union-find, as sorted label sets.
inline std::set<std::set<std::string>> threshold_components(const FiniteUltrametricSpace& s, const Rational& r,
                                                            bool strict) {
    std::vector<std::size_t> parent(s.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
        parent[i] = i;
    }
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (strict ? s.dist(i, j) < r : s.dist(i, j) <= r) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::map<std::size_t, std::set<std::string>> groups;
    for (std::size_t i = 0; i < s.size(); ++i) {
        groups[find(i)].insert(s.label(i));
    }
    std::set<std::set<std::string>> out;
    for (auto& [root, g] : groups) {
        out.insert(g);
    }
    return out;
}

/// Largest r-equidistant subset of B(a, r), by enumerating every subset of the ball.
inline std::size_t max_equidistant_in_ball(const FiniteUltrametricSpace& s, std::size_t a, const Rational& r) {
    std::vector<std::size_t> ball;
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (s.dist(a, x) <= r) {
            ball.push_back(x);
        }
    }
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1U << ball.size()); ++mask) {
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < ball.size(); ++i) {
            if (mask & (1U << i)) {
                pick.push_back(ball[i]);
            }
        }
        bool equi = true;
        for (std::size_t i = 0; i < pick.size() && equi; ++i) {
            for (std::size_t j = i + 1; j < pick.size() && equi; ++j) {
                equi = s.dist(pick[i], pick[j]) == r;
            }
        }
        if (equi) {
            best = std::max(best, pick.size());
        }
    }
    return best;
}

inline bool haloed_by_subsets(const FiniteUltrametricSpace& s, const urysohn::RangeSet& range, std::size_t n) {
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (const auto& r : range.nonzero()) {
            if (max_equidistant_in_ball(s, a, r) < n) {
                return false;
            }
        }
    }
    return true;
}

/// Avoidance by bitmask enumeration over every subset A of every ball.
inline bool avoidant_by_masks(const FiniteUltrametricSpace& s, const urysohn::RangeSet& range, std::size_t n) {
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (const auto& r : range.nonzero()) {
            std::vector<std::size_t> ball;
            for (std::size_t x = 0; x < s.size(); ++x) {
                if (s.dist(a, x) <= r) {
                    ball.push_back(x);
                }
            }
            for (std::uint32_t mask = 0; mask < (1U << ball.size()); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) >= n) {
                    continue;
                }
                bool found = false;
                for (auto p : ball) {
                    bool ok = true;
                    for (std::size_t i = 0; i < ball.size(); ++i) {
                        if ((mask & (1U << i)) && s.dist(ball[i], p) != r) {
                            ok = false;
                        }
                    }
                    found = found || ok;
                }
                if (!found) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Sup-inf distance computed with explicit loops and no helper from the library.
inline Rational hausdorff(const std::set<urysohn::UrysohnPoint>& e, const std::set<urysohn::UrysohnPoint>& f) {
    auto directed = [](const auto& from, const auto& to) {
        Rational worst(0);
        for (const auto& a : from) {
            std::optional<Rational> best;
            for (const auto& b : to) {
                auto d = urysohn::delta(a, b);
                if (!best || d < *best) {
                    best = d;
                }
            }
            worst = urysohn::max(worst, *best);
        }
        return worst;
    };
    return urysohn::max(directed(e, f), directed(f, e));
}

} // namespace oracle

namespace oracle {

/// delta by scanning the union of both supports from the top.
inline Rational delta(const urysohn::UrysohnPoint& f, const urysohn::UrysohnPoint& g) {
    std::set<Rational> coords;
    for (const auto& [r, k] : f.support()) {
        coords.insert(r);
    }
    for (const auto& [r, k] : g.support()) {
        coords.insert(r);
    }
    for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
        if (f.at(*it) != g.at(*it)) {
            return *it;
        }
    }
    return Rational(0);
}

} // namespace oracle
