#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "range_set.hpp"
#include "rational.hpp"

namespace urysohn {

using DistanceMatrix = std::vector<std::vector<Rational>>;

/// A labeled finite point set with an exact distance matrix.
///
/// Construction only checks structure (square matrix matching the label count,
/// distinct labels). The metric axioms are checked by validate_ultrametric();
/// matrix order is the canonical point order used for every tie-break.
class FiniteUltrametricSpace {
public:
    FiniteUltrametricSpace(std::vector<std::string> labels, DistanceMatrix dist,
                           std::optional<RangeSet> range = std::nullopt)
        : labels_(std::move(labels)), dist_(std::move(dist)), range_(std::move(range)) {
        if (dist_.size() != labels_.size()) {
            throw StructuralError("distance matrix has " + std::to_string(dist_.size()) +
                                  " rows for " + std::to_string(labels_.size()) + " labels");
        }
        for (std::size_t i = 0; i < dist_.size(); ++i) {
            if (dist_[i].size() != labels_.size()) {
                throw StructuralError("distance matrix row " + std::to_string(i) + " has " +
                                      std::to_string(dist_[i].size()) + " entries, expected " +
                                      std::to_string(labels_.size()));
            }
        }
        index_.reserve(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], i).second) {
                throw StructuralError("duplicate label '" + labels_[i] + "'");
            }
        }
    }

    /// n points named p1..pn, pairwise at distance d.
    static FiniteUltrametricSpace equilateral(std::size_t n, const Rational& d) {
        std::vector<std::string> labels;
        DistanceMatrix m(n, std::vector<Rational>(n, d));
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back("p" + std::to_string(i + 1));
            m[i][i] = Rational(0);
        }
        return {std::move(labels), std::move(m)};
    }

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
    [[nodiscard]] const DistanceMatrix& matrix() const { return dist_; }
    [[nodiscard]] const std::optional<RangeSet>& range() const { return range_; }

    [[nodiscard]] const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i][j]; }
    [[nodiscard]] const Rational& dist(const std::string& a, const std::string& b) const {
        return dist_[index_of(a)][index_of(b)];
    }

    [[nodiscard]] bool contains(const std::string& label) const { return index_.contains(label); }

    [[nodiscard]] std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) {
            throw LookupError("unknown label '" + label + "'");
        }
        return it->second;
    }

    /// Restriction to the given indices, in the given order. The range is kept.
    [[nodiscard]] FiniteUltrametricSpace subspace(const std::vector<std::size_t>& indices) const {
        std::vector<std::string> labels;
        DistanceMatrix m(indices.size(), std::vector<Rational>(indices.size()));
        for (std::size_t a = 0; a < indices.size(); ++a) {
            labels.push_back(labels_.at(indices[a]));
            for (std::size_t b = 0; b < indices.size(); ++b) {
                m[a][b] = dist_[indices[a]][indices[b]];
            }
        }
        return {std::move(labels), std::move(m), range_};
    }

    [[nodiscard]] FiniteUltrametricSpace with_range(std::optional<RangeSet> range) const {
        return {labels_, dist_, std::move(range)};
    }

    [[nodiscard]] Rational diameter() const {
        Rational out(0);
        for (const auto& row : dist_) {
            for (const auto& v : row) {
                out = max(out, v);
            }
        }
        return out;
    }

private:
    std::vector<std::string> labels_;
    DistanceMatrix dist_;
    std::optional<RangeSet> range_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct Violation {
    enum class Kind { NonzeroDiagonal, ZeroOffDiagonal, Asymmetric, StrongTriangle, OutOfRange };

    Kind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    /// Middle point of a strong-triangle violation: dist(i,j) > max(dist(i,k), dist(k,j)).
    std::optional<std::size_t> k;

    friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string describe(const Violation& v, const FiniteUltrametricSpace& space) {
    std::ostringstream os;
    const auto& a = space.label(v.i);
    const auto& b = space.label(v.j);
    switch (v.kind) {
    case Violation::Kind::NonzeroDiagonal:
        os << "d(" << a << "," << a << ") = " << space.dist(v.i, v.i) << " is not 0";
        break;
    case Violation::Kind::ZeroOffDiagonal:
        os << "d(" << a << "," << b << ") = 0 for distinct points";
        break;
    case Violation::Kind::Asymmetric:
        os << "d(" << a << "," << b << ") = " << space.dist(v.i, v.j) << " but d(" << b << ","
           << a << ") = " << space.dist(v.j, v.i);
        break;
    case Violation::Kind::StrongTriangle: {
        const auto& c = space.label(*v.k);
        os << "strong triangle (" << a << "," << b << "," << c << "): d(" << a << "," << b
           << ") = " << space.dist(v.i, v.j) << " > max(" << space.dist(v.i, *v.k) << ", "
           << space.dist(*v.k, v.j) << ")";
        break;
    }
    case Violation::Kind::OutOfRange:
        os << "d(" << a << "," << b << ") = " << space.dist(v.i, v.j) << " is not in the range set";
        break;
    }
    return os.str();
}

struct ValidationReport {
    std::vector<Violation> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks every ultrametric axiom and reports each violation with its witnessing indices.
/// Triangle violations are reported as (i, j, k) with i < j and k the middle point.
inline ValidationReport validate_ultrametric(const FiniteUltrametricSpace& space) {
    ValidationReport report;
    const std::size_t n = space.size();
    using Kind = Violation::Kind;
    for (std::size_t i = 0; i < n; ++i) {
        if (!space.dist(i, i).is_zero()) {
            report.violations.push_back({Kind::NonzeroDiagonal, i, i, std::nullopt});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (space.dist(i, j) != space.dist(j, i)) {
                report.violations.push_back({Kind::Asymmetric, i, j, std::nullopt});
            }
            if (space.dist(i, j).is_zero() || space.dist(j, i).is_zero()) {
                report.violations.push_back({Kind::ZeroOffDiagonal, i, j, std::nullopt});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) {
                    continue;
                }
                if (max(space.dist(i, k), space.dist(k, j)) < space.dist(i, j)) {
                    report.violations.push_back({Kind::StrongTriangle, i, j, k});
                }
            }
        }
    }
    if (space.range()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!space.range()->contains(space.dist(i, j))) {
                    report.violations.push_back({Kind::OutOfRange, i, j, std::nullopt});
                }
            }
        }
    }
    return report;
}

inline void require_valid(const FiniteUltrametricSpace& space, std::string_view what = "space") {
    auto report = validate_ultrametric(space);
    if (!report.ok()) {
        throw PreconditionError(std::string(what) + " is not an ultrametric space: " +
                                describe(report.violations.front(), space));
    }
}

/// Indices x with d(center, x) <= radius, in canonical order.
inline std::vector<std::size_t> closed_ball_indices(const FiniteUltrametricSpace& space,
                                                    std::size_t center, const Rational& radius) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < space.size(); ++x) {
        if (space.dist(center, x) <= radius) {
            out.push_back(x);
        }
    }
    return out;
}

inline std::vector<std::string> closed_ball(const FiniteUltrametricSpace& space,
                                            const std::string& center, const Rational& radius) {
    std::vector<std::string> out;
    for (auto x : closed_ball_indices(space, space.index_of(center), radius)) {
        out.push_back(space.label(x));
    }
    return out;
}

using Partition = std::vector<std::vector<std::string>>;

/// Partition by d < radius (strict) or d <= radius. Blocks are ordered by their
/// first member; members keep canonical order.
inline Partition ball_partition(const FiniteUltrametricSpace& space, const Rational& radius,
                                bool strict) {
    if (strict && radius.is_zero()) {
        throw InvalidArgument("strict ball partition needs a positive radius");
    }
    auto related = [&](std::size_t x, std::size_t y) {
        return strict ? space.dist(x, y) < radius : space.dist(x, y) <= radius;
    };
    const std::size_t n = space.size();
    std::vector<std::size_t> block_of(n, n);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t x = 0; x < n; ++x) {
        if (block_of[x] != n) {
            continue;
        }
        blocks.emplace_back();
        for (std::size_t y = x; y < n; ++y) {
            if (block_of[y] == n && related(x, y)) {
                block_of[y] = blocks.size() - 1;
                blocks.back().push_back(y);
            }
        }
    }
    // The relation is an equivalence only under the strong triangle inequality.
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (related(x, y) != (block_of[x] == block_of[y])) {
                throw PostconditionError("ball relation is not transitive between '" +
                                         space.label(x) + "' and '" + space.label(y) + "'");
            }
        }
    }
    Partition out;
    for (const auto& block : blocks) {
        auto& labels = out.emplace_back();
        for (auto x : block) {
            labels.push_back(space.label(x));
        }
    }
    return out;
}

/// All pairwise distances together with 0.
inline RangeSet distance_set(const FiniteUltrametricSpace& space) {
    std::vector<Rational> values;
    for (const auto& row : space.matrix()) {
        values.insert(values.end(), row.begin(), row.end());
    }
    return RangeSet::from_values(std::move(values));
}

namespace detail {

/// Order-preserving integer image of the distance matrix plus some extra values.
/// Every order-theoretic question about the space can be answered on ranks.
/// Radii passed to ball() must be ranks of values that were supplied here.
struct OrdinalSpace {
    std::size_t n = 0;
    std::vector<Rational> values; // ascending, unique
    std::vector<std::uint32_t> rank;

    OrdinalSpace(const FiniteUltrametricSpace& space, std::span<const Rational> extra) : n(space.size()) {
        for (const auto& row : space.matrix()) {
            values.insert(values.end(), row.begin(), row.end());
        }
        values.insert(values.end(), extra.begin(), extra.end());
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        rank.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                rank[i * n + j] = rank_of(space.dist(i, j));
            }
        }
    }

    [[nodiscard]] std::uint32_t rank_of(const Rational& r) const {
        auto it = std::lower_bound(values.begin(), values.end(), r);
        return static_cast<std::uint32_t>(it - values.begin());
    }

    [[nodiscard]] std::uint32_t d(std::size_t i, std::size_t j) const { return rank[i * n + j]; }

    [[nodiscard]] std::vector<std::size_t> ball(std::size_t center, std::uint32_t r) const {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < n; ++x) {
            if (d(center, x) <= r) {
                out.push_back(x);
            }
        }
        return out;
    }
};

} // namespace detail

} // namespace urysohn
