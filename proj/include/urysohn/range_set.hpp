#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace urysohn {

/// Finite set of admissible distance values. Strictly ascending, starts at 0.
class RangeSet {
public:
    /// The trivial range {0}.
    RangeSet() : values_{Rational(0)} {}

    /// Builds from any collection of values; sorts, deduplicates and adds 0.
    static RangeSet from_values(std::vector<Rational> values) {
        values.emplace_back(0);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        RangeSet out;
        out.values_ = std::move(values);
        return out;
    }

    static RangeSet from_values(std::initializer_list<Rational> values) {
        return from_values(std::vector<Rational>(values));
    }

    /// Strict constructor: the input must already be ascending, unique, and begin with 0.
    static RangeSet strict(std::vector<Rational> values) {
        if (values.empty() || !values.front().is_zero()) {
            throw InvalidArgument("range set must start with 0");
        }
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (!(values[i - 1] < values[i])) {
                throw InvalidArgument("range set must be strictly ascending");
            }
        }
        RangeSet out;
        out.values_ = std::move(values);
        return out;
    }

    [[nodiscard]] std::span<const Rational> values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }

    /// Values other than 0, ascending.
    [[nodiscard]] std::span<const Rational> nonzero() const {
        return std::span<const Rational>(values_).subspan(1);
    }

    [[nodiscard]] bool contains(const Rational& r) const {
        return std::binary_search(values_.begin(), values_.end(), r);
    }

    [[nodiscard]] RangeSet intersect(const RangeSet& other) const {
        std::vector<Rational> out;
        std::set_intersection(values_.begin(), values_.end(), other.values_.begin(),
                              other.values_.end(), std::back_inserter(out));
        return strict(std::move(out));
    }

    [[nodiscard]] RangeSet unite(const RangeSet& other) const {
        std::vector<Rational> out;
        std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                       std::back_inserter(out));
        return strict(std::move(out));
    }

    friend bool operator==(const RangeSet&, const RangeSet&) = default;

private:
    std::vector<Rational> values_;
};

} // namespace urysohn
