#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace urysohn::detail {

/// Visits every subset of `items` with at most `max_size` elements, smallest
/// sizes first, each subset in lexicographic index order. The visitor returns
/// false to stop; the function returns false iff it was stopped.
template <typename T, typename Visitor>
bool for_each_subset_upto(std::span<const T> items, std::size_t max_size, Visitor&& visit) {
    std::vector<T> current;
    auto recurse = [&](auto&& self, std::size_t start, std::size_t size) -> bool {
        if (current.size() == size) {
            return visit(std::span<const T>(current));
        }
        const std::size_t missing = size - current.size();
        for (std::size_t i = start; i + missing <= items.size(); ++i) {
            current.push_back(items[i]);
            if (!self(self, i + 1, size)) {
                return false;
            }
            current.pop_back();
        }
        return true;
    };
    for (std::size_t size = 0; size <= max_size && size <= items.size(); ++size) {
        if (!recurse(recurse, 0, size)) {
            return false;
        }
    }
    return true;
}

} // namespace urysohn::detail
