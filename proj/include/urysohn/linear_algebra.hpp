#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace urysohn::linalg {

using Matrix = std::vector<std::vector<SignedRational>>;
using Vector = std::vector<SignedRational>;

struct Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over the rationals.
inline Echelon row_reduce(Matrix m) {
    Echelon out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[row], m[pivot]);
        const SignedRational lead = m[row][col];
        for (auto& v : m[row]) {
            v /= lead;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) {
                continue;
            }
            const SignedRational factor = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) {
                m[r][c] -= factor * m[row][c];
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

struct Solution {
    Vector particular;     // free variables set to 0
    std::vector<Vector> kernel; // basis of the null space
};

/// All solutions of m * x = b, or nullopt when the system is inconsistent.
inline std::optional<Solution> solve(const Matrix& m, const Vector& b) {
    if (m.size() != b.size()) {
        throw StructuralError("right-hand side does not match the row count");
    }
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    Matrix augmented = m;
    for (std::size_t r = 0; r < m.size(); ++r) {
        augmented[r].push_back(b[r]);
    }
    auto ech = row_reduce(std::move(augmented));
    if (!ech.pivots.empty() && ech.pivots.back() == cols) {
        return std::nullopt;
    }
    Solution sol;
    sol.particular.assign(cols, 0);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        sol.particular[ech.pivots[r]] = ech.reduced[r][cols];
        is_pivot[ech.pivots[r]] = true;
    }
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            v[ech.pivots[r]] = -ech.reduced[r][free];
        }
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

} // namespace urysohn::linalg
