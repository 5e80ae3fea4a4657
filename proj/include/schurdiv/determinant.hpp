#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace schurdiv {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <typename T>
void check_square(const Matrix<T>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant: matrix not square");
}

// Minor over rows depth..n-1 and the columns whose bits are clear in `used`.
template <typename T>
T laplace_minor(const Matrix<T>& m, std::size_t depth, unsigned used,
                std::unordered_map<unsigned, T>& memo) {
    const std::size_t n = m.size();
    if (depth == n) return T(1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    T acc(0);
    bool negative = false;
    for (std::size_t col = 0; col < n; ++col) {
        if (used & (1u << col)) continue;
        T sub = laplace_minor(m, depth + 1, used | (1u << col), memo);
        T term = m[depth][col] * sub;
        acc = negative ? acc - term : acc + term;
        negative = !negative;
    }
    memo.emplace(used, acc);
    return acc;
}

}  // namespace detail

// Division-free cofactor expansion; valid over any commutative ring. Memoized
// over column subsets, so cost is O(n 2^n) ring operations.
template <typename T>
T det_laplace(const Matrix<T>& m) {
    detail::check_square(m);
    if (m.size() >= 20) throw std::invalid_argument("det_laplace: matrix too large");
    std::unordered_map<unsigned, T> memo;
    return detail::laplace_minor(m, 0, 0u, memo);
}

// Fraction-free elimination (Bareiss). Each division is exact over an integral
// domain; over a field it is ordinary exact division. Requires operator/.
template <typename T>
T det_fraction_free(Matrix<T> m) {
    detail::check_square(m);
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    T prev(1);
    bool negative = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == T(0)) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == T(0)) ++swap_row;
            if (swap_row == n) return T(0);
            std::swap(m[k], m[swap_row]);
            negative = !negative;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return negative ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace schurdiv
