#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "schurdiv/alphabet.hpp"
#include "schurdiv/closed_form.hpp"
#include "schurdiv/determinant.hpp"
#include "schurdiv/errors.hpp"
#include "schurdiv/euclid.hpp"
#include "schurdiv/partition.hpp"
#include "schurdiv/rational.hpp"
#include "schurdiv/schur.hpp"
#include "schurdiv/series.hpp"

namespace schurdiv {

// sigma_z(A^0), ..., sigma_z(A^kmax): the derived alphabets produced by dividing
// 1 by sigma_z(A), each entry via its closed form at full order. Throws
// NonGenericError at the first i whose normalizing rectangle S_{i^{i+1}}
// vanishes.
inline std::vector<Series> alphabet_sequence(const VirtualAlphabet& a, long kmax,
                                             std::size_t order) {
    if (kmax < 0) throw std::invalid_argument("alphabet_sequence: kmax >= 0 required");
    std::vector<Series> entries;
    entries.reserve(static_cast<std::size_t>(kmax) + 1);
    for (long i = 0; i <= kmax; ++i)
        entries.push_back(remainder_one_by_sigma(a, i, order));
    return entries;
}

// Same sequence through the division route: 1 divided by sigma_z(A), entry i
// for i >= 1 being the i-th remainder (order shrinks by 2 per entry). Used as
// the independent cross-check of the closed forms.
inline std::vector<Series> alphabet_sequence_by_division(const VirtualAlphabet& a, long kmax,
                                                         std::size_t order) {
    DivisionTrace trace =
        divide_iterate(VirtualAlphabet(), a, static_cast<std::size_t>(kmax), order);
    if (trace.terminated() && trace.termination->step_index < static_cast<std::size_t>(kmax)) {
        long t = static_cast<long>(trace.termination->step_index);
        throw NonGenericError("alphabet sequence: division terminated early",
                              index_str(rectangle_vector(t + 1, t + 2)));
    }
    std::vector<Series> entries;
    entries.reserve(static_cast<std::size_t>(kmax) + 1);
    for (long i = 0; i <= kmax; ++i) entries.push_back(trace.remainder(static_cast<std::size_t>(i)));
    return entries;
}

// Wronskian of the complete functions S_{k_1}, ..., S_{k_n} of A: the n x n
// determinant whose row i (0-based) holds coefficient (k_j - i) of the i-th
// alphabet-sequence entry. Requires order > max(K).
inline Rational wronskian_det(const IntVector& k, const VirtualAlphabet& a,
                              std::size_t order) {
    const std::size_t n = k.size();
    if (n == 0) throw std::invalid_argument("wronskian_det: K must be nonempty");
    long maxk = *std::max_element(k.begin(), k.end());
    if (*std::min_element(k.begin(), k.end()) < 0)
        throw std::invalid_argument("wronskian_det: K entries must be >= 0");
    if (order <= static_cast<std::size_t>(maxk))
        throw InsufficientPrecision("wronskian_det: order must exceed max(K)");

    std::vector<Series> seq = alphabet_sequence(a, static_cast<long>(n) - 1, order);
    Matrix<Rational> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long idx = k[j] - static_cast<long>(i);
            m[i][j] = idx < 0 ? Rational(0) : seq[i].coeff(static_cast<std::size_t>(idx));
        }
    return det_fraction_free(std::move(m));
}

// Closed form of the same Wronskian:
//     S_{[k_n, k_{n-1}+1, ..., k_1+n-1]}(A) / S_{(n-1)^n}(A),
// the index vector reading K bottom-up so that duplicate and out-of-order K
// entries straighten to the same value the determinant gives.
inline Rational wronskian_closed(const IntVector& k, const VirtualAlphabet& a) {
    const std::size_t n = k.size();
    if (n == 0) throw std::invalid_argument("wronskian_closed: K must be nonempty");
    IntVector rect = rectangle_vector(static_cast<long>(n) - 1, static_cast<long>(n));
    Rational denom = schur(rect, a);
    if (denom.is_zero())
        throw NonGenericError("wronskian_closed: normalizing rectangle vanishes",
                              index_str(rect));
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = k[n - 1 - i] + static_cast<long>(i);
    return schur(v, a) / denom;
}

// Determinant-of-minors identity on the 4 x 10 matrix whose numeric columns
// c = 0..5 hold S_{c-r}(A) and whose four extra columns hold S_{K_s+3-r}(A).
// The 4 x 4 determinant of minors [012x],[013x],[034x],[345x] (x running over
// the extra columns) factors as [0123] [0134] [0345] [extra quadruple].
struct BazinReport {
    Rational lhs;
    Rational rhs;
    std::vector<Rational> factors;  // the four right-hand minors, in order
    bool match;
};

inline BazinReport bazin_check(const IntVector& k, const VirtualAlphabet& a) {
    if (k.size() != 4) throw std::invalid_argument("bazin_check: K must have 4 entries");
    long maxidx = 5;
    for (long x : k) maxidx = std::max(maxidx, x + 3);
    std::vector<Rational> table = complete_table(a, maxidx);
    auto h = [&](long j) -> Rational {
        return j < 0 ? Rational(0) : table[static_cast<std::size_t>(j)];
    };

    // Column c as a function of row r.
    auto entry = [&](std::size_t r, std::size_t c) -> Rational {
        if (c < 6) return h(static_cast<long>(c) - static_cast<long>(r));
        return h(k[c - 6] + 3 - static_cast<long>(r));
    };
    auto minor = [&](std::array<std::size_t, 4> cols) -> Rational {
        Matrix<Rational> m(4, std::vector<Rational>(4));
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t j = 0; j < 4; ++j) m[r][j] = entry(r, cols[j]);
        return det_fraction_free(std::move(m));
    };

    const std::array<std::array<std::size_t, 3>, 4> row_sets{
        {{0, 1, 2}, {0, 1, 3}, {0, 3, 4}, {3, 4, 5}}};
    Matrix<Rational> outer(4, std::vector<Rational>(4));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s)
            outer[r][s] = minor({row_sets[r][0], row_sets[r][1], row_sets[r][2], 6 + s});
    Rational lhs = det_fraction_free(std::move(outer));

    std::vector<Rational> factors{minor({0, 1, 2, 3}), minor({0, 1, 3, 4}),
                                  minor({0, 3, 4, 5}), minor({6, 7, 8, 9})};
    Rational rhs = factors[0] * factors[1] * factors[2] * factors[3];
    return BazinReport{lhs, rhs, std::move(factors), lhs == rhs};
}

}  // namespace schurdiv
