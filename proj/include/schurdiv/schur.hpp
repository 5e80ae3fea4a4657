#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "schurdiv/alphabet.hpp"
#include "schurdiv/determinant.hpp"
#include "schurdiv/laurent_poly.hpp"
#include "schurdiv/partition.hpp"
#include "schurdiv/rational.hpp"

namespace schurdiv {

// Matrix (h_{v_i + j - i})_{i,j} for an arbitrary integer index vector v.
// The determinant is taken as-is: no straightening is applied up front, and
// exchanging adjacent indices via (v_i, v_{i+1}) -> (v_{i+1}-1, v_i+1) flips
// the sign, because it swaps two rows.
template <typename T, typename H>
Matrix<T> jacobi_trudi_matrix(const IntVector& v, H&& h) {
    const std::size_t n = v.size();
    Matrix<T> m(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = h(v[i] + static_cast<long>(j) - static_cast<long>(i));
    return m;
}

// S_v(V) over Rational entries.
inline Rational schur(const IntVector& v, const VirtualAlphabet& a) {
    const std::size_t n = v.size();
    if (n == 0) return Rational(1);
    long maxj = 0;
    for (std::size_t i = 0; i < n; ++i)
        maxj = std::max(maxj, v[i] + static_cast<long>(n - 1 - i));
    std::vector<Rational> table = complete_table(a, maxj);
    auto h = [&](long j) -> Rational {
        if (j < 0) return Rational(0);
        return table[static_cast<std::size_t>(j)];
    };
    return det_fraction_free(jacobi_trudi_matrix<Rational>(v, h));
}

inline Rational schur(const Partition& lambda, const VirtualAlphabet& a) {
    return schur(lambda.to_int_vector(), a);
}

// S_v of V with the formal letter 1/z adjoined with the given sign. Entries are
// Laurent polynomials in z, so the determinant is expanded division-free.
inline LaurentPoly schur_with_letter(const IntVector& v, const VirtualAlphabet& a,
                                     LetterSign sign) {
    const std::size_t n = v.size();
    if (n == 0) return LaurentPoly(1);
    long maxj = 0;
    for (std::size_t i = 0; i < n; ++i)
        maxj = std::max(maxj, v[i] + static_cast<long>(n - 1 - i));
    std::vector<Rational> table = complete_table(a, maxj);
    auto h = [&](long j) -> LaurentPoly {
        LaurentPoly out;
        if (j < 0) return out;
        if (sign == LetterSign::minus) {
            out.set(0, table[static_cast<std::size_t>(j)]);
            if (j >= 1) out.set(-1, -table[static_cast<std::size_t>(j) - 1]);
        } else {
            for (long m = 0; m <= j; ++m)
                out.set(-m, table[static_cast<std::size_t>(j - m)]);
        }
        return out;
    };
    return det_laplace(jacobi_trudi_matrix<LaurentPoly>(v, h));
}

}  // namespace schurdiv
