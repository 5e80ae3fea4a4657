#pragma once

// Brute-force oracles, deliberately independent of the library's series
// kernels: complete functions by multiset enumeration, elementary functions by
// subset enumeration, determinants by the Leibniz permutation sum.

#include <algorithm>
#include <numeric>
#include <vector>

#include "schurdiv/alphabet.hpp"
#include "schurdiv/partition.hpp"
#include "schurdiv/rational.hpp"

namespace oracle {

using schurdiv::IntVector;
using schurdiv::Rational;
using schurdiv::VirtualAlphabet;

// h_j: sum of all degree-j monomials with weakly increasing letter indices
inline Rational complete_plus(long j, const std::vector<Rational>& letters,
                              std::size_t from = 0) {
    if (j < 0) return Rational(0);
    if (j == 0) return Rational(1);
    if (from == letters.size()) return Rational(0);
    Rational total(0);
    Rational power(1);
    for (long t = 0; t <= j; ++t) {
        total += power * complete_plus(j - t, letters, from + 1);
        power *= letters[from];
    }
    return total;
}

// e_q: sum over q-element subsets
inline Rational elementary(long q, const std::vector<Rational>& letters,
                           std::size_t from = 0) {
    if (q < 0) return Rational(0);
    if (q == 0) return Rational(1);
    if (from == letters.size()) return Rational(0);
    return elementary(q, letters, from + 1) +
           letters[from] * elementary(q - 1, letters, from + 1);
}

// S_j of a difference: sigma(plus) times the finite product over minus letters
inline Rational complete(long j, const VirtualAlphabet& a) {
    if (j < 0) return Rational(0);
    Rational total(0);
    long qmax = std::min<long>(j, static_cast<long>(a.minus.size()));
    for (long q = 0; q <= qmax; ++q) {
        Rational term = elementary(q, a.minus) * complete_plus(j - q, a.plus);
        if (q % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

inline int permutation_parity(const std::vector<std::size_t>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Leibniz determinant of the matrix S_{v_i + j - i}
inline Rational schur(const IntVector& v, const VirtualAlphabet& a) {
    const std::size_t n = v.size();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = complete(v[i] + static_cast<long>(j) - static_cast<long>(i), a);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational det(0);
    do {
        Rational term(permutation_parity(perm));
        for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace oracle
