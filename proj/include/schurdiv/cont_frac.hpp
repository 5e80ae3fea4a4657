#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "schurdiv/alphabet.hpp"
#include "schurdiv/closed_form.hpp"
#include "schurdiv/dense_poly.hpp"
#include "schurdiv/errors.hpp"
#include "schurdiv/euclid.hpp"
#include "schurdiv/rational.hpp"
#include "schurdiv/series.hpp"

namespace schurdiv {

// One level of the J-fraction
//     sigma_{1/z}(A) / z = 1 / (z + s1_0 + s2_0 / (z + s1_1 + s2_1 / ...)).
struct CFLevel {
    Rational s1;
    Rational s2;
};

struct CFLevelSeq {
    std::vector<CFLevel> levels;
    bool terminated;  // last stored level has s2 == 0 and the fraction stops there
};

// Levels 0..depth, stopping early at the first level whose s2 vanishes (that
// terminal level is kept). Level k reads coefficients 1 and 2 of
// sigma_z(A^{k-1}) / sigma_z(A^k), with the k = 0 quotient being 1 / sigma_z(A).
inline CFLevelSeq cf_levels(const VirtualAlphabet& a, std::size_t depth,
                            std::size_t order) {
    if (order < 2 * depth + 4)
        throw InsufficientPrecision("cf_levels: order must be at least 2*depth + 4");
    CFLevelSeq seq{{}, false};
    seq.levels.reserve(depth + 1);
    for (std::size_t k = 0; k <= depth; ++k) {
        Series q = k == 0 ? sigma(negate(a), 3)
                          : series_div(remainder_one_by_sigma(a, static_cast<long>(k) - 1, 3),
                                       remainder_one_by_sigma(a, static_cast<long>(k), 3));
        seq.levels.push_back(CFLevel{q.coeff(1), q.coeff(2)});
        if (seq.levels.back().s2.is_zero()) {
            seq.terminated = true;
            break;
        }
    }
    return seq;
}

struct RationalFunction {
    DensePoly num;
    DensePoly den;
};

// Convergent using levels 0..depth, the innermost tail being z + s1_depth.
// Built bottom-up: the reciprocal of each partial fraction sends (N, D) to
// ((z + s1_k) N + s2_k D, N), so num and den come out monic with
// deg den = deg num + 1 and no common scaling to strip.
inline RationalFunction cf_convergent(const std::vector<CFLevel>& levels,
                                      std::size_t depth) {
    if (depth >= levels.size())
        throw std::invalid_argument("cf_convergent: depth exceeds available levels");
    DensePoly n(std::vector<Rational>{levels[depth].s1, Rational(1)});
    DensePoly d = DensePoly::monomial(Rational(1), 0);
    for (std::size_t k = depth; k-- > 0;) {
        DensePoly lin(std::vector<Rational>{levels[k].s1, Rational(1)});
        DensePoly next = lin * n + levels[k].s2 * d;
        d = std::move(n);
        n = std::move(next);
    }
    return RationalFunction{std::move(d), std::move(n)};
}

struct CFVerification {
    CFLevelSeq seq;
    RationalFunction convergent;
    std::size_t contact;             // leading coefficients of sigma matched by the expansion
    bool exact;                      // matched through the whole order window
    bool levels_match_division;      // s1/s2 agree with the alpha/beta of dividing 1 by sigma
};

// Expands the deepest available convergent around z = infinity and counts how
// many coefficients of sigma_t(A) it reproduces (t = 1/z); independently
// replays the levels as a Euclidean division of 1 by sigma_z(A).
inline CFVerification cf_verify(const VirtualAlphabet& a, std::size_t depth,
                                std::size_t order) {
    CFLevelSeq seq = cf_levels(a, depth, order);
    const std::size_t d_eff = seq.levels.size() - 1;
    RationalFunction conv = cf_convergent(seq.levels, d_eff);

    // conv(1/t) = t^{deg den - deg num} * rev(num)(t) / rev(den)(t) and the
    // fraction's value is t * sigma_t(A), so generically the reversed ratio is
    // sigma itself. rev(den) starts at 1 because den is monic.
    std::size_t contact = 0;
    long shift = conv.den.degree() - conv.num.degree();
    if (shift == 1) {
        Series revn = Series::from_poly(conv.num.reversed(conv.num.degree()), order);
        Series revd = Series::from_poly(conv.den.reversed(conv.den.degree()), order);
        Series expansion = series_div(revn, revd);
        Series target = sigma(a, order);
        while (contact < order && expansion.coeff(contact) == target.coeff(contact))
            ++contact;
    }
    bool exact = contact == order;

    DivisionTrace trace = divide_iterate(VirtualAlphabet(), a, seq.levels.size(), order);
    bool match = true;
    if (seq.terminated) {
        match = trace.terminated() && trace.termination->step_index == d_eff &&
                trace.steps.size() == d_eff &&
                trace.termination->alpha == seq.levels[d_eff].s1;
        for (std::size_t k = 0; match && k < trace.steps.size(); ++k)
            match = trace.steps[k].alpha == seq.levels[k].s1 &&
                    trace.steps[k].beta == seq.levels[k].s2;
    } else {
        match = !trace.terminated() && trace.steps.size() == seq.levels.size();
        for (std::size_t k = 0; match && k < seq.levels.size(); ++k)
            match = trace.steps[k].alpha == seq.levels[k].s1 &&
                    trace.steps[k].beta == seq.levels[k].s2;
    }

    return CFVerification{std::move(seq), std::move(conv), contact, exact, match};
}

}  // namespace schurdiv
