#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schurdiv/alphabet.hpp"
#include "schurdiv/dense_poly.hpp"
#include "schurdiv/errors.hpp"
#include "schurdiv/laurent_poly.hpp"
#include "schurdiv/partition.hpp"
#include "schurdiv/rational.hpp"
#include "schurdiv/schur.hpp"
#include "schurdiv/series.hpp"

namespace schurdiv {

// [first, rect_value^rect_count] index vectors used throughout the closed forms.
inline IntVector headed_rectangle(long first, long rect_value, long rect_count) {
    IntVector v{first};
    v.insert(v.end(), static_cast<std::size_t>(rect_count), rect_value);
    return v;
}

inline IntVector rectangle_vector(long value, long count) {
    // count < 0 degenerates to the empty index, whose S value is 1
    if (count < 0) count = 0;
    return IntVector(static_cast<std::size_t>(count), value);
}

// Coefficients of z^0 .. z^{m_max} of L(z) * f(z) for a truncated series f.
// Exactness requires m_max <= f.order() - 1 + min exponent of L.
inline std::vector<Rational> laurent_series_coeffs(const LaurentPoly& l, const Series& f,
                                                   std::size_t m_max) {
    std::vector<Rational> out(m_max + 1);
    if (l.is_zero()) return out;
    if (static_cast<long>(m_max) > static_cast<long>(f.order()) - 1 + l.min_exponent())
        throw InsufficientPrecision("laurent_series_coeffs: series order too small");
    for (const auto& [e, c] : l.terms())
        for (std::size_t m = 0; m <= m_max; ++m) {
            long fi = static_cast<long>(m) - e;
            if (fi >= 0 && fi < static_cast<long>(f.order()))
                out[m] += c * f.coeff(static_cast<std::size_t>(fi));
        }
    return out;
}

namespace detail {

// sum_i z^i S_{k+1+i, (k+1)^{k-1}}(D) / S_{(k+1)^k}(D), the unitary k-th
// remainder of sigma_z(D) divided by 1.
inline Series closed_remainder_series(const VirtualAlphabet& d, long k, std::size_t order) {
    IntVector rect = rectangle_vector(k + 1, k);
    Rational denom = schur(rect, d);
    if (denom.is_zero())
        throw NonGenericError("closed remainder: normalizing rectangle vanishes",
                              index_str(rect));
    // One complete table covers every determinant: the largest entry index is
    // (k+1 + order-1) + (k-1).
    long maxj = 2 * k + static_cast<long>(order) - 1;
    std::vector<Rational> table = complete_table(d, maxj);
    auto h = [&](long j) -> Rational {
        return j < 0 ? Rational(0) : table[static_cast<std::size_t>(j)];
    };
    std::vector<Rational> out(order);
    for (std::size_t i = 0; i < order; ++i) {
        IntVector v = headed_rectangle(k + 1 + static_cast<long>(i), k + 1, k - 1);
        out[i] = det_fraction_free(jacobi_trudi_matrix<Rational>(v, h)) / denom;
    }
    return Series(std::move(out));
}

}  // namespace detail

// k-th remainder of dividing sigma_z(A) by 1, k >= 1.
inline Series remainder_sigma_by_one(const VirtualAlphabet& a, long k, std::size_t order) {
    if (k < 1) throw std::invalid_argument("remainder_sigma_by_one: k >= 1 required");
    return detail::closed_remainder_series(a, k, order);
}

// k-th remainder of dividing sigma_z(A) by sigma_z(B): sigma_z(B) times the
// one-alphabet closed form evaluated on the difference A - B.
inline Series remainder_sigma_by_sigma(const VirtualAlphabet& a, const VirtualAlphabet& b,
                                       long k, std::size_t order) {
    if (k < 1) throw std::invalid_argument("remainder_sigma_by_sigma: k >= 1 required");
    return sigma(b, order) * detail::closed_remainder_series(difference(a, b), k, order);
}

// k-th remainder of dividing 1 by sigma_z(A); equals sigma_z of the k-th
// derived alphabet: coefficients S_{k+i, k^k}(A) / S_{k^{k+1}}(A). k = 0 gives
// sigma_z(A) itself.
inline Series remainder_one_by_sigma(const VirtualAlphabet& a, long k, std::size_t order) {
    if (k < 0) throw std::invalid_argument("remainder_one_by_sigma: k >= 0 required");
    IntVector rect = rectangle_vector(k, k + 1);
    Rational denom = schur(rect, a);
    if (denom.is_zero())
        throw NonGenericError("reciprocal remainder: normalizing rectangle vanishes",
                              index_str(rect));
    long maxj = 2 * k + static_cast<long>(order) - 1;
    std::vector<Rational> table = complete_table(a, maxj);
    auto h = [&](long j) -> Rational {
        return j < 0 ? Rational(0) : table[static_cast<std::size_t>(j)];
    };
    std::vector<Rational> out(order);
    for (std::size_t i = 0; i < order; ++i) {
        IntVector v = headed_rectangle(k + static_cast<long>(i), k, k);
        out[i] = det_fraction_free(jacobi_trudi_matrix<Rational>(v, h)) / denom;
    }
    return Series(std::move(out));
}

// The k-step division collapsed into one relation:
//     gamma z^{2k} f_k = quotient_poly * sigma_z(A) - subtrahend_poly,
// with quotient_poly = 1 + alpha_1 z + ... + alpha_{k-1} z^{k-1} and
// subtrahend_poly = 1 + beta_1 z + ... + beta_k z^k.
struct DivisionRelation {
    long k;
    DensePoly quotient_poly;
    DensePoly subtrahend_poly;
    Rational gamma;
};

// Solves for the relation directly: coefficients z^{k+1} .. z^{2k-1} of
// quotient_poly * sigma_z(A) must vanish, a Hankel-type linear system in the
// alpha_j; the beta_m and gamma then follow by back-substitution.
inline DivisionRelation division_relation(const VirtualAlphabet& a, long k) {
    if (k < 1) throw std::invalid_argument("division_relation: k >= 1 required");
    std::vector<Rational> s = complete_table(a, 2 * k);

    const std::size_t unknowns = static_cast<std::size_t>(k - 1);
    std::vector<Rational> alpha(unknowns);
    if (unknowns > 0) {
        // Row for z^m (m = k+1 .. 2k-1): sum_j S_{m-j} alpha_j = -S_m.
        Matrix<Rational> mat(unknowns, std::vector<Rational>(unknowns + 1));
        for (std::size_t r = 0; r < unknowns; ++r) {
            long m = k + 1 + static_cast<long>(r);
            for (std::size_t j = 1; j <= unknowns; ++j)
                mat[r][j - 1] = s[static_cast<std::size_t>(m - static_cast<long>(j))];
            mat[r][unknowns] = -s[static_cast<std::size_t>(m)];
        }
        // Exact Gaussian elimination with pivoting.
        for (std::size_t col = 0; col < unknowns; ++col) {
            std::size_t piv = col;
            while (piv < unknowns && mat[piv][col].is_zero()) ++piv;
            if (piv == unknowns)
                throw SingularSystem("division_relation: Hankel system is singular");
            std::swap(mat[col], mat[piv]);
            for (std::size_t r = 0; r < unknowns; ++r) {
                if (r == col || mat[r][col].is_zero()) continue;
                Rational factor = mat[r][col] / mat[col][col];
                for (std::size_t c = col; c <= unknowns; ++c)
                    mat[r][c] -= factor * mat[col][c];
            }
        }
        for (std::size_t j = 0; j < unknowns; ++j) alpha[j] = mat[j][unknowns] / mat[j][j];
    }

    auto convolved = [&](long m) {
        Rational acc = s[static_cast<std::size_t>(m)];
        for (std::size_t j = 1; j <= unknowns; ++j) {
            long i = m - static_cast<long>(j);
            if (i < 0) break;  // S_i vanishes below index 0
            acc += alpha[j - 1] * s[static_cast<std::size_t>(i)];
        }
        return acc;
    };

    std::vector<Rational> q(unknowns + 1);
    q[0] = Rational(1);
    for (std::size_t j = 1; j <= unknowns; ++j) q[j] = alpha[j - 1];

    std::vector<Rational> sub(static_cast<std::size_t>(k) + 1);
    sub[0] = Rational(1);
    for (long m = 1; m <= k; ++m) sub[static_cast<std::size_t>(m)] = convolved(m);

    return DivisionRelation{k, DensePoly(std::move(q)), DensePoly(std::move(sub)),
                            convolved(2 * k)};
}

// Recovers f_k from the relation: (quotient * sigma - subtrahend) / (gamma z^{2k}).
inline Series relation_remainder(const DivisionRelation& rel, const VirtualAlphabet& a,
                                 std::size_t order) {
    if (rel.gamma.is_zero())
        throw NonGenericError("relation_remainder: gamma vanishes",
                              index_str(rectangle_vector(rel.k + 1, rel.k)));
    std::size_t total = order + 2 * static_cast<std::size_t>(rel.k);
    Series lhs = Series::from_poly(rel.quotient_poly, total) * sigma(a, total) -
                 Series::from_poly(rel.subtrahend_poly, total);
    std::vector<Rational> out(order);
    for (std::size_t i = 0; i < order; ++i)
        out[i] = lhs.coeff(i + 2 * static_cast<std::size_t>(rel.k)) / rel.gamma;
    return Series(std::move(out));
}

// Pade approximant of sigma_z(A) with numerator degree <= k and denominator
// degree <= k-1, built from Schur functions of A with the letter 1/z adjoined:
//     raw_numerator   = (-1)^{k-1} z^k S_{k^k}(A + 1/z)
//     raw_denominator = z^{k-1} S_{(k+1)^{k-1}}(A - 1/z)
// then both are normalized so the denominator has constant term 1.
// contact_order is the valuation of sigma - numerator/denominator measured
// through a finite expansion window; `deviation` is the first disagreeing
// coefficient (zero if none was found inside the window).
struct PadeApproximant {
    long k;
    DensePoly numerator;
    DensePoly denominator;
    DensePoly raw_numerator;
    DensePoly raw_denominator;
    std::size_t contact_order;
    Rational deviation;
    bool exact_through_window;
};

inline PadeApproximant pade(const VirtualAlphabet& a, long k, std::size_t window = 0) {
    if (k < 1) throw std::invalid_argument("pade: k >= 1 required");
    if (window == 0) window = 2 * static_cast<std::size_t>(k) + 6;

    LaurentPoly num_l = schur_with_letter(rectangle_vector(k, k), a, LetterSign::plus)
                            .shifted(k);
    if (k % 2 == 0) num_l = -num_l;
    LaurentPoly den_l = schur_with_letter(rectangle_vector(k + 1, k - 1), a,
                                          LetterSign::minus)
                            .shifted(k - 1);
    if (!num_l.is_zero() && num_l.min_exponent() < 0)
        throw std::logic_error("pade: numerator failed to clear");
    if (!den_l.is_zero() && den_l.min_exponent() < 0)
        throw std::logic_error("pade: denominator failed to clear");

    DensePoly raw_num = num_l.to_dense();
    DensePoly raw_den = den_l.to_dense();
    Rational d0 = raw_den.coeff(0);
    if (d0.is_zero())
        throw NonGenericError("pade: denominator constant term vanishes",
                              index_str(rectangle_vector(k, k - 1)));

    Rational inv = Rational(1) / d0;
    DensePoly num = inv * raw_num;
    DensePoly den = inv * raw_den;

    Series diff = sigma(a, window) -
                  series_div(Series::from_poly(num, window), Series::from_poly(den, window));
    std::size_t val = diff.valuation();
    bool exact = val == window;
    return PadeApproximant{k,
                           std::move(num),
                           std::move(den),
                           std::move(raw_num),
                           std::move(raw_den),
                           val,
                           exact ? Rational(0) : diff.coeff(val),
                           exact};
}

// The displayed identities tying the first three remainders to explicit Schur
// data. For each k the polynomial form checks
//     (-1)^{k-1} z^{2k} (S_{(k+1)^k}/S_{k^{k-1}}) f_k
//        = (1 + sum_j (-1)^j S_{(k+1)^j k^{k-1-j}}/S_{k^{k-1}} z^j) sigma
//          - (1 + sum_m S_{k^{k-1} m}/S_{k^{k-1}} z^m),
// and the factored form checks
//     z^{k-1} S_{(k+1)^{k-1}}(A - 1/z) sigma + (-z)^k S_{k^k}(A + 1/z)
//        = z^{2k} S_{(k+1)^k}(A) f_k.
struct IdentityCheck {
    long k;
    enum class Status { pass, fail, non_generic } status;
    std::string witness;  // vanishing index when non_generic
    bool poly_form_ok;
    bool factored_form_ok;
};

struct LowOrderReport {
    std::vector<IdentityCheck> items;
    bool all_applicable_pass;
};

inline LowOrderReport low_order_identities(const VirtualAlphabet& a, std::size_t order) {
    LowOrderReport report{{}, true};
    Series sig = sigma(a, order);

    for (long k = 1; k <= 3; ++k) {
        IntVector norm_rect = rectangle_vector(k, k - 1);    // display divisor
        IntVector big_rect = rectangle_vector(k + 1, k);     // f_k normalizer
        Rational norm = schur(norm_rect, a);
        Rational big = schur(big_rect, a);
        if (norm.is_zero() || big.is_zero()) {
            report.items.push_back(IdentityCheck{
                k, IdentityCheck::Status::non_generic,
                index_str(norm.is_zero() ? norm_rect : big_rect), false, false});
            continue;
        }

        Series f_k = detail::closed_remainder_series(a, k, order);

        // Polynomial form, coefficients read straight off the displayed identity.
        std::vector<Rational> qc(static_cast<std::size_t>(k));
        qc[0] = Rational(1);
        for (long j = 1; j < k; ++j) {
            IntVector idx = rectangle_vector(k + 1, j);
            IntVector tail = rectangle_vector(k, k - 1 - j);
            idx.insert(idx.end(), tail.begin(), tail.end());
            Rational c = schur(idx, a) / norm;
            qc[static_cast<std::size_t>(j)] = (j % 2 == 0) ? c : -c;
        }
        std::vector<Rational> sc(static_cast<std::size_t>(k) + 1);
        sc[0] = Rational(1);
        for (long m = 1; m <= k; ++m) {
            IntVector idx = rectangle_vector(k, k - 1);
            idx.push_back(m);
            sc[static_cast<std::size_t>(m)] = schur(idx, a) / norm;
        }
        Series rhs = Series::from_poly(DensePoly(std::move(qc)), order) * sig -
                     Series::from_poly(DensePoly(std::move(sc)), order);
        Rational scale = big / norm;
        if (k % 2 == 0) scale = -scale;
        bool poly_ok = true;
        for (std::size_t m = 0; m < order; ++m) {
            Rational lhs_m = m >= 2 * static_cast<std::size_t>(k)
                                 ? scale * f_k.coeff(m - 2 * static_cast<std::size_t>(k))
                                 : Rational(0);
            if (lhs_m != rhs.coeff(m)) {
                poly_ok = false;
                break;
            }
        }

        // Factored form via the adjoined-letter Schur functions.
        LaurentPoly den_part =
            schur_with_letter(rectangle_vector(k + 1, k - 1), a, LetterSign::minus)
                .shifted(k - 1);
        LaurentPoly num_part =
            schur_with_letter(rectangle_vector(k, k), a, LetterSign::plus).shifted(k);
        if (k % 2 == 1) num_part = -num_part;  // (-z)^k = (-1)^k z^k
        std::size_t m_max = order - 1;
        std::vector<Rational> lhs1 = laurent_series_coeffs(den_part, sig, m_max);
        bool factored_ok = true;
        for (std::size_t m = 0; m <= m_max; ++m) {
            Rational lhs_m = lhs1[m] + num_part.coeff(static_cast<long>(m));
            Rational rhs_m = m >= 2 * static_cast<std::size_t>(k)
                                 ? big * f_k.coeff(m - 2 * static_cast<std::size_t>(k))
                                 : Rational(0);
            if (lhs_m != rhs_m) {
                factored_ok = false;
                break;
            }
        }

        bool ok = poly_ok && factored_ok;
        report.items.push_back(IdentityCheck{
            k, ok ? IdentityCheck::Status::pass : IdentityCheck::Status::fail, "",
            poly_ok, factored_ok});
        if (!ok) report.all_applicable_pass = false;
    }
    return report;
}

}  // namespace schurdiv
