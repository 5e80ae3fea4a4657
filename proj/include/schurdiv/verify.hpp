#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "schurdiv/alphabet.hpp"
#include "schurdiv/closed_form.hpp"
#include "schurdiv/cont_frac.hpp"
#include "schurdiv/errors.hpp"
#include "schurdiv/euclid.hpp"
#include "schurdiv/partition.hpp"
#include "schurdiv/rational.hpp"
#include "schurdiv/schur.hpp"
#include "schurdiv/series.hpp"
#include "schurdiv/wronskian.hpp"

namespace schurdiv {

// Deterministic source of random test data. Draws go through modulo reduction
// on mt19937_64 output so a given seed produces the same stream on every
// platform; the slight bias is irrelevant for test-data purposes.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : eng_(seed) {}

    long below(long n) { return static_cast<long>(eng_() % static_cast<std::uint64_t>(n)); }
    long in(long lo, long hi) { return lo + below(hi - lo + 1); }

    // num/den with num in ±[1..9] and den in [1..9]
    Rational letter() {
        long num = in(1, 9);
        if (below(2) == 1) num = -num;
        return Rational(BigInt(num), BigInt(in(1, 9)));
    }

    VirtualAlphabet alphabet(long min_size, long max_size) {
        long n = in(min_size, max_size);
        std::vector<Rational> plus;
        plus.reserve(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) plus.push_back(letter());
        return VirtualAlphabet(std::move(plus));
    }

private:
    std::mt19937_64 eng_;
};

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t redraws = 0;  // non-generic configurations discarded
    std::vector<std::string> messages;

    SuiteResult() = default;
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    bool ok() const { return failures == 0; }
};

namespace detail {

inline void record_failure(SuiteResult& r, const std::string& msg) {
    ++r.failures;
    if (r.messages.size() < 8) r.messages.push_back(msg);
}

// Runs `body` once per trial; body returns "" on success or a failure
// description. A NonGenericError or SingularSystem from body means the drawn
// data sat on a vanishing determinant, so the trial redraws.
template <typename Body>
void run_trials(SuiteResult& r, std::size_t trials, Body body) {
    for (std::size_t t = 0; t < trials; ++t) {
        ++r.trials;
        for (std::size_t attempt = 0;; ++attempt) {
            try {
                std::string msg = body();
                if (!msg.empty()) record_failure(r, msg);
                break;
            } catch (const NonGenericError&) {
                ++r.redraws;
            } catch (const SingularSystem&) {
                ++r.redraws;
            }
            if (attempt >= 64) {
                record_failure(r, "no generic draw found after 64 attempts");
                break;
            }
        }
    }
}

inline NonGenericError intermediate_termination(const Termination& t) {
    long i = static_cast<long>(t.step_index);
    return NonGenericError("division terminated before the requested step",
                           index_str(rectangle_vector(i + 2, i + 1)));
}

}  // namespace detail

// Closed-form remainders of sigma(A) divided by 1 against the recurrence.
inline SuiteResult suite_remainders(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"remainders"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 7);
        long k = d.in(1, 3);
        Series closed = remainder_sigma_by_one(a, k, 6);
        DivisionTrace tr = divide_iterate(a, VirtualAlphabet(),
                                          static_cast<std::size_t>(k), 2 * k + 6);
        if (tr.terminated()) throw detail::intermediate_termination(*tr.termination);
        if (!(tr.remainder(static_cast<std::size_t>(k)) == closed))
            return "remainder mismatch at k=" + std::to_string(k) + " for A=" + a.str();
        return {};
    });
    return r;
}

// Same with a nontrivial denominator alphabet B.
inline SuiteResult suite_remainders_ab(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"remainders-ab"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 7);
        VirtualAlphabet b = d.alphabet(0, 2);
        long k = d.in(1, 3);
        Series closed = remainder_sigma_by_sigma(a, b, k, 6);
        DivisionTrace tr = divide_iterate(a, b, static_cast<std::size_t>(k), 2 * k + 6);
        if (tr.terminated()) throw detail::intermediate_termination(*tr.termination);
        if (!(tr.remainder(static_cast<std::size_t>(k)) == closed))
            return "remainder mismatch at k=" + std::to_string(k) + " for A=" + a.str() +
                   " B=" + b.str();
        return {};
    });
    return r;
}

// Closed-form remainders of 1 divided by sigma(A) against the recurrence.
inline SuiteResult suite_reciprocal(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"reciprocal"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 7);
        long k = d.in(1, 3);
        Series closed = remainder_one_by_sigma(a, k, 6);
        DivisionTrace tr = divide_iterate(VirtualAlphabet(), a,
                                          static_cast<std::size_t>(k), 2 * k + 6);
        if (tr.terminated()) throw detail::intermediate_termination(*tr.termination);
        if (!(tr.remainder(static_cast<std::size_t>(k)) == closed))
            return "reciprocal remainder mismatch at k=" + std::to_string(k) +
                   " for A=" + a.str();
        return {};
    });
    return r;
}

// The solved quotient/subtrahend relation: its Hankel solution must reproduce
// the k-th remainder and its entries must equal the displayed Schur quotients.
inline SuiteResult suite_hankel(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"hankel"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 7);
        long k = d.in(1, 3);
        DivisionRelation rel = division_relation(a, k);

        std::size_t order = static_cast<std::size_t>(2 * k + 6);
        DivisionTrace tr = divide_iterate(a, VirtualAlphabet(),
                                          static_cast<std::size_t>(k), order);
        if (tr.terminated()) throw detail::intermediate_termination(*tr.termination);
        Series fk = tr.remainder(static_cast<std::size_t>(k));

        Series lhs = Series::from_poly(rel.quotient_poly, order) * sigma(a, order) -
                     Series::from_poly(rel.subtrahend_poly, order);
        for (long m = 0; m < 2 * k; ++m)
            if (!lhs.coeff(static_cast<std::size_t>(m)).is_zero())
                return "relation has low-order residue at k=" + std::to_string(k) +
                       " for A=" + a.str();
        for (std::size_t i = 0; i < fk.order(); ++i)
            if (lhs.coeff(static_cast<std::size_t>(2 * k) + i) != rel.gamma * fk.coeff(i))
                return "relation does not reproduce the remainder at k=" +
                       std::to_string(k) + " for A=" + a.str();
        if (!(relation_remainder(rel, a, 6) == fk))
            return "relation_remainder mismatch at k=" + std::to_string(k) +
                   " for A=" + a.str();

        Rational nrm = schur(rectangle_vector(k, k - 1), a);
        if (nrm.is_zero())
            throw NonGenericError("normalizer vanished", index_str(rectangle_vector(k, k - 1)));
        if (rel.quotient_poly.coeff(0) != Rational(1) ||
            rel.subtrahend_poly.coeff(0) != Rational(1))
            return "relation polynomials not unitary at k=" + std::to_string(k);
        for (long j = 1; j < k; ++j) {
            IntVector v = rectangle_vector(k + 1, j);
            IntVector tail = rectangle_vector(k, k - 1 - j);
            v.insert(v.end(), tail.begin(), tail.end());
            Rational expect = schur(v, a) / nrm;
            if (j % 2 == 1) expect = -expect;
            if (rel.quotient_poly.coeff(j) != expect)
                return "quotient coefficient pattern mismatch at k=" + std::to_string(k) +
                       " j=" + std::to_string(j) + " for A=" + a.str();
        }
        for (long m = 1; m <= k; ++m) {
            IntVector v = rectangle_vector(k, k - 1);
            v.push_back(m);
            if (rel.subtrahend_poly.coeff(m) != schur(v, a) / nrm)
                return "subtrahend coefficient pattern mismatch at k=" + std::to_string(k) +
                       " m=" + std::to_string(m) + " for A=" + a.str();
        }
        Rational gamma_expect = schur(rectangle_vector(k + 1, k), a) / nrm;
        if (k % 2 == 0) gamma_expect = -gamma_expect;
        if (rel.gamma != gamma_expect)
            return "scale factor pattern mismatch at k=" + std::to_string(k) +
                   " for A=" + a.str();
        return {};
    });
    return r;
}

// Contact order and leading deviation of the diagonal approximants.
inline SuiteResult suite_pade(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"pade"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 7);
        long k = d.in(1, 3);
        PadeApproximant p = pade(a, k, 0);
        if (p.numerator.degree() > k || p.denominator.degree() > k - 1)
            return "degree bound violated at k=" + std::to_string(k) + " for A=" + a.str();
        if (p.contact_order < static_cast<std::size_t>(2 * k))
            return "contact below 2k at k=" + std::to_string(k) + " for A=" + a.str();

        std::size_t w = static_cast<std::size_t>(2 * k) + 2;
        Series diff = sigma(a, w) - series_div(Series::from_poly(p.numerator, w),
                                               Series::from_poly(p.denominator, w));
        for (long m = 0; m < 2 * k; ++m)
            if (!diff.coeff(static_cast<std::size_t>(m)).is_zero())
                return "agreement window shorter than reported at k=" + std::to_string(k);
        if (diff.coeff(static_cast<std::size_t>(2 * k)) != p.deviation)
            return "deviation mismatch at k=" + std::to_string(k) + " for A=" + a.str();
        Rational d0 = p.raw_denominator.coeff(0);
        if (d0.is_zero() || p.deviation != schur(rectangle_vector(k + 1, k), a) / d0)
            return "deviation quotient law fails at k=" + std::to_string(k) +
                   " for A=" + a.str();
        return {};
    });
    return r;
}

// Wronskian determinant against its single Schur-quotient value.
inline SuiteResult suite_wronskian(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"wronskian"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 7);
        long n = d.in(1, 4);
        IntVector k(static_cast<std::size_t>(n));
        for (auto& e : k) e = d.in(0, 6);
        std::size_t order = 9;  // exceeds every drawn index
        Rational det = wronskian_det(k, a, order);
        Rational closed = wronskian_closed(k, a);
        if (det != closed)
            return "wronskian mismatch for K=" + index_str(k) + " A=" + a.str();
        return {};
    });
    return r;
}

// Determinant-of-minors factorization on random index quadruples.
inline SuiteResult suite_bazin(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"bazin"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 5);
        IntVector k(4);
        for (auto& e : k) e = d.in(0, 6);
        BazinReport rep = bazin_check(k, a);
        if (!rep.match)
            return "minor factorization fails for K=" + index_str(k) + " A=" + a.str();
        return {};
    });
    return r;
}

// Continued-fraction levels versus division, plus convergent contact.
inline SuiteResult suite_cfrac(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"cfrac"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 7);
        std::size_t depth = static_cast<std::size_t>(d.in(1, 3));
        CFVerification cv = cf_verify(a, depth, 2 * depth + 6);
        if (!cv.levels_match_division)
            return "levels disagree with division for A=" + a.str();
        std::size_t d_eff = cv.seq.levels.size() - 1;
        if (cv.seq.terminated) {
            if (!cv.exact)
                return "terminating fraction is not exact for A=" + a.str();
        } else if (cv.contact < 2 * d_eff + 2) {
            return "contact below 2*depth+2 for A=" + a.str();
        }
        return {};
    });
    return r;
}

// Conjugation sign rule and the too-many-rows vanishing rule.
inline SuiteResult suite_signs(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"signs"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 7);
        long len = d.in(0, 4);
        IntVector parts(static_cast<std::size_t>(len));
        for (auto& e : parts) e = d.in(0, 4);
        std::sort(parts.rbegin(), parts.rend());
        Partition lambda(parts);

        Rational lhs = schur(lambda, a);
        Rational rhs = schur(conjugate(lambda), negate(a));
        if (lambda.weight() % 2 == 1) rhs = -rhs;
        if (lhs != rhs)
            return "conjugation sign rule fails for lambda=" +
                   index_str(lambda.to_int_vector()) + " A=" + a.str();

        IntVector tall = rectangle_vector(d.in(1, 3),
                                          static_cast<long>(a.plus.size()) + 1);
        if (!schur(tall, a).is_zero())
            return "vanishing rule fails for " + index_str(tall) + " A=" + a.str();
        return {};
    });
    return r;
}

// The fully written-out low-order relations, polynomial and factored forms.
inline SuiteResult suite_identities(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"identities"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        VirtualAlphabet a = d.alphabet(4, 7);
        LowOrderReport rep = low_order_identities(a, 10);
        for (const auto& item : rep.items)
            if (item.status == IdentityCheck::Status::non_generic)
                throw NonGenericError("identity check degenerate", item.witness);
        for (const auto& item : rep.items)
            if (item.status != IdentityCheck::Status::pass)
                return "identity fails at k=" + std::to_string(item.k) + " for A=" + a.str();
        return {};
    });
    return r;
}

// Where division must terminate: the first vanishing rectangle of the
// difference alphabet, with every earlier beta matching its rectangle quotient.
inline SuiteResult suite_termination(std::uint64_t seed, std::size_t trials) {
    SuiteResult r{"termination"};
    Draw d(seed);
    detail::run_trials(r, trials, [&]() -> std::string {
        long p = d.in(1, 3);
        long q = d.in(0, 2);
        VirtualAlphabet a = d.alphabet(p, p);
        VirtualAlphabet b = d.alphabet(q, q);
        VirtualAlphabet diff = difference(a, b);

        long bound = std::max(p, q - 1);
        long t_star = -1;
        for (long t = 0; t <= bound; ++t)
            if (schur(rectangle_vector(t + 2, t + 1), diff).is_zero()) {
                t_star = t;
                break;
            }
        if (t_star < 0)
            return "no vanishing rectangle through the degree bound for A=" + a.str() +
                   " B=" + b.str();
        for (long t = 0; t < t_star; ++t)
            if (schur(rectangle_vector(t + 1, t), diff).is_zero())
                throw NonGenericError("intermediate rectangle vanished",
                                      index_str(rectangle_vector(t + 1, t)));

        DivisionTrace tr = divide_iterate(a, b, static_cast<std::size_t>(t_star) + 1,
                                          2 * (static_cast<std::size_t>(t_star) + 1) + 2);
        if (!tr.terminated() || tr.termination->step_index != static_cast<std::size_t>(t_star))
            return "termination step disagrees with the vanishing rectangle for A=" +
                   a.str() + " B=" + b.str();
        for (long t = 0; t < t_star; ++t) {
            Rational expect = schur(rectangle_vector(t + 2, t + 1), diff) *
                              schur(rectangle_vector(t, t - 1), diff) /
                              (schur(rectangle_vector(t + 1, t), diff) *
                               schur(rectangle_vector(t + 1, t), diff));
            if (tr.steps[static_cast<std::size_t>(t)].beta != expect)
                return "beta rectangle quotient mismatch at step " + std::to_string(t) +
                       " for A=" + a.str() + " B=" + b.str();
        }
        return {};
    });
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "remainders", "remainders-ab", "reciprocal", "hankel",
        "pade",       "wronskian",     "bazin",      "cfrac",
        "signs",      "identities",    "termination"};
    return names;
}

// Per-suite seed via FNV-1a over the name, so one suite's stream does not
// depend on which other suites run alongside it.
inline std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return seed ^ h;
}

inline SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                             std::size_t trials) {
    std::uint64_t s = suite_seed(seed, name);
    if (name == "remainders") return suite_remainders(s, trials);
    if (name == "remainders-ab") return suite_remainders_ab(s, trials);
    if (name == "reciprocal") return suite_reciprocal(s, trials);
    if (name == "hankel") return suite_hankel(s, trials);
    if (name == "pade") return suite_pade(s, trials);
    if (name == "wronskian") return suite_wronskian(s, trials);
    if (name == "bazin") return suite_bazin(s, trials);
    if (name == "cfrac") return suite_cfrac(s, trials);
    if (name == "signs") return suite_signs(s, trials);
    if (name == "identities") return suite_identities(s, trials);
    if (name == "termination") return suite_termination(s, trials);
    throw std::invalid_argument("unknown suite: " + name);
}

inline std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                           std::uint64_t seed, std::size_t trials,
                                           bool parallel) {
    std::vector<SuiteResult> out;
    out.reserve(names.size());
    if (!parallel) {
        for (const auto& n : names) out.push_back(run_suite(n, seed, trials));
        return out;
    }
    std::vector<std::future<SuiteResult>> futures;
    futures.reserve(names.size());
    for (const auto& n : names)
        futures.push_back(std::async(std::launch::async,
                                     [n, seed, trials] { return run_suite(n, seed, trials); }));
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace schurdiv
