#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "schurdiv/alphabet.hpp"
#include "schurdiv/errors.hpp"
#include "schurdiv/rational.hpp"
#include "schurdiv/series.hpp"

namespace schurdiv {

// One step of the two-term division
//     f_prev = (1 + alpha z) f_cur + beta z^2 f_next.
// beta != 0 always holds for a stored step; a vanishing beta is reported as
// termination instead. `remainder` is f_next, with order = min(input orders) - 2.
struct DivisionStep {
    Rational alpha;
    Rational beta;
    Series remainder;
};

// beta computed to exactly zero; alpha is still well defined at that point.
struct Terminated {
    Rational alpha;
};

using StepResult = std::variant<DivisionStep, Terminated>;

// Requires both series unitary and min order >= 3, consuming two orders of
// precision: alpha = f_prev_1 - f_cur_1, then beta z^2 f_next is what remains
// of f_prev - (1 + alpha z) f_cur.
inline StepResult divide_step(const Series& f_prev, const Series& f_cur) {
    if (!f_prev.is_unitary() || !f_cur.is_unitary())
        throw std::invalid_argument("divide_step: both series must be unitary");
    const std::size_t n = std::min(f_prev.order(), f_cur.order());
    if (n < 3)
        throw InsufficientPrecision("divide_step: need order >= 3");

    Rational alpha = f_prev.coeff(1) - f_cur.coeff(1);
    std::vector<Rational> r(n - 2);
    for (std::size_t i = 2; i < n; ++i)
        r[i - 2] = f_prev.coeff(i) - f_cur.coeff(i) - alpha * f_cur.coeff(i - 1);

    Rational beta = r[0];
    if (beta.is_zero()) return Terminated{std::move(alpha)};

    std::vector<Rational> next(n - 2);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = r[i] / beta;
    return DivisionStep{std::move(alpha), std::move(beta), Series(std::move(next))};
}

struct Termination {
    std::size_t step_index;
    Rational alpha;
};

struct DivisionTrace {
    Series f_init_prev;  // f_{-1}
    Series f_init_cur;   // f_0
    std::vector<DivisionStep> steps;
    std::optional<Termination> termination;

    bool terminated() const { return termination.has_value(); }

    // f_k of the chain: k = 0 is the divisor, k >= 1 is steps[k-1].remainder.
    const Series& remainder(std::size_t k) const {
        return k == 0 ? f_init_cur : steps.at(k - 1).remainder;
    }
};

// Runs up to `steps` division steps starting from (f_prev, f_cur). Step k
// consumes the pair (f_{k-1}, f_k) and appends f_{k+1}; each step costs two
// orders, so step k needs min-order - 2k >= 3.
inline DivisionTrace iterate_division(Series f_prev, Series f_cur, std::size_t steps) {
    DivisionTrace trace{f_prev, f_cur, {}, std::nullopt};
    for (std::size_t k = 0; k < steps; ++k) {
        StepResult result = divide_step(f_prev, f_cur);
        if (auto* t = std::get_if<Terminated>(&result)) {
            trace.termination = Termination{k, std::move(t->alpha)};
            break;
        }
        DivisionStep step = std::get<DivisionStep>(std::move(result));
        f_prev = std::move(f_cur);
        f_cur = step.remainder;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

// Divides sigma_z(num) by sigma_z(den). Requires order >= 2*steps + 2 so the
// last remainder still has at least two known coefficients.
inline DivisionTrace divide_iterate(const VirtualAlphabet& num, const VirtualAlphabet& den,
                                    std::size_t steps, std::size_t order) {
    if (order < 2 * steps + 2)
        throw InsufficientPrecision("divide_iterate: order must be >= 2*steps + 2");
    return iterate_division(sigma(num, order), sigma(den, order), steps);
}

}  // namespace schurdiv
