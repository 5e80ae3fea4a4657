#include <catch2/catch_amalgamated.hpp>

#include "schurdiv/euclid.hpp"
#include "schurdiv/verify.hpp"

using schurdiv::DivisionStep;
using schurdiv::DivisionTrace;
using schurdiv::Rational;
using schurdiv::Series;
using schurdiv::Terminated;
using schurdiv::VirtualAlphabet;

namespace {
const VirtualAlphabet a12 = schurdiv::parse_alphabet("1,2");
const VirtualAlphabet empty;
}

TEST_CASE("first step of sigma({1,2}) divided by 1") {
    auto res = schurdiv::divide_step(schurdiv::sigma(a12, 6), schurdiv::sigma(empty, 6));
    auto& step = std::get<DivisionStep>(res);
    REQUIRE(step.alpha == Rational(3));
    REQUIRE(step.beta == Rational(7));
    REQUIRE(step.remainder.order() == 4);
    // f_1 coefficients are S_{2+i}/S_2 = (2^{3+i}-1)/7
    REQUIRE(step.remainder.coeff(0) == Rational(1));
    REQUIRE(step.remainder.coeff(1) == schurdiv::parse_rational("15/7"));
    REQUIRE(step.remainder.coeff(2) == schurdiv::parse_rational("31/7"));
    REQUIRE(step.remainder.coeff(3) == Rational(9));
}

TEST_CASE("divide_step preconditions") {
    Series not_unitary(std::vector<Rational>{Rational(2), Rational(1), Rational(1)});
    REQUIRE_THROWS_AS(schurdiv::divide_step(not_unitary, schurdiv::sigma(empty, 3)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(schurdiv::divide_step(schurdiv::sigma(a12, 2), schurdiv::sigma(empty, 6)),
                      schurdiv::InsufficientPrecision);
}

TEST_CASE("dividing a series by itself terminates immediately") {
    auto res = schurdiv::divide_step(schurdiv::sigma(a12, 6), schurdiv::sigma(a12, 6));
    REQUIRE(std::get<Terminated>(res).alpha == Rational(0));
}

TEST_CASE("two steps of sigma({1,2}) divided by 1") {
    DivisionTrace tr = schurdiv::divide_iterate(a12, empty, 2, 10);
    REQUIRE_FALSE(tr.terminated());
    REQUIRE(tr.steps.size() == 2);
    REQUIRE(tr.steps[0].alpha == Rational(3));
    REQUIRE(tr.steps[0].beta == Rational(7));
    REQUIRE(tr.steps[1].alpha == schurdiv::parse_rational("-15/7"));
    REQUIRE(tr.steps[1].beta == schurdiv::parse_rational("8/49"));
    REQUIRE(tr.remainder(0) == schurdiv::sigma(empty, 10));
}

TEST_CASE("dividing 1 by sigma({1,2}) terminates at the second step") {
    DivisionTrace tr = schurdiv::divide_iterate(empty, a12, 4, 12);
    REQUIRE(tr.steps.size() == 1);
    REQUIRE(tr.steps[0].alpha == Rational(-3));
    REQUIRE(tr.steps[0].beta == Rational(2));
    REQUIRE(tr.terminated());
    REQUIRE(tr.termination->step_index == 1);
    REQUIRE(tr.termination->alpha == Rational(0));
    // witness: the rectangle of the termination law vanishes on the difference
    REQUIRE(schurdiv::schur(schurdiv::rectangle_vector(3, 2),
                            schurdiv::difference(empty, a12)) == Rational(0));
}

TEST_CASE("termination index equals max(p, q-1) of the difference alphabet") {
    VirtualAlphabet b = schurdiv::parse_alphabet("3");
    DivisionTrace tr = schurdiv::divide_iterate(a12, b, 5, 16);
    REQUIRE(tr.terminated());
    REQUIRE(tr.termination->step_index == 2);
    REQUIRE(tr.steps.size() == 2);
    REQUIRE(schurdiv::schur(schurdiv::rectangle_vector(4, 3),
                            schurdiv::difference(a12, b)) == Rational(0));
}

TEST_CASE("each step reconstructs its dividend") {
    schurdiv::Draw d(101);
    const std::size_t order = 12;
    for (int trial = 0; trial < 15; ++trial) {
        VirtualAlphabet a = d.alphabet(3, 6);
        VirtualAlphabet b = d.alphabet(0, 2);
        DivisionTrace tr = schurdiv::divide_iterate(a, b, 3, order);
        for (std::size_t j = 0; j < tr.steps.size(); ++j) {
            const Series& prev = j == 0 ? tr.f_init_prev : tr.remainder(j - 1);
            const Series& cur = tr.remainder(j);
            const Series& next = tr.remainder(j + 1);
            const Rational& alpha = tr.steps[j].alpha;
            const Rational& beta = tr.steps[j].beta;
            for (std::size_t i = 0; i < order - 2 * j; ++i) {
                Rational rhs = cur.coeff(i);
                if (i >= 1) rhs += alpha * cur.coeff(i - 1);
                if (i >= 2) rhs += beta * next.coeff(i - 2);
                REQUIRE(prev.coeff(i) == rhs);
            }
        }
    }
}

TEST_CASE("quotients are invariant under pre-dividing the inputs") {
    schurdiv::Draw d(103);
    const std::size_t order = 10;
    for (int trial = 0; trial < 10; ++trial) {
        VirtualAlphabet a = d.alphabet(4, 6);
        VirtualAlphabet b = d.alphabet(1, 2);
        DivisionTrace two = schurdiv::divide_iterate(a, b, 2, order);
        Series quotient = schurdiv::series_div(schurdiv::sigma(a, order),
                                               schurdiv::sigma(b, order));
        DivisionTrace one =
            schurdiv::iterate_division(quotient, schurdiv::sigma(empty, order), 2);
        REQUIRE(two.terminated() == one.terminated());
        REQUIRE(two.steps.size() == one.steps.size());
        for (std::size_t j = 0; j < two.steps.size(); ++j) {
            REQUIRE(two.steps[j].alpha == one.steps[j].alpha);
            REQUIRE(two.steps[j].beta == one.steps[j].beta);
            // remainders of the original pair carry the divisor factor
            REQUIRE(two.steps[j].remainder ==
                    schurdiv::sigma(b, order) * one.steps[j].remainder);
        }
    }
}

TEST_CASE("divide_iterate rejects insufficient order") {
    REQUIRE_THROWS_AS(schurdiv::divide_iterate(a12, empty, 3, 7),
                      schurdiv::InsufficientPrecision);
}
