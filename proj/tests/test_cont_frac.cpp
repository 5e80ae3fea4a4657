#include <catch2/catch_amalgamated.hpp>

#include "schurdiv/cont_frac.hpp"
#include "schurdiv/verify.hpp"

using schurdiv::CFLevelSeq;
using schurdiv::Rational;
using schurdiv::VirtualAlphabet;

namespace {
const VirtualAlphabet a12 = schurdiv::parse_alphabet("1,2");
}

TEST_CASE("levels of {1,2} terminate after one full level") {
    CFLevelSeq seq = schurdiv::cf_levels(a12, 2, 10);
    REQUIRE(seq.terminated);
    REQUIRE(seq.levels.size() == 2);
    REQUIRE(seq.levels[0].s1 == Rational(-3));
    REQUIRE(seq.levels[0].s2 == Rational(2));
    REQUIRE(seq.levels[1].s1 == Rational(0));
    REQUIRE(seq.levels[1].s2 == Rational(0));
}

TEST_CASE("cf_levels requires enough working order") {
    REQUIRE_THROWS_AS(schurdiv::cf_levels(a12, 3, 9), schurdiv::InsufficientPrecision);
}

TEST_CASE("convergent of {1,2} is z over (z-1)(z-2)") {
    auto v = schurdiv::cf_verify(a12, 2, 10);
    REQUIRE(v.seq.terminated);
    REQUIRE(v.convergent.num.coeffs() == std::vector<Rational>{Rational(0), Rational(1)});
    REQUIRE(v.convergent.den.coeffs() ==
            std::vector<Rational>{Rational(2), Rational(-3), Rational(1)});
    REQUIRE(v.exact);
    REQUIRE(v.contact == 10);
    REQUIRE(v.levels_match_division);
}

TEST_CASE("single letter and empty alphabet fractions") {
    VirtualAlphabet a5 = schurdiv::parse_alphabet("5");
    auto v = schurdiv::cf_verify(a5, 2, 10);
    REQUIRE(v.seq.terminated);
    REQUIRE(v.seq.levels.size() == 1);
    REQUIRE(v.seq.levels[0].s1 == Rational(-5));
    REQUIRE(v.convergent.num.coeffs() == std::vector<Rational>{Rational(1)});
    REQUIRE(v.convergent.den.coeffs() == std::vector<Rational>{Rational(-5), Rational(1)});
    REQUIRE(v.exact);
    REQUIRE(v.levels_match_division);

    auto e = schurdiv::cf_verify(VirtualAlphabet(), 1, 8);
    REQUIRE(e.seq.terminated);
    REQUIRE(e.seq.levels.size() == 1);
    REQUIRE(e.seq.levels[0].s1 == Rational(0));
    REQUIRE(e.exact);
    REQUIRE(e.levels_match_division);
}

TEST_CASE("three letters terminate at the third level") {
    auto v = schurdiv::cf_verify(schurdiv::parse_alphabet("1,2,3"), 3, 10);
    REQUIRE(v.seq.terminated);
    REQUIRE(v.seq.levels.size() == 3);
    REQUIRE(v.seq.levels[2].s2 == Rational(0));
    REQUIRE(v.exact);
    REQUIRE(v.levels_match_division);
    // terminating convergent is the full rational function of sigma
    REQUIRE(v.convergent.den.degree() == 3);
}

TEST_CASE("truncated fraction of a five letter alphabet") {
    auto v = schurdiv::cf_verify(schurdiv::parse_alphabet("1,2,3,4,5"), 2, 12);
    REQUIRE_FALSE(v.seq.terminated);
    REQUIRE(v.seq.levels.size() == 3);
    REQUIRE(v.levels_match_division);
    REQUIRE_FALSE(v.exact);
    REQUIRE(v.contact >= 6);
    REQUIRE(v.convergent.den.degree() == v.convergent.num.degree() + 1);
}

TEST_CASE("convergents are monic with denominator one degree up") {
    schurdiv::Draw d(137);
    int done = 0;
    while (done < 10) {
        VirtualAlphabet a = d.alphabet(3, 5);
        try {
            auto v = schurdiv::cf_verify(a, 2, 12);
            const auto& num = v.convergent.num;
            const auto& den = v.convergent.den;
            REQUIRE(den.degree() == num.degree() + 1);
            REQUIRE(num.coeff(num.degree()) == Rational(1));
            REQUIRE(den.coeff(den.degree()) == Rational(1));
            REQUIRE(v.levels_match_division);
            std::size_t d_eff = v.seq.levels.size() - 1;
            if (v.seq.terminated)
                REQUIRE(v.exact);
            else
                REQUIRE(v.contact >= 2 * d_eff + 2);
            ++done;
        } catch (const schurdiv::NonGenericError&) {
            // vanishing rectangle along the sequence; redraw
        }
    }
}

TEST_CASE("cf_convergent depth bound") {
    CFLevelSeq seq = schurdiv::cf_levels(a12, 2, 10);
    REQUIRE_THROWS_AS(schurdiv::cf_convergent(seq.levels, seq.levels.size()),
                      std::invalid_argument);
}
