// Acceptance gate: one line per criterion, all equality checks exact.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurdiv/cli.hpp"

using schurdiv::DensePoly;
using schurdiv::DivisionTrace;
using schurdiv::Draw;
using schurdiv::IntVector;
using schurdiv::Matrix;
using schurdiv::Rational;
using schurdiv::Series;
using schurdiv::VirtualAlphabet;

namespace {

const VirtualAlphabet a12 = schurdiv::parse_alphabet("1,2");

struct Gate {
    int failures = 0;

    template <typename Body>
    void criterion(int n, const std::string& what, Body body) {
        bool ok = false;
        std::string note;
        try {
            ok = body(note);
        } catch (const std::exception& e) {
            note = std::string("unexpected exception: ") + e.what();
        }
        std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what
                  << "\n";
        if (!ok) {
            ++failures;
            if (!note.empty()) std::cout << "    " << note << "\n";
        }
    }
};

Rational positive_letter(Draw& d) {
    return Rational(schurdiv::BigInt(d.in(1, 9)), schurdiv::BigInt(d.in(1, 9)));
}

}  // namespace

int main() {
    Gate gate;

    gate.criterion(1, "closed remainders equal iterated division, 50 alphabets in <10s",
                   [](std::string& note) {
        auto t0 = std::chrono::steady_clock::now();
        Draw d(1001);
        int done = 0;
        for (int attempt = 0; done < 50 && attempt < 800; ++attempt) {
            VirtualAlphabet a = d.alphabet(4, 7);
            long k = d.in(1, 3);
            try {
                Series closed = schurdiv::remainder_sigma_by_one(a, k, 6);
                DivisionTrace tr = schurdiv::divide_iterate(
                    a, {}, static_cast<std::size_t>(k), 2 * static_cast<std::size_t>(k) + 6);
                if (tr.terminated()) {
                    note = "unexpected termination for " + a.str();
                    return false;
                }
                if (closed != tr.remainder(static_cast<std::size_t>(k))) {
                    note = "mismatch at k=" + std::to_string(k) + " for " + a.str();
                    return false;
                }
                ++done;
            } catch (const schurdiv::NonGenericError&) {
                // vanishing rectangle; redraw
            }
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
        if (done < 50) {
            note = "only " + std::to_string(done) + " generic draws";
            return false;
        }
        if (secs.count() >= 10.0) {
            note = "runtime " + std::to_string(secs.count()) + "s";
            return false;
        }
        return true;
    });

    gate.criterion(2, "two-alphabet remainders match division including the divisor factor",
                   [](std::string& note) {
        Draw d(1002);
        int done = 0;
        for (int attempt = 0; done < 50 && attempt < 800; ++attempt) {
            VirtualAlphabet a = d.alphabet(4, 7);
            VirtualAlphabet b = d.alphabet(0, 2);
            long k = d.in(1, 3);
            try {
                Series closed = schurdiv::remainder_sigma_by_sigma(a, b, k, 6);
                DivisionTrace tr = schurdiv::divide_iterate(
                    a, b, static_cast<std::size_t>(k), 2 * static_cast<std::size_t>(k) + 6);
                if (tr.terminated()) continue;  // difference sat on the termination locus
                if (closed != tr.remainder(static_cast<std::size_t>(k))) {
                    note = "mismatch at k=" + std::to_string(k) + " for " + a.str() + " / " +
                           b.str();
                    return false;
                }
                ++done;
            } catch (const schurdiv::NonGenericError&) {
            }
        }
        if (done < 50) note = "only " + std::to_string(done) + " generic draws";
        return done == 50;
    });

    gate.criterion(3, "reciprocal division matches the derived-alphabet formula",
                   [](std::string& note) {
        Series anchor = schurdiv::remainder_one_by_sigma(a12, 1, 5);
        if (anchor.coeffs() != std::vector<Rational>{Rational(1), Rational(3), Rational(7),
                                                     Rational(15), Rational(31)}) {
            note = "anchor {1,2} k=1 is " + anchor.str();
            return false;
        }
        Draw d(1003);
        int done = 0;
        for (int attempt = 0; done < 50 && attempt < 800; ++attempt) {
            VirtualAlphabet a = d.alphabet(4, 7);
            long k = d.in(1, 3);
            try {
                Series closed = schurdiv::remainder_one_by_sigma(a, k, 6);
                DivisionTrace tr = schurdiv::divide_iterate(
                    {}, a, static_cast<std::size_t>(k), 2 * static_cast<std::size_t>(k) + 6);
                if (tr.terminated()) continue;
                if (closed != tr.remainder(static_cast<std::size_t>(k))) {
                    note = "mismatch at k=" + std::to_string(k) + " for " + a.str();
                    return false;
                }
                // spot-check the quotient of Schur functions directly
                Rational denom = schurdiv::schur(schurdiv::rectangle_vector(k, k + 1), a);
                for (long i = 0; i < 3; ++i) {
                    Rational num =
                        schurdiv::schur(schurdiv::headed_rectangle(k + i, k, k), a);
                    if (closed.coeff(static_cast<std::size_t>(i)) != num / denom) {
                        note = "coefficient ratio mismatch for " + a.str();
                        return false;
                    }
                }
                ++done;
            } catch (const schurdiv::NonGenericError&) {
            }
        }
        if (done < 50) note = "only " + std::to_string(done) + " generic draws";
        return done == 50;
    });

    gate.criterion(4, "approximant contact >= 2k on 50 alphabets; anchor (7+6z+4z^2)/(7-15z)",
                   [](std::string& note) {
        auto p = schurdiv::pade(a12, 2);
        DensePoly ref_num(std::vector<Rational>{Rational(7), Rational(6), Rational(4)});
        DensePoly ref_den(std::vector<Rational>{Rational(7), Rational(-15)});
        if (p.numerator * ref_den != ref_num * p.denominator) {
            note = "anchor approximant differs as a rational function";
            return false;
        }
        if (p.contact_order != 4 || p.deviation != schurdiv::parse_rational("-8/7")) {
            note = "anchor contact/deviation: " + std::to_string(p.contact_order) + ", " +
                   p.deviation.str();
            return false;
        }
        Draw d(1004);
        int done = 0;
        for (int attempt = 0; done < 50 && attempt < 800; ++attempt) {
            VirtualAlphabet a = d.alphabet(4, 7);
            long k = d.in(1, 3);
            try {
                auto q = schurdiv::pade(a, k);
                if (q.numerator.degree() > k || q.denominator.degree() > k - 1) {
                    note = "degree bound violated for " + a.str();
                    return false;
                }
                if (q.contact_order < 2 * static_cast<std::size_t>(k)) {
                    note = "contact " + std::to_string(q.contact_order) + " < 2k for " +
                           a.str();
                    return false;
                }
                ++done;
            } catch (const schurdiv::NonGenericError&) {
            }
        }
        if (done < 50) note = "only " + std::to_string(done) + " generic draws";
        return done == 50;
    });

    gate.criterion(5, "relation solver reproduces f_k and the Schur coefficient pattern",
                   [](std::string& note) {
        auto rel = schurdiv::division_relation(a12, 2);
        DensePoly qum(std::vector<Rational>{Rational(1), schurdiv::parse_rational("-15/7")});
        DensePoly sub(std::vector<Rational>{Rational(1), schurdiv::parse_rational("6/7"),
                                            schurdiv::parse_rational("4/7")});
        if (rel.quotient_poly != qum || rel.subtrahend_poly != sub ||
            rel.gamma != schurdiv::parse_rational("-8/7")) {
            note = "anchor relation differs";
            return false;
        }
        Rational s2 = schurdiv::schur(IntVector{2}, a12);
        bool pattern =
            rel.quotient_poly.coeff(1) == -schurdiv::schur(IntVector{3}, a12) / s2 &&
            rel.subtrahend_poly.coeff(1) == schurdiv::schur(IntVector{2, 1}, a12) / s2 &&
            rel.subtrahend_poly.coeff(2) == schurdiv::schur(IntVector{2, 2}, a12) / s2 &&
            rel.gamma == -schurdiv::schur(IntVector{3, 3}, a12) / s2;
        if (!pattern) {
            note = "anchor coefficient pattern differs";
            return false;
        }
        Draw d(1005);
        int done = 0;
        for (int attempt = 0; done < 25 && attempt < 500; ++attempt) {
            VirtualAlphabet a = d.alphabet(4, 7);
            long k = d.in(1, 3);
            try {
                auto r = schurdiv::division_relation(a, k);
                Series f = schurdiv::relation_remainder(r, a, 6);
                DivisionTrace tr = schurdiv::divide_iterate(
                    a, {}, static_cast<std::size_t>(k), 2 * static_cast<std::size_t>(k) + 6);
                if (tr.terminated()) continue;
                if (f != tr.remainder(static_cast<std::size_t>(k))) {
                    note = "f_k mismatch at k=" + std::to_string(k) + " for " + a.str();
                    return false;
                }
                ++done;
            } catch (const schurdiv::NonGenericError&) {
            } catch (const schurdiv::SingularSystem&) {
            }
        }
        if (done < 25) note = "only " + std::to_string(done) + " generic draws";
        return done == 25;
    });

    gate.criterion(6, "wronskian determinant equals closed form for all K <= 6, n <= 4",
                   [](std::string& note) {
        if (schurdiv::wronskian_det(IntVector{1, 2}, a12, 6) != Rational(2) ||
            schurdiv::wronskian_closed(IntVector{1, 2}, a12) != Rational(2)) {
            note = "anchor K=[1,2] on {1,2} is not 2";
            return false;
        }
        Draw d(1006);
        int done = 0;
        for (int attempt = 0; done < 20 && attempt < 200; ++attempt) {
            VirtualAlphabet a = d.alphabet(5, 5);
            try {
                auto seq = schurdiv::alphabet_sequence(a, 3, 8);
                std::vector<Rational> table = schurdiv::complete_table(a, 12);
                auto h = [&](long j) -> Rational {
                    return j < 0 ? Rational(0) : table[static_cast<std::size_t>(j)];
                };
                std::vector<Rational> denom(5);
                for (std::size_t n = 1; n <= 4; ++n) {
                    denom[n] = schurdiv::schur(
                        schurdiv::rectangle_vector(static_cast<long>(n) - 1,
                                                   static_cast<long>(n)),
                        a);
                    if (denom[n].is_zero())
                        throw schurdiv::NonGenericError("normalizer vanishes", "");
                }
                for (std::size_t n = 1; n <= 4; ++n) {
                    IntVector k(n, 0);
                    while (true) {
                        Matrix<Rational> m(n, std::vector<Rational>(n));
                        for (std::size_t i = 0; i < n; ++i)
                            for (std::size_t j = 0; j < n; ++j)
                                m[i][j] = k[j] < static_cast<long>(i)
                                              ? Rational(0)
                                              : seq[i].coeff(static_cast<std::size_t>(
                                                    k[j] - static_cast<long>(i)));
                        Rational det = schurdiv::det_fraction_free(std::move(m));

                        IntVector v(n);
                        for (std::size_t i = 0; i < n; ++i)
                            v[i] = k[n - 1 - i] + static_cast<long>(i);
                        Rational closed =
                            schurdiv::det_fraction_free(
                                schurdiv::jacobi_trudi_matrix<Rational>(v, h)) /
                            denom[n];
                        if (det != closed) {
                            note = "mismatch at K=" + schurdiv::index_str(k) + " for " +
                                   a.str();
                            return false;
                        }
                        std::size_t pos = 0;
                        while (pos < n && k[pos] == 6) k[pos++] = 0;
                        if (pos == n) break;
                        ++k[pos];
                    }
                }
                ++done;
            } catch (const schurdiv::NonGenericError&) {
            }
        }
        if (done < 20) note = "only " + std::to_string(done) + " generic draws";
        return done == 20;
    });

    gate.criterion(7, "determinant of minors equals the four-minor product, 20 trials",
                   [](std::string& note) {
        Draw d(1007);
        for (int trial = 0; trial < 20; ++trial) {
            VirtualAlphabet a = d.alphabet(4, 5);
            IntVector k(4);
            for (auto& e : k) e = d.in(0, 6);
            auto rep = schurdiv::bazin_check(k, a);
            if (!rep.match) {
                note = "mismatch at K=" + schurdiv::index_str(k) + " for " + a.str();
                return false;
            }
        }
        return true;
    });

    gate.criterion(8, "fraction levels equal division data; convergents reach contact 2d",
                   [](std::string& note) {
        auto v = schurdiv::cf_verify(a12, 3, 12);
        std::size_t proper = 0;
        for (const auto& l : v.seq.levels)
            if (!l.s2.is_zero()) ++proper;
        if (!v.seq.terminated || proper != 1 || v.seq.levels[0].s1 != Rational(-3) ||
            v.seq.levels[0].s2 != Rational(2)) {
            note = "anchor levels for {1,2} differ";
            return false;
        }
        if (v.convergent.num != DensePoly(std::vector<Rational>{Rational(0), Rational(1)}) ||
            v.convergent.den != DensePoly(std::vector<Rational>{Rational(2), Rational(-3),
                                                                Rational(1)}) ||
            !v.exact) {
            note = "anchor convergent is not z/(z^2-3z+2)";
            return false;
        }
        if (!v.levels_match_division) {
            note = "anchor levels disagree with division";
            return false;
        }
        Draw d(1008);
        int done = 0;
        for (int attempt = 0; done < 20 && attempt < 200; ++attempt) {
            VirtualAlphabet a = d.alphabet(5, 5);
            try {
                for (std::size_t depth = 1; depth <= 3; ++depth) {
                    auto w = schurdiv::cf_verify(a, depth, 2 * depth + 6);
                    if (!w.levels_match_division) {
                        note = "levels differ from division at depth " +
                               std::to_string(depth) + " for " + a.str();
                        return false;
                    }
                    if (!w.seq.terminated && w.contact < 2 * depth) {
                        note = "contact " + std::to_string(w.contact) + " at depth " +
                               std::to_string(depth) + " for " + a.str();
                        return false;
                    }
                    if (w.seq.terminated && !w.exact) {
                        note = "terminated but inexact for " + a.str();
                        return false;
                    }
                }
                ++done;
            } catch (const schurdiv::NonGenericError&) {
            }
        }
        if (done < 20) note = "only " + std::to_string(done) + " generic draws";
        return done == 20;
    });

    gate.criterion(9, "termination happens exactly on the vanishing rectangle, with witness",
                   [](std::string& note) {
        Draw d(1009);
        for (long n = 1; n <= 3; ++n) {
            for (int rep = 0; rep < 6; ++rep) {
                std::vector<Rational> letters;
                for (long i = 1; i <= n; ++i)
                    letters.push_back(rep == 0 ? Rational(schurdiv::BigInt(i))
                                               : positive_letter(d));
                VirtualAlphabet a(letters);

                DivisionTrace tr = schurdiv::divide_iterate(
                    a, {}, static_cast<std::size_t>(n) + 2,
                    2 * (static_cast<std::size_t>(n) + 2) + 2);
                if (!tr.terminated() ||
                    tr.termination->step_index != static_cast<std::size_t>(n) ||
                    tr.steps.size() != static_cast<std::size_t>(n)) {
                    note = "termination index for " + a.str();
                    return false;
                }
                for (long t = 0; t < n; ++t)
                    if (schurdiv::schur(schurdiv::rectangle_vector(t + 2, t + 1), a)
                            .is_zero()) {
                        note = "rectangle vanished before termination for " + a.str();
                        return false;
                    }
                if (!schurdiv::schur(schurdiv::rectangle_vector(n + 2, n + 1), a)
                         .is_zero()) {
                    note = "terminated on a nonvanishing rectangle for " + a.str();
                    return false;
                }

                std::ostringstream os;
                int code = schurdiv::cli::run(
                    {"divide", "--num", a.str(), "--steps", std::to_string(n + 2)}, os);
                if (code != 2) {
                    note = "cli exit " + std::to_string(code) + " for " + a.str();
                    return false;
                }
                auto j = nlohmann::json::parse(os.str());
                std::string witness =
                    schurdiv::index_str(schurdiv::rectangle_vector(n + 2, n + 1));
                if (j["signal"] != "Terminated" ||
                    j["termination"]["vanishing"] != witness ||
                    j["termination"]["step"] != n) {
                    note = "cli witness payload for " + a.str();
                    return false;
                }
            }
        }
        return true;
    });

    gate.criterion(10, "sign rule under conjugation for 100 random pairs",
                   [](std::string& note) {
        Draw d(1010);
        for (int trial = 0; trial < 100; ++trial) {
            IntVector parts;
            do {
                parts.assign(static_cast<std::size_t>(d.in(0, 4)), 0);
                for (auto& e : parts) e = d.in(0, 8);
                std::sort(parts.rbegin(), parts.rend());
            } while (std::accumulate(parts.begin(), parts.end(), 0L) > 8);
            schurdiv::Partition lambda(parts);

            VirtualAlphabet a = d.alphabet(1, 4);
            if (trial % 2 == 1) a = VirtualAlphabet(a.plus, {d.letter()});

            Rational rhs = schurdiv::schur(schurdiv::conjugate(lambda), schurdiv::negate(a));
            if (lambda.weight() % 2 == 1) rhs = -rhs;
            if (schurdiv::schur(lambda, a) != rhs) {
                note = "pair " + schurdiv::index_str(lambda.to_int_vector()) + ", " + a.str();
                return false;
            }
        }
        return true;
    });

    gate.criterion(11, "low-order displayed identities hold on 20 alphabets",
                   [](std::string& note) {
        Draw d(1011);
        int done = 0;
        for (int attempt = 0; done < 20 && attempt < 200; ++attempt) {
            VirtualAlphabet a = d.alphabet(4, 6);
            auto report = schurdiv::low_order_identities(a, 10);
            bool generic = true;
            for (const auto& item : report.items)
                if (item.status == schurdiv::IdentityCheck::Status::non_generic)
                    generic = false;
            if (!generic) continue;
            for (const auto& item : report.items)
                if (item.status != schurdiv::IdentityCheck::Status::pass) {
                    note = "identity k=" + std::to_string(item.k) + " fails for " + a.str();
                    return false;
                }
            ++done;
        }
        if (done < 20) note = "only " + std::to_string(done) + " generic draws";
        return done == 20;
    });

    std::cout << (gate.failures == 0 ? "all criteria passed"
                                     : std::to_string(gate.failures) + " criteria failed")
              << "\n";
    return gate.failures;
}
