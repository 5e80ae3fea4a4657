#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurdiv/alphabet.hpp"
#include "schurdiv/closed_form.hpp"
#include "schurdiv/cont_frac.hpp"
#include "schurdiv/dense_poly.hpp"
#include "schurdiv/errors.hpp"
#include "schurdiv/euclid.hpp"
#include "schurdiv/partition.hpp"
#include "schurdiv/rational.hpp"
#include "schurdiv/series.hpp"
#include "schurdiv/verify.hpp"
#include "schurdiv/wronskian.hpp"

namespace schurdiv::cli {

using nlohmann::json;

namespace detail {

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
}

inline json to_json(const Series& s) { return to_json(s.coeffs()); }

inline json to_json(const DensePoly& p) { return to_json(p.coeffs()); }

inline json to_json(const VirtualAlphabet& a) {
    return json{{"plus", to_json(a.plus)}, {"minus", to_json(a.minus)}};
}

inline json to_json(const IntVector& v) {
    json arr = json::array();
    for (long e : v) arr.push_back(e);
    return arr;
}

struct Output {
    std::ostream& os;
    bool as_text;

    // In text mode `lines` is printed; in json mode the payload is.
    void emit(const json& payload, const std::vector<std::string>& lines) const {
        if (as_text)
            for (const auto& l : lines) os << l << "\n";
        else
            os << payload.dump(2) << "\n";
    }
};

inline std::string poly_str(const DensePoly& p) { return p.str("z"); }

// Termination of a division trace maps to the rectangle of the difference
// alphabet whose vanishing the termination law predicts.
inline std::string termination_witness(std::size_t step) {
    long t = static_cast<long>(step);
    return index_str(rectangle_vector(t + 2, t + 1));
}

inline int run_divide(const std::string& num_text, const std::string& den_text,
                      long steps, long order, const Output& out) {
    VirtualAlphabet num = parse_alphabet(num_text);
    VirtualAlphabet den = parse_alphabet(den_text);
    if (steps < 1) throw std::invalid_argument("divide: --steps must be >= 1");
    std::size_t t = order < 0 ? static_cast<std::size_t>(2 * steps + 6)
                              : static_cast<std::size_t>(order);
    DivisionTrace trace = divide_iterate(num, den, static_cast<std::size_t>(steps), t);

    json jsteps = json::array();
    std::vector<std::string> lines;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const DivisionStep& s = trace.steps[k];
        jsteps.push_back(json{{"k", k},
                              {"alpha", s.alpha.str()},
                              {"beta", s.beta.str()},
                              {"remainder", to_json(s.remainder)}});
        lines.push_back("step " + std::to_string(k) + ": alpha = " + s.alpha.str() +
                        ", beta = " + s.beta.str());
    }
    json payload{{"num", to_json(num)},   {"den", to_json(den)},
                 {"order", t},            {"steps", jsteps},
                 {"terminated", trace.terminated()}};
    if (trace.terminated()) {
        const Termination& term = *trace.termination;
        std::string witness = termination_witness(term.step_index);
        payload["signal"] = "Terminated";
        payload["termination"] = json{{"step", term.step_index},
                                      {"alpha", term.alpha.str()},
                                      {"vanishing", witness}};
        lines.push_back("terminated at step " + std::to_string(term.step_index) +
                        ": alpha = " + term.alpha.str() + ", vanishing " + witness);
        out.emit(payload, lines);
        return 2;
    }
    lines.push_back("remainder f_" + std::to_string(trace.steps.size()) + " = " +
                    trace.remainder(trace.steps.size()).str());
    out.emit(payload, lines);
    return 0;
}

inline int run_remainder(const std::string& alphabet_text, const std::string& den_text,
                         bool reciprocal, long k, long order, const Output& out) {
    VirtualAlphabet a = parse_alphabet(alphabet_text);
    std::size_t t = order < 0 ? static_cast<std::size_t>(2 * k + 6)
                              : static_cast<std::size_t>(order);
    std::string mode;
    Series r = Series::one(1);
    VirtualAlphabet den;
    if (reciprocal) {
        mode = "one_by_sigma";
        r = remainder_one_by_sigma(a, k, t);
    } else if (!den_text.empty()) {
        mode = "sigma_by_sigma";
        den = parse_alphabet(den_text);
        r = remainder_sigma_by_sigma(a, den, k, t);
    } else {
        mode = "sigma_by_one";
        r = remainder_sigma_by_one(a, k, t);
    }
    json payload{{"alphabet", to_json(a)}, {"k", k},       {"order", t},
                 {"mode", mode},           {"remainder", to_json(r)}};
    if (!den_text.empty()) payload["den"] = to_json(den);
    out.emit(payload, {"remainder k=" + std::to_string(k) + " (" + mode + "): " + r.str()});
    return 0;
}

inline int run_pade(const std::string& alphabet_text, long k, long order,
                    const Output& out) {
    VirtualAlphabet a = parse_alphabet(alphabet_text);
    std::size_t window = order < 0 ? static_cast<std::size_t>(2 * k + 6)
                                   : static_cast<std::size_t>(order);
    PadeApproximant p = pade(a, k, window);
    json payload{{"alphabet", to_json(a)},
                 {"k", k},
                 {"window", window},
                 {"numerator", to_json(p.numerator)},
                 {"denominator", to_json(p.denominator)},
                 {"raw_numerator", to_json(p.raw_numerator)},
                 {"raw_denominator", to_json(p.raw_denominator)},
                 {"contact", p.contact_order},
                 {"deviation", p.deviation.str()},
                 {"exact", p.exact_through_window}};
    out.emit(payload,
             {"numerator:   " + poly_str(p.numerator),
              "denominator: " + poly_str(p.denominator),
              "contact " + std::to_string(p.contact_order) + ", deviation " +
                  p.deviation.str()});
    return 0;
}

inline int run_wronskian(const std::string& alphabet_text, const std::string& k_text,
                         bool bazin, long order, const Output& out) {
    VirtualAlphabet a = parse_alphabet(alphabet_text);
    IntVector k = parse_int_vector(k_text);
    if (bazin) {
        BazinReport rep = bazin_check(k, a);
        json payload{{"alphabet", to_json(a)}, {"K", to_json(k)},
                     {"lhs", rep.lhs.str()},   {"rhs", rep.rhs.str()},
                     {"factors", to_json(rep.factors)},
                     {"match", rep.match}};
        out.emit(payload, {"lhs = " + rep.lhs.str(), "rhs = " + rep.rhs.str(),
                           std::string("match: ") + (rep.match ? "true" : "false")});
        return 0;
    }
    long maxk = k.empty() ? 0 : *std::max_element(k.begin(), k.end());
    std::size_t t = order < 0 ? static_cast<std::size_t>(2 * maxk + 6)
                              : static_cast<std::size_t>(order);
    Rational det = wronskian_det(k, a, t);
    Rational closed = wronskian_closed(k, a);
    json payload{{"alphabet", to_json(a)}, {"K", to_json(k)}, {"order", t},
                 {"det", det.str()},       {"closed", closed.str()},
                 {"match", det == closed}};
    out.emit(payload, {"det = " + det.str(), "closed = " + closed.str(),
                       std::string("match: ") + (det == closed ? "true" : "false")});
    return 0;
}

inline int run_cfrac(const std::string& alphabet_text, long depth, long order,
                     const Output& out) {
    VirtualAlphabet a = parse_alphabet(alphabet_text);
    if (depth < 0) throw std::invalid_argument("cfrac: --depth must be >= 0");
    std::size_t t = order < 0 ? static_cast<std::size_t>(2 * depth + 6)
                              : static_cast<std::size_t>(order);
    CFVerification v = cf_verify(a, static_cast<std::size_t>(depth), t);

    json jlevels = json::array();
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < v.seq.levels.size(); ++i) {
        jlevels.push_back(json{{"s1", v.seq.levels[i].s1.str()},
                               {"s2", v.seq.levels[i].s2.str()}});
        lines.push_back("level " + std::to_string(i) + ": s1 = " +
                        v.seq.levels[i].s1.str() + ", s2 = " + v.seq.levels[i].s2.str());
    }
    json payload{{"alphabet", to_json(a)},
                 {"depth", depth},
                 {"order", t},
                 {"levels", jlevels},
                 {"terminated", v.seq.terminated},
                 {"convergent", json{{"num", to_json(v.convergent.num)},
                                     {"den", to_json(v.convergent.den)}}},
                 {"contact", v.contact},
                 {"exact", v.exact},
                 {"levels_match_division", v.levels_match_division}};
    lines.push_back("convergent = (" + poly_str(v.convergent.num) + ") / (" +
                    poly_str(v.convergent.den) + ")");
    lines.push_back("contact " + std::to_string(v.contact) +
                    (v.exact ? " (exact)" : "") + ", levels match division: " +
                    (v.levels_match_division ? "true" : "false"));
    out.emit(payload, lines);
    return 0;
}

inline int run_verify(std::vector<std::string> suites, std::uint64_t seed, long trials,
                      bool parallel, const Output& out) {
    if (trials < 1) throw std::invalid_argument("verify: --trials must be >= 1");
    if (suites.empty() ||
        std::find(suites.begin(), suites.end(), "all") != suites.end())
        suites = suite_names();
    std::vector<SuiteResult> results =
        run_suites(suites, seed, static_cast<std::size_t>(trials), parallel);

    bool ok = true;
    json jsuites = json::array();
    std::vector<std::string> lines;
    for (const auto& r : results) {
        ok = ok && r.ok();
        json msgs = json::array();
        for (const auto& m : r.messages) msgs.push_back(m);
        jsuites.push_back(json{{"name", r.name},
                               {"trials", r.trials},
                               {"failures", r.failures},
                               {"redraws", r.redraws},
                               {"ok", r.ok()},
                               {"messages", msgs}});
        lines.push_back(r.name + ": " + (r.ok() ? "ok" : "FAIL") + " (" +
                        std::to_string(r.trials) + " trials, " +
                        std::to_string(r.redraws) + " redraws)");
        for (const auto& m : r.messages) lines.push_back("    " + m);
    }
    json payload{{"seed", seed},       {"trials", trials}, {"parallel", parallel},
                 {"suites", jsuites},  {"ok", ok}};
    lines.push_back(ok ? "all suites ok" : "FAILURES present");
    out.emit(payload, lines);
    return ok ? 0 : 2;
}

}  // namespace detail

// Entry point shared by the binary and the tests: parses args, runs the chosen
// subcommand, writes the rendered payload to `os`. Exit status 0 on success, 1
// on usage or parse errors, 2 when a NonGeneric or Terminated signal prevents
// the requested result.
inline int run(const std::vector<std::string>& args, std::ostream& os) {
    CLI::App app{"Exact Euclidean division of power series and its closed forms"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string num_text, den_text, alphabet_text, k_text;
    long steps = 1, k = 1, depth = 1, order = -1, trials = 50;
    bool reciprocal = false, bazin = false, parallel = false;
    std::uint64_t seed = 0;
    std::vector<std::string> suites;

    CLI::App* divide = app.add_subcommand("divide", "iterate the division recurrence");
    divide->add_option("--num", num_text, "numerator alphabet")->required();
    divide->add_option("--den", den_text, "denominator alphabet (default empty: divide by 1)");
    divide->add_option("--steps", steps, "number of division steps")->required();
    divide->add_option("--order", order, "series order (default 2*steps+6)");

    CLI::App* remainder = app.add_subcommand("remainder", "closed-form k-th remainder");
    remainder->add_option("--alphabet", alphabet_text, "alphabet A")->required();
    remainder->add_option("--k", k, "remainder index")->required();
    auto* rden = remainder->add_option("--den", den_text, "denominator alphabet B");
    auto* rrec = remainder->add_flag("--reciprocal", reciprocal,
                                     "divide 1 by sigma(A) instead");
    rden->excludes(rrec);
    rrec->excludes(rden);
    remainder->add_option("--order", order, "series order (default 2*k+6)");

    CLI::App* pade_cmd = app.add_subcommand("pade", "diagonal approximant of sigma(A)");
    pade_cmd->add_option("--alphabet", alphabet_text, "alphabet A")->required();
    pade_cmd->add_option("--k", k, "approximant index")->required();
    pade_cmd->add_option("--order", order, "contact window (default 2*k+6)");

    CLI::App* wronskian_cmd =
        app.add_subcommand("wronskian", "Wronskian of complete functions");
    wronskian_cmd->add_option("--alphabet", alphabet_text, "alphabet A")->required();
    wronskian_cmd->add_option("--K", k_text, "comma-separated indices")->required();
    wronskian_cmd->add_flag("--bazin", bazin, "run the determinant-of-minors check");
    wronskian_cmd->add_option("--order", order, "series order (default 2*max(K)+6)");

    CLI::App* cfrac_cmd = app.add_subcommand("cfrac", "continued fraction of sigma");
    cfrac_cmd->add_option("--alphabet", alphabet_text, "alphabet A")->required();
    cfrac_cmd->add_option("--depth", depth, "levels to compute")->required();
    cfrac_cmd->add_option("--order", order, "series order (default 2*depth+6)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "seeded property suites");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    verify_cmd->add_option("--suite", suites, "suites to run (default all)")
        ->check(CLI::IsMember(choices));
    verify_cmd->add_option("--trials", trials, "trials per suite")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify_cmd->add_flag("--parallel", parallel, "fan suites across threads");

    // lets --format appear after the subcommand name
    for (CLI::App* sub : {divide, remainder, pade_cmd, wronskian_cmd, cfrac_cmd, verify_cmd})
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("schurdiv");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, os, os);
        return code == 0 ? 0 : 1;
    }

    detail::Output out{os, format == "text"};
    try {
        if (divide->parsed()) return detail::run_divide(num_text, den_text, steps, order, out);
        if (remainder->parsed())
            return detail::run_remainder(alphabet_text, den_text, reciprocal, k, order, out);
        if (pade_cmd->parsed()) return detail::run_pade(alphabet_text, k, order, out);
        if (wronskian_cmd->parsed())
            return detail::run_wronskian(alphabet_text, k_text, bazin, order, out);
        if (cfrac_cmd->parsed()) return detail::run_cfrac(alphabet_text, depth, order, out);
        if (verify_cmd->parsed())
            return detail::run_verify(suites, seed, trials, parallel, out);
    } catch (const NonGenericError& e) {
        json payload{{"signal", "NonGeneric"},
                     {"vanishing", e.vanishing()},
                     {"message", e.what()}};
        out.emit(payload, {std::string("NonGeneric: ") + e.what()});
        return 2;
    } catch (const ParseError& e) {
        os << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const InsufficientPrecision& e) {
        os << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        os << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        os << "usage error: " << e.what() << "\n";
        return 1;
    }
    os << "no subcommand selected\n";
    return 1;
}

}  // namespace schurdiv::cli
