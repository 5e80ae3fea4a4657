#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "schurdiv/dense_poly.hpp"
#include "schurdiv/rational.hpp"

namespace schurdiv {

// Laurent polynomial in z over Rational: finitely many terms c_e * z^e with
// e possibly negative. Canonical form stores no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Rational constant) { set(0, std::move(constant)); }
    explicit LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}
    explicit LaurentPoly(const DensePoly& p) {
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            set(static_cast<long>(i), p.coeff(i));
    }

    static LaurentPoly term(Rational coeff, long exponent) {
        LaurentPoly r;
        r.set(exponent, std::move(coeff));
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    Rational coeff(long e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rational(0) : it->second;
    }
    // Exponent bounds; only meaningful for nonzero values.
    long min_exponent() const { return t_.begin()->first; }
    long max_exponent() const { return t_.rbegin()->first; }
    const std::map<long, Rational>& terms() const { return t_; }

    void set(long e, Rational v) {
        if (v.is_zero()) t_.erase(e);
        else t_[e] = std::move(v);
    }
    void add_term(long e, const Rational& v) { set(e, coeff(e) + v); }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, v] : t_) r.t_.emplace(e, -v);
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, v] : b.t_) r.add_term(e, v);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, v] : b.t_) r.add_term(e, -v);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.t_)
            for (const auto& [eb, vb] : b.t_) r.add_term(ea + eb, va * vb);
        return r;
    }

    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
        LaurentPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, v] : p.t_) r.t_.emplace(e, s * v);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Multiplication by z^s.
    LaurentPoly shifted(long s) const {
        LaurentPoly r;
        for (const auto& [e, v] : t_) r.t_.emplace(e + s, v);
        return r;
    }

    // Substitutes z^{-1} = t, i.e. evaluates at z = 1/t. Positive exponents
    // require t != 0.
    Rational eval_at_z_inverse(const Rational& t) const {
        Rational acc(0);
        for (const auto& [e, v] : t_) {
            Rational p(1);
            if (e < 0)
                for (long i = 0; i < -e; ++i) p *= t;
            else
                for (long i = 0; i < e; ++i) p /= t;
            acc += v * p;
        }
        return acc;
    }

    // Requires min_exponent() >= 0.
    DensePoly to_dense() const {
        if (is_zero()) return DensePoly();
        if (min_exponent() < 0)
            throw std::invalid_argument("LaurentPoly::to_dense: negative exponent present");
        std::vector<Rational> v(static_cast<std::size_t>(max_exponent()) + 1);
        for (const auto& [e, c] : t_) v[static_cast<std::size_t>(e)] = c;
        return DensePoly(std::move(v));
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [e, v] : t_) {
            if (!out.empty()) out += v.sign() > 0 ? " + " : " - ";
            else if (v.sign() < 0) out += "-";
            Rational a = v.sign() < 0 ? -v : v;
            if (e == 0) {
                out += a.str();
            } else {
                if (!a.is_one()) out += a.str() + "*";
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<long, Rational> t_;
};

}  // namespace schurdiv
