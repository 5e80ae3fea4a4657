#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schurdiv/rational.hpp"

namespace schurdiv {

// Dense polynomial in z over Rational. Canonical form has no trailing zero
// coefficients; the zero polynomial is the empty vector and has degree -1.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit DensePoly(Rational constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit DensePoly(int constant) : DensePoly(Rational(constant)) {}

    static DensePoly monomial(Rational coeff, std::size_t power) {
        if (coeff.is_zero()) return DensePoly();
        std::vector<Rational> v(power + 1);
        v[power] = std::move(coeff);
        return DensePoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    DensePoly operator-() const {
        std::vector<Rational> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return DensePoly(std::move(v));
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return DensePoly(std::move(v));
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return DensePoly(std::move(v));
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return DensePoly(std::move(v));
    }

    friend DensePoly operator*(const Rational& s, const DensePoly& p) {
        std::vector<Rational> v(p.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * p.c_[i];
        return DensePoly(std::move(v));
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Coefficient reversal against a declared degree:
    // rev(p, d)(z) = z^d * p(1/z). Requires d >= degree().
    DensePoly reversed(std::size_t declared_degree) const {
        std::vector<Rational> v(declared_degree + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) v[declared_degree - i] = c_[i];
        return DensePoly(std::move(v));
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += c_[i].sign() > 0 ? " + " : " - ";
            else if (c_[i].sign() < 0) out += "-";
            Rational a = c_[i].sign() < 0 ? -c_[i] : c_[i];
            if (i == 0) {
                out += a.str();
            } else {
                if (!a.is_one()) out += a.str() + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace schurdiv
