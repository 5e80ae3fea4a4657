#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schurdiv/dense_poly.hpp"
#include "schurdiv/errors.hpp"
#include "schurdiv/rational.hpp"

namespace schurdiv {

// Truncated formal power series: coefficients of z^0 .. z^{order-1} are known
// exactly, nothing is claimed beyond. order >= 1 always. Binary operations
// return the minimum of the operand orders; no operation overstates precision.
class Series {
public:
    explicit Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw InsufficientPrecision("Series: order must be >= 1");
    }

    // A polynomial is exact, so padding it to any order is legitimate.
    static Series from_poly(const DensePoly& p, std::size_t order) {
        if (order == 0) throw InsufficientPrecision("Series: order must be >= 1");
        std::vector<Rational> v(order);
        for (std::size_t i = 0; i < order; ++i) v[i] = p.coeff(i);
        return Series(std::move(v));
    }

    static Series constant(Rational value, std::size_t order) {
        return from_poly(DensePoly(std::move(value)), order);
    }

    static Series one(std::size_t order) { return constant(Rational(1), order); }

    std::size_t order() const { return c_.size(); }
    const Rational& coeff(std::size_t i) const {
        if (i >= c_.size())
            throw InsufficientPrecision("Series::coeff: index beyond known order");
        return c_[i];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_unitary() const { return c_[0].is_one(); }

    // Index of the first nonzero known coefficient; order() when all known
    // coefficients vanish (the true valuation is then >= order()).
    std::size_t valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return c_.size();
    }

    Series truncated(std::size_t new_order) const {
        if (new_order == 0 || new_order > c_.size())
            throw InsufficientPrecision("Series::truncated: bad order");
        return Series(std::vector<Rational>(c_.begin(), c_.begin() + new_order));
    }

    Series operator-() const {
        std::vector<Rational> v(c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = -c_[i];
        return Series(std::move(v));
    }

    friend Series operator+(const Series& a, const Series& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = a.c_[i] + b.c_[i];
        return Series(std::move(v));
    }

    friend Series operator-(const Series& a, const Series& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = a.c_[i] - b.c_[i];
        return Series(std::move(v));
    }

    friend Series operator*(const Series& a, const Series& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; i + j < n; ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Series(std::move(v));
    }

    friend Series operator*(const Rational& s, const Series& f) {
        std::vector<Rational> v(f.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * f.c_[i];
        return Series(std::move(v));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ", ";
            out += c_[i].str();
        }
        return out + "]";
    }

private:
    std::vector<Rational> c_;
};

// g = 1/f via the convolution recurrence g_n = -(sum_{i>=1} f_i g_{n-i}) / f_0.
inline Series series_inverse(const Series& f) {
    if (f.coeff(0).is_zero())
        throw ZeroConstantTerm("series_inverse: constant term is zero");
    std::size_t n = f.order();
    std::vector<Rational> g(n);
    g[0] = Rational(1) / f.coeff(0);
    for (std::size_t m = 1; m < n; ++m) {
        Rational acc(0);
        for (std::size_t i = 1; i <= m; ++i) acc += f.coeff(i) * g[m - i];
        g[m] = -acc / f.coeff(0);
    }
    return Series(std::move(g));
}

inline Series series_div(const Series& num, const Series& den) {
    std::size_t n = std::min(num.order(), den.order());
    return num.truncated(n) * series_inverse(den.truncated(n));
}

// True when the first n coefficients agree; both operands must know n of them.
inline bool prefix_equal(const Series& a, const Series& b, std::size_t n) {
    if (n > a.order() || n > b.order())
        throw InsufficientPrecision("prefix_equal: operands shorter than requested prefix");
    for (std::size_t i = 0; i < n; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

}  // namespace schurdiv
