#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "schurdiv/errors.hpp"

namespace schurdiv {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Invariants: denominator > 0, gcd(|num|, den) = 1,
// zero is 0/1. Text form is `-?digits(/digits)?`, e.g. "8/49", "-15/7", "3".
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}  // NOLINT: implicit on purpose, 0/1 literals
    Rational(long long n) : value_(n) {}
    explicit Rational(BigInt n) : value_(std::move(n)) {}

    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        value_ = Backend(std::move(num), std::move(den));
    }

    const BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    const BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(Backend(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : value_(std::move(v)) {}
    Backend value_;
};

// Parses the strict grammar `-?digits(/digits)?`; `offset` shifts reported error
// positions when the text is a slice of a larger input.
inline Rational parse_rational(const std::string& text, std::size_t offset = 0) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto fail = [&](const char* msg, std::size_t at) -> Rational {
        throw ParseError(std::string("invalid rational '") + text + "': " + msg, offset + at);
    };

    if (n == 0) return fail("empty", 0);
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    }
    std::size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return fail("expected digits", i);
    BigInt num(text.substr(num_begin, i - num_begin));
    if (neg) num = -num;

    if (i == n) return Rational(std::move(num), 1);
    if (text[i] != '/') return fail("unexpected character", i);
    ++i;
    std::size_t den_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) return fail("expected denominator digits", i);
    if (i != n) return fail("unexpected character", i);
    BigInt den(text.substr(den_begin, i - den_begin));
    if (den == 0) return fail("zero denominator", den_begin);
    return Rational(std::move(num), std::move(den));
}

}  // namespace schurdiv
