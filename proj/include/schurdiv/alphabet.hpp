#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schurdiv/dense_poly.hpp"
#include "schurdiv/errors.hpp"
#include "schurdiv/laurent_poly.hpp"
#include "schurdiv/rational.hpp"
#include "schurdiv/series.hpp"

namespace schurdiv {

// Formal difference of two finite multisets of rational letters. The generating
// series sigma_z of (plus - minus) is prod_{b in minus}(1 - b z) / prod_{a in plus}
// (1 - a z). Letters are kept sorted; plus and minus are not cross-cancelled.
struct VirtualAlphabet {
    std::vector<Rational> plus;
    std::vector<Rational> minus;

    VirtualAlphabet() = default;
    VirtualAlphabet(std::vector<Rational> p, std::vector<Rational> m = {})
        : plus(std::move(p)), minus(std::move(m)) {
        std::sort(plus.begin(), plus.end());
        std::sort(minus.begin(), minus.end());
    }

    bool is_empty() const { return plus.empty() && minus.empty(); }

    friend bool operator==(const VirtualAlphabet& a, const VirtualAlphabet& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
    friend bool operator!=(const VirtualAlphabet& a, const VirtualAlphabet& b) {
        return !(a == b);
    }

    std::string str() const {
        auto join = [](const std::vector<Rational>& v) {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ",";
                out += v[i].str();
            }
            return out;
        };
        std::string out = join(plus);
        if (!minus.empty()) out += ";" + join(minus);
        return out;
    }
};

// X - Y as virtual alphabets: (X.plus + Y.minus) - (X.minus + Y.plus).
inline VirtualAlphabet difference(const VirtualAlphabet& x, const VirtualAlphabet& y) {
    std::vector<Rational> p = x.plus, m = x.minus;
    p.insert(p.end(), y.minus.begin(), y.minus.end());
    m.insert(m.end(), y.plus.begin(), y.plus.end());
    return VirtualAlphabet(std::move(p), std::move(m));
}

inline VirtualAlphabet negate(const VirtualAlphabet& x) {
    return VirtualAlphabet(x.minus, x.plus);
}

// Grammar: plusList (';' minusList)? where each list is a (possibly empty)
// comma-separated sequence of rationals. Whitespace around tokens is allowed.
inline VirtualAlphabet parse_alphabet(const std::string& text) {
    auto parse_list = [&](const std::string& part, std::size_t offset) {
        std::vector<Rational> out;
        std::size_t ws_begin = part.find_first_not_of(" \t");
        if (ws_begin == std::string::npos) return out;  // all-blank list is empty
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = part.find(',', pos);
            std::string item = part.substr(pos, comma == std::string::npos
                                                    ? std::string::npos
                                                    : comma - pos);
            std::size_t b = item.find_first_not_of(" \t");
            if (b == std::string::npos)
                throw ParseError("alphabet: empty letter", offset + pos);
            std::size_t e = item.find_last_not_of(" \t");
            out.push_back(parse_rational(item.substr(b, e - b + 1), offset + pos + b));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    };

    std::size_t semi = text.find(';');
    if (semi == std::string::npos) return VirtualAlphabet(parse_list(text, 0));
    if (text.find(';', semi + 1) != std::string::npos)
        throw ParseError("alphabet: more than one ';'", text.find(';', semi + 1));
    return VirtualAlphabet(parse_list(text.substr(0, semi), 0),
                           parse_list(text.substr(semi + 1), semi + 1));
}

inline DensePoly poly_of_letters(const std::vector<Rational>& letters) {
    DensePoly acc(1);
    for (const auto& a : letters)
        acc = acc * DensePoly(std::vector<Rational>{Rational(1), -a});
    return acc;
}

// First T coefficients of sigma_z(V). Unitary by construction.
inline Series sigma(const VirtualAlphabet& v, std::size_t order) {
    Series num = Series::from_poly(poly_of_letters(v.minus), order);
    if (v.plus.empty()) return num;
    return series_div(num, Series::from_poly(poly_of_letters(v.plus), order));
}

// Complete function S_j(V): coefficient of z^j in sigma_z(V); zero for j < 0.
inline Rational complete(const VirtualAlphabet& v, long j) {
    if (j < 0) return Rational(0);
    if (j == 0) return Rational(1);
    return sigma(v, static_cast<std::size_t>(j) + 1).coeff(static_cast<std::size_t>(j));
}

// S_0(V) .. S_maxj(V) in one series expansion.
inline std::vector<Rational> complete_table(const VirtualAlphabet& v, long maxj) {
    if (maxj < 0) return {};
    return sigma(v, static_cast<std::size_t>(maxj) + 1).coeffs();
}

enum class LetterSign { plus, minus };

// S_j of V with the formal letter 1/z adjoined: for sign minus,
// S_j(V - 1/z) = S_j(V) - S_{j-1}(V) z^{-1}; for sign plus,
// S_j(V + 1/z) = sum_{m=0..j} S_{j-m}(V) z^{-m}.
inline LaurentPoly complete_with_letter(const VirtualAlphabet& v, long j, LetterSign sign) {
    LaurentPoly out;
    if (j < 0) return out;
    std::vector<Rational> s = complete_table(v, j);
    if (sign == LetterSign::minus) {
        out.set(0, s[static_cast<std::size_t>(j)]);
        if (j >= 1) out.set(-1, -s[static_cast<std::size_t>(j) - 1]);
    } else {
        for (long m = 0; m <= j; ++m)
            out.set(-m, s[static_cast<std::size_t>(j - m)]);
    }
    return out;
}

}  // namespace schurdiv
