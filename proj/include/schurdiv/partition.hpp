#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "schurdiv/errors.hpp"

namespace schurdiv {

// Arbitrary finite integer index vector for generalized Schur determinants.
// Entries may be negative or out of order.
using IntVector = std::vector<long>;

// Weakly decreasing nonnegative parts; canonical form trims trailing zeros,
// so the empty partition is {}.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts) : p_(std::move(parts)) {
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] < 0)
                throw std::invalid_argument("Partition: negative part");
            if (i > 0 && p_[i] > p_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
    }

    static Partition rectangle(long height, long width) {
        if (height < 0) throw std::invalid_argument("Partition: negative height");
        return Partition(std::vector<long>(static_cast<std::size_t>(height), width));
    }

    const std::vector<long>& parts() const { return p_; }
    std::size_t length() const { return p_.size(); }
    long weight() const { return std::accumulate(p_.begin(), p_.end(), 0L); }
    bool is_empty() const { return p_.empty(); }

    IntVector to_int_vector() const { return p_; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<long> p_;
};

// Transpose of the Young diagram: conjugate(lambda)_j = #{i : lambda_i >= j}.
inline Partition conjugate(const Partition& lambda) {
    const auto& p = lambda.parts();
    if (p.empty()) return Partition();
    std::vector<long> out(static_cast<std::size_t>(p[0]));
    for (long j = 1; j <= p[0]; ++j)
        out[static_cast<std::size_t>(j - 1)] =
            static_cast<long>(std::count_if(p.begin(), p.end(), [j](long x) { return x >= j; }));
    return Partition(std::move(out));
}

// Comma-separated integers, e.g. "4,3" or "-1,3". Empty/blank input is the
// empty vector.
inline IntVector parse_int_vector(const std::string& text) {
    IntVector out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        std::size_t b = item.find_first_not_of(" \t");
        if (b == std::string::npos) throw ParseError("index vector: empty entry", pos);
        std::size_t e = item.find_last_not_of(" \t");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(item, &used);
        } catch (const std::exception&) {
            throw ParseError("index vector: invalid integer '" + item + "'", pos + b);
        }
        if (used != item.size())
            throw ParseError("index vector: trailing characters in '" + item + "'",
                             pos + b + used);
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline Partition parse_partition(const std::string& text) {
    return Partition(parse_int_vector(text));
}

// Witness rendering used in diagnostics and CLI payloads: "S_(4,4,4)".
inline std::string index_str(const IntVector& v) {
    std::string out = "S_(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace schurdiv
