#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gnshom/bignat.hpp"

namespace gnshom {

// Weakly decreasing sequence of positive integers.  The empty sequence is the
// unique partition of 0 and stands for the one irreducible of the trivial
// group S_0.  Ordering is by size first, then lexicographically on the parts;
// this single ordering drives every piece of deterministic output.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const {  // 0-based, 0 beyond the last row
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    Partition transpose() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.assign(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(cols));
    }

    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 0; i < inner.length(); ++i)
            if (part(i) < inner.part(i)) return false;
        return true;
    }

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (int c = a.size() - b.size(); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
};

// (v^k) shorthand: k copies of v.
inline Partition rectangle(int v, int k) {
    if (k < 0 || (k > 0 && v < 1)) throw std::invalid_argument("rectangle: bad arguments");
    return Partition(std::vector<int>(static_cast<std::size_t>(k), v));
}

// Hook shape (a, 1^b).
inline Partition hook_shape(int a, int b) {
    std::vector<int> p;
    if (a > 0) p.push_back(a);
    p.insert(p.end(), static_cast<std::size_t>(b), 1);
    return Partition(std::move(p));
}

// Grammar: "(" entry ("," entry)* ")" | "()" with entry := int | int "^" int.
// Internal whitespace is tolerated; canonical output never contains any.
inline Partition parse_partition(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);

    std::size_t pos = 0;
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("parse_partition: ") + what + " in '" +
                                    std::string(text) + "'");
    };
    auto read_int = [&]() -> long {
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') fail("syntax error, expected integer");
        long v = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("integer out of range");
            ++pos;
        }
        return v;
    };

    if (pos >= s.size() || s[pos] != '(') fail("syntax error, expected '('");
    ++pos;
    std::vector<int> parts;
    if (pos < s.size() && s[pos] == ')') {
        ++pos;
    } else {
        while (true) {
            long value = read_int();
            long count = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                count = read_int();
            }
            if (value == 0) fail("zero part");
            if (count == 0) fail("zero exponent");
            if (!parts.empty() && parts.back() < value) fail("parts not weakly decreasing");
            parts.insert(parts.end(), static_cast<std::size_t>(count), static_cast<int>(value));
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            fail("syntax error, expected ',' or ')'");
        }
    }
    if (pos != s.size()) fail("trailing characters");
    return Partition(std::move(parts));
}

// Exponential notation for repeated parts, e.g. [2,2,2,1,1] -> "(2^3,1^2)".
inline std::string format_partition(const Partition& p) {
    std::string out = "(";
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i > 0) out += ',';
        out += std::to_string(parts[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    out += ')';
    return out;
}

// hook(i,j) = lambda_i - j + lambda'_j - i + 1 with 1-based i,j.
inline int hook_length(const Partition& p, const Partition& t, int i, int j) {
    return p.part(i) - (j + 1) + t.part(j) - (i + 1) + 1;  // 0-based in, same formula
}

// Number of standard Young tableaux of shape p: size! over the product of all
// hook lengths, divided exactly after the full product.
inline BigNat dim_irreducible(const Partition& p) {
    if (p.empty()) return BigNat(1);
    const Partition t = p.transpose();
    BigNat hooks(1);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j)
            hooks *= BigNat(static_cast<std::uint64_t>(hook_length(p, t, i, j)));
    return BigNat::divexact(factorial(p.size()), hooks);
}

// All partitions of n in canonical (size, lex) order.
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Partition> partitions_max_length(int n, int maxlen) {
    std::vector<Partition> out;
    for (auto& p : all_partitions(n))
        if (p.length() <= maxlen) out.push_back(p);
    return out;
}

}  // namespace gnshom
