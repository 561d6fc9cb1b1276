#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gnshom {

// Arbitrary-precision non-negative integer.  Little-endian base-2^32 limbs,
// no trailing zero limbs; zero is the empty limb vector.  Multiplicities and
// dimensions in this library routinely pass 2^64.
class BigNat {
public:
    struct DivMod;

    BigNat() = default;
    BigNat(std::uint64_t v) {
        if (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }

    static BigNat from_decimal(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("BigNat: empty decimal string");
        BigNat r;
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("BigNat: bad decimal digit");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(c - '0'));
        }
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    std::uint64_t to_u64() const {
        if (limbs_.size() > 2) throw std::overflow_error("BigNat: value exceeds 64 bits");
        std::uint64_t v = 0;
        if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }

    BigNat& operator+=(const BigNat& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = carry + limbs_[i];
            if (i < o.limbs_.size()) cur += o.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= o.limbs_.size()) break;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }
    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }

    // Requires *this >= o.
    BigNat& operator-=(const BigNat& o) {
        if (*this < o) throw std::domain_error("BigNat: negative subtraction");
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                               (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
            borrow = cur < 0 ? 1 : 0;
            limbs_[i] = static_cast<std::uint32_t>(cur);
        }
        trim();
        return *this;
    }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }

    friend BigNat operator*(const BigNat& a, const BigNat& b) {
        if (a.is_zero() || b.is_zero()) return BigNat();
        BigNat r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        return r;
    }
    BigNat& operator*=(const BigNat& o) { return *this = *this * o; }

    static DivMod divmod(const BigNat& u, const BigNat& v);
    static BigNat divexact(const BigNat& a, const BigNat& b);
    std::string to_decimal() const;

private:
    std::vector<std::uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        trim();
    }

    void add_small(std::uint32_t a) {
        std::uint64_t carry = a;
        for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
            std::uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    static DivMod divmod_small(const BigNat& u, std::uint32_t v);
    static DivMod divmod_knuth(const BigNat& u, const BigNat& v);
};

struct BigNat::DivMod {
    BigNat quot, rem;
};

inline BigNat::DivMod BigNat::divmod_small(const BigNat& u, std::uint32_t v) {
    DivMod out;
    out.quot.limbs_.assign(u.limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = u.limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | u.limbs_[i];
        out.quot.limbs_[i] = static_cast<std::uint32_t>(cur / v);
        rem = cur % v;
    }
    out.quot.trim();
    out.rem = BigNat(rem);
    return out;
}

// Knuth algorithm D; v has at least two limbs and u >= v.
inline BigNat::DivMod BigNat::divmod_knuth(const BigNat& u, const BigNat& v) {
    const std::uint64_t base = std::uint64_t(1) << 32;
    const std::size_t n = v.limbs_.size();
    const std::size_t m = u.limbs_.size() - n;
    const int sh = std::countl_zero(v.limbs_.back());

    auto shl = [sh](std::uint32_t hi, std::uint32_t lo) -> std::uint32_t {
        if (sh == 0) return hi;
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(hi) << sh) |
                                          (static_cast<std::uint64_t>(lo) >> (32 - sh)));
    };

    std::vector<std::uint32_t> vn(n), un(u.limbs_.size() + 1);
    for (std::size_t i = n; i-- > 1;) vn[i] = shl(v.limbs_[i], v.limbs_[i - 1]);
    vn[0] = v.limbs_[0] << sh;
    un[u.limbs_.size()] =
        sh == 0 ? 0
                : static_cast<std::uint32_t>(static_cast<std::uint64_t>(u.limbs_.back()) >>
                                             (32 - sh));
    for (std::size_t i = u.limbs_.size(); i-- > 1;) un[i] = shl(u.limbs_[i], u.limbs_[i - 1]);
    un[0] = u.limbs_[0] << sh;

    DivMod out;
    out.quot.limbs_.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= base || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= base) break;
        }
        std::uint64_t carry = 0;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xffffffffu);
            un[i + j] = static_cast<std::uint32_t>(t);
            borrow = t < 0 ? 1 : 0;
        }
        std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow -
                         static_cast<std::int64_t>(carry);
        un[j + n] = static_cast<std::uint32_t>(t);
        if (t < 0) {
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c;
                un[i + j] = static_cast<std::uint32_t>(s);
                c = s >> 32;
            }
            un[j + n] = static_cast<std::uint32_t>(un[j + n] + c);
        }
        out.quot.limbs_[j] = static_cast<std::uint32_t>(qhat);
    }
    out.quot.trim();

    out.rem.limbs_.assign(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.rem.limbs_[i] =
            sh == 0 ? un[i]
                    : static_cast<std::uint32_t>(
                          (un[i] >> sh) | (static_cast<std::uint64_t>(un[i + 1]) << (32 - sh)));
    out.rem.limbs_[n - 1] = un[n - 1] >> sh;
    out.rem.trim();
    return out;
}

inline BigNat::DivMod BigNat::divmod(const BigNat& u, const BigNat& v) {
    if (v.is_zero()) throw std::domain_error("BigNat: division by zero");
    if (u < v) {
        DivMod out;
        out.rem = u;
        return out;
    }
    if (v.limbs_.size() == 1) return divmod_small(u, v.limbs_[0]);
    return divmod_knuth(u, v);
}

// Exact division; throws if the divisor does not divide evenly.
inline BigNat BigNat::divexact(const BigNat& a, const BigNat& b) {
    DivMod d = divmod(a, b);
    if (!d.rem.is_zero()) throw std::logic_error("BigNat: inexact division");
    return d.quot;
}

inline std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> groups;  // base 10^9, little-endian
    BigNat cur = *this;
    while (!cur.is_zero()) {
        DivMod d = divmod_small(cur, 1000000000u);
        groups.push_back(d.rem.is_zero() ? 0u : d.rem.limbs_[0]);
        cur = std::move(d.quot);
    }
    std::string s = std::to_string(groups.back());
    char buf[10];
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", groups[i]);
        s += buf;
    }
    return s;
}

inline BigNat operator/(const BigNat& a, const BigNat& b) { return BigNat::divmod(a, b).quot; }
inline BigNat operator%(const BigNat& a, const BigNat& b) { return BigNat::divmod(a, b).rem; }

inline BigNat factorial(int n) {
    BigNat r(1);
    for (int i = 2; i <= n; ++i) r *= BigNat(static_cast<std::uint64_t>(i));
    return r;
}

inline BigNat binomial(int n, int k) {
    if (k < 0 || k > n) return BigNat();
    if (k > n - k) k = n - k;
    BigNat num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= BigNat(static_cast<std::uint64_t>(n - i));
        den *= BigNat(static_cast<std::uint64_t>(i + 1));
    }
    return BigNat::divexact(num, den);
}

}  // namespace gnshom
