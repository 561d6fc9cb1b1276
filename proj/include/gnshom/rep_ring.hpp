#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gnshom/bignat.hpp"
#include "gnshom/partition.hpp"

namespace gnshom {

// Isomorphism class of an S_n-module: partitions of n mapped to nonzero
// multiplicities.  The empty mapping is the zero module, valid at any degree.
struct ModuleSum {
    int degree = 0;
    std::map<Partition, BigNat> terms;

    ModuleSum() = default;
    explicit ModuleSum(int deg) : degree(deg) {}

    void add(const Partition& p, const BigNat& mult) {
        if (mult.is_zero()) return;
        if (p.size() != degree)
            throw std::logic_error("ModuleSum: partition size does not match degree");
        terms[p] += mult;
    }

    bool is_zero() const { return terms.empty(); }

    BigNat dimension() const {
        BigNat d;
        for (const auto& [p, c] : terms) d += c * dim_irreducible(p);
        return d;
    }

    BigNat multiplicity(const Partition& p) const {
        auto it = terms.find(p);
        return it == terms.end() ? BigNat() : it->second;
    }

    friend bool operator==(const ModuleSum& a, const ModuleSum& b) = default;
};

inline ModuleSum irreducible(const Partition& p) {
    ModuleSum m(p.size());
    m.add(p, BigNat(1));
    return m;
}

// "c1*(l1) + c2*(l2) + ..." with unit coefficients omitted, terms in canonical
// partition order, "0" for the zero sum.
inline std::string format_module_sum(const ModuleSum& m) {
    if (m.is_zero()) return "0";
    std::string out;
    for (const auto& [p, c] : m.terms) {
        if (!out.empty()) out += " + ";
        if (c != BigNat(1)) {
            out += c.to_decimal();
            out += '*';
        }
        out += format_partition(p);
    }
    return out;
}

inline ModuleSum parse_module_sum(std::string_view text, int degree) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    ModuleSum m(degree);
    std::string_view rest = trim(text);
    if (rest == "0") return m;
    while (!rest.empty()) {
        std::size_t plus = rest.find('+');
        std::string_view term = trim(plus == std::string_view::npos ? rest : rest.substr(0, plus));
        rest = plus == std::string_view::npos ? std::string_view() : trim(rest.substr(plus + 1));
        if (plus != std::string_view::npos && rest.empty())
            throw std::invalid_argument("parse_module_sum: dangling '+'");
        if (term.empty()) throw std::invalid_argument("parse_module_sum: empty term");
        BigNat coeff(1);
        if (std::size_t star = term.find('*'); star != std::string_view::npos) {
            coeff = BigNat::from_decimal(std::string(trim(term.substr(0, star))));
            term = trim(term.substr(star + 1));
        }
        Partition p = parse_partition(term);
        if (p.size() != degree)
            throw std::invalid_argument("parse_module_sum: partition of wrong size: " +
                                        std::string(term));
        m.add(p, coeff);
    }
    return m;
}

namespace detail {

// Column-strict skew tableaux of shape nu/lambda and content mu whose
// right-to-left, top-to-bottom reading word is a lattice word.
inline std::uint64_t lr_count_tableaux(const Partition& lam, const Partition& mu,
                                       const Partition& nu) {
    const int rows = nu.length();
    const int nent = mu.length();
    std::vector<std::pair<int, int>> cells;  // reading order
    for (int r = 0; r < rows; ++r)
        for (int c = nu.part(r) - 1; c >= lam.part(r); --c) cells.emplace_back(r, c);

    std::vector<int> counts(static_cast<std::size_t>(nent) + 1, 0);
    std::vector<std::vector<int>> val(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) val[static_cast<std::size_t>(r)].assign(nu.part(r), 0);

    std::uint64_t total = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        int hi = (c + 1 < nu.part(r)) ? val[r][static_cast<std::size_t>(c) + 1] : nent;
        int lo = 1;
        if (r > 0 && c >= lam.part(r - 1)) lo = val[r - 1][static_cast<std::size_t>(c)] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (counts[v] >= mu.part(v - 1)) continue;
            if (v > 1 && counts[v] >= counts[v - 1]) continue;
            ++counts[v];
            val[r][static_cast<std::size_t>(c)] = v;
            self(self, idx + 1);
            --counts[v];
        }
    };
    rec(rec, 0);
    return total;
}

inline std::uint64_t lr_count_memo(const Partition& lam, const Partition& mu,
                                   const Partition& nu) {
    static std::map<std::vector<int>, std::uint64_t> cache;
    static std::mutex mtx;
    std::vector<int> key;
    key.reserve(lam.parts().size() + mu.parts().size() + nu.parts().size() + 2);
    key.insert(key.end(), lam.parts().begin(), lam.parts().end());
    key.push_back(-1);
    key.insert(key.end(), mu.parts().begin(), mu.parts().end());
    key.push_back(-1);
    key.insert(key.end(), nu.parts().begin(), nu.parts().end());
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::uint64_t v = lr_count_tableaux(lam, mu, nu);
    std::lock_guard lock(mtx);
    cache.emplace(std::move(key), v);
    return v;
}

// All nu obtained from lam by adding k boxes, no two in the same column
// (coefficient 1 each: the Pieri rule).
inline std::vector<Partition> add_horizontal_strip(const Partition& lam, int k) {
    std::vector<Partition> out;
    const int len = lam.length();
    std::vector<int> nu(static_cast<std::size_t>(len) + 1, 0);
    auto rec = [&](auto&& self, int row, int rest) -> void {
        if (row > len) {
            if (rest == 0) {
                std::vector<int> parts;
                for (int i = 0; i <= len; ++i)
                    if (nu[static_cast<std::size_t>(i)] > 0)
                        parts.push_back(nu[static_cast<std::size_t>(i)]);
                out.emplace_back(Partition(std::move(parts)));
            }
            return;
        }
        int cap = (row == 0) ? rest : std::min(rest, lam.part(row - 1) - lam.part(row));
        for (int a = 0; a <= cap; ++a) {
            nu[static_cast<std::size_t>(row)] = lam.part(row) + a;
            self(self, row + 1, rest - a);
        }
    };
    rec(rec, 0, k);
    return out;
}

// Candidate nu for the general product: partitions of |lam|+|mu| containing
// lam.  The skew shape nu/lam has at most len(mu) cells per column and at
// most mu_1 cells in the first row, which prunes the row bounds.
inline std::vector<Partition> lr_candidates(const Partition& lam, const Partition& mu) {
    std::vector<Partition> out;
    const int maxrows = lam.length() + mu.length();
    std::vector<int> nu;
    auto rec = [&](auto&& self, int row, int rest) -> void {
        if (rest == 0 && row >= lam.length()) {
            out.emplace_back(Partition(nu));
            return;
        }
        if (row >= maxrows) return;
        int hi = row == 0 ? lam.part(0) + mu.part(0) : nu[static_cast<std::size_t>(row) - 1];
        if (row >= mu.length()) hi = std::min(hi, lam.part(row - mu.length()));
        hi = std::min(hi, lam.part(row) + rest);
        for (int v = hi; v >= std::max(lam.part(row), 1); --v) {
            int rest2 = rest - (v - lam.part(row));
            if (rest2 > (maxrows - row - 1) * v) continue;
            nu.push_back(v);
            self(self, row + 1, rest2);
            nu.pop_back();
        }
    };
    rec(rec, 0, mu.size());
    return out;
}

}  // namespace detail

// Littlewood-Richardson coefficient c^nu_{lam,mu}.
inline BigNat lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (nu.size() != lam.size() + mu.size()) return BigNat();
    if (!nu.contains(lam)) return BigNat();
    if (mu.empty()) return BigNat(1);
    return BigNat(detail::lr_count_memo(lam, mu, nu));
}

// Decomposition of P_lam o P_mu as a ModuleSum at |lam|+|mu|.
inline ModuleSum lr_expand(const Partition& lam, const Partition& mu) {
    ModuleSum out(lam.size() + mu.size());
    if (mu.empty()) {
        out.add(lam, BigNat(1));
        return out;
    }
    if (lam.empty()) {
        out.add(mu, BigNat(1));
        return out;
    }
    if (mu.length() == 1) {
        for (auto& nu : detail::add_horizontal_strip(lam, mu.part(0))) out.add(nu, BigNat(1));
        return out;
    }
    if (lam.length() == 1) return lr_expand(mu, lam);
    if (mu.part(0) == 1) {  // single column: transpose, Pieri, transpose back
        for (auto& nu : detail::add_horizontal_strip(lam.transpose(), mu.length()))
            out.add(nu.transpose(), BigNat(1));
        return out;
    }
    if (lam.part(0) == 1) return lr_expand(mu, lam);
    for (auto& nu : detail::lr_candidates(lam, mu)) {
        std::uint64_t c = detail::lr_count_memo(lam, mu, nu);
        if (c) out.add(nu, BigNat(c));
    }
    return out;
}

// Bilinear extension of the induction product P o Q.
inline ModuleSum induction_product(const ModuleSum& a, const ModuleSum& b) {
    ModuleSum out(a.degree + b.degree);
    for (const auto& [la, ca] : a.terms)
        for (const auto& [mu, cb] : b.terms) {
            ModuleSum expanded = lr_expand(la, mu);
            BigNat scale = ca * cb;
            for (const auto& [nu, c] : expanded.terms) out.add(nu, scale * c);
        }
    return out;
}

// Iterated branching rule: remove one box in all possible ways, n - m times.
inline ModuleSum restrict_to(const ModuleSum& a, int m) {
    if (m > a.degree || m < 0) throw std::invalid_argument("restrict_to: target degree above source");
    ModuleSum cur = a;
    while (cur.degree > m) {
        ModuleSum next(cur.degree - 1);
        for (const auto& [p, c] : cur.terms) {
            const auto& parts = p.parts();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;  // not a corner
                std::vector<int> q = parts;
                if (--q[i] == 0) q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
                next.add(Partition(std::move(q)), c);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Tensor with the alternating representation: transpose every term.
inline ModuleSum tensor_alt(const ModuleSum& a) {
    ModuleSum out(a.degree);
    for (const auto& [p, c] : a.terms) out.add(p.transpose(), c);
    return out;
}

// dim (A (x) B)_{S_n}: sum over common irreducibles of the multiplicity
// product, since (P_l (x) P_m)_{S_n} is k for l = m and 0 otherwise.
inline BigNat coinvariant_dim(const ModuleSum& a, const ModuleSum& b) {
    if (a.degree != b.degree) throw std::invalid_argument("coinvariant_dim: degree mismatch");
    BigNat total;
    for (const auto& [p, c] : a.terms) {
        auto it = b.terms.find(p);
        if (it != b.terms.end()) total += c * it->second;
    }
    return total;
}

namespace detail {

inline std::int64_t mn_recurse(std::vector<int> lam, const std::vector<int>& mu,
                               std::size_t mu_idx) {
    if (mu_idx == mu.size()) return lam.empty() ? 1 : 0;

    static std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> cache;
    static std::mutex mtx;
    std::pair<std::vector<int>, std::vector<int>> key(
        lam, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(mu_idx), mu.end()));
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    const int t = mu[mu_idx];
    const int len = static_cast<int>(lam.size());
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + (len - 1 - i);

    std::int64_t acc = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        if (b < t) continue;
        int nb = b - t;
        bool taken = false;
        int height = 0;
        for (int v : beta) {
            if (v == nb) taken = true;
            if (v > nb && v < b) ++height;
        }
        if (taken) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nlam;
        for (int j = 0; j < len; ++j) {
            int part = nbeta[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) nlam.push_back(part);
        }
        std::int64_t sub = mn_recurse(std::move(nlam), mu, mu_idx + 1);
        acc += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard lock(mtx);
    cache.emplace(std::move(key), acc);
    return acc;
}

}  // namespace detail

// Irreducible character value chi^lam at cycle type mu (Murnaghan-Nakayama).
inline std::int64_t mn_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("mn_character: size mismatch");
    return detail::mn_recurse(lam.parts(), mu.parts(), 0);
}

// Size of the conjugacy class of cycle type mu in S_n.
inline BigNat class_size(const Partition& mu) {
    BigNat denom(1);
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        for (std::size_t c = 1; c <= j - i; ++c)
            denom *= BigNat(static_cast<std::uint64_t>(parts[i]) * c);
        i = j;
    }
    return BigNat::divexact(factorial(mu.size()), denom);
}

// <Ind_{S_a x S_b}^{S_{a+b}}(chi^lam x chi^mu), chi^nu> computed from
// characters and class sizes via Frobenius reciprocity.  Independent of the
// tableau route; the self-check suites hold the two against each other.
inline std::int64_t lr_via_characters(const Partition& lam, const Partition& mu,
                                      const Partition& nu) {
    const int a = lam.size(), b = mu.size();
    if (nu.size() != a + b) return 0;
    if (a + b > 14) throw std::invalid_argument("lr_via_characters: size too large for int64");
    std::int64_t acc = 0;
    for (const auto& rho : all_partitions(a)) {
        const std::int64_t chi_l = mn_character(lam, rho);
        if (chi_l == 0) continue;
        const std::int64_t w_rho = static_cast<std::int64_t>(class_size(rho).to_u64());
        for (const auto& tau : all_partitions(b)) {
            const std::int64_t chi_m = mn_character(mu, tau);
            if (chi_m == 0) continue;
            const std::int64_t w_tau = static_cast<std::int64_t>(class_size(tau).to_u64());
            std::vector<int> merged = rho.parts();
            merged.insert(merged.end(), tau.parts().begin(), tau.parts().end());
            std::sort(merged.rbegin(), merged.rend());
            acc += w_rho * w_tau * chi_l * chi_m * mn_character(nu, Partition(std::move(merged)));
        }
    }
    const std::int64_t order =
        static_cast<std::int64_t>(factorial(a).to_u64() * factorial(b).to_u64());
    if (acc % order != 0) throw std::logic_error("lr_via_characters: inner product not integral");
    return acc / order;
}

}  // namespace gnshom
