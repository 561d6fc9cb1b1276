#pragma once

#include <functional>
#include <ostream>
#include <string>

#include "gnshom/gamma.hpp"
#include "gnshom/modular_forms.hpp"
#include "gnshom/partition.hpp"
#include "gnshom/pattern_gallery.hpp"
#include "gnshom/rep_ring.hpp"

// Built-in oracle-equivalence and invariant suites, exposed by the CLI
// `selfcheck` verb.  Every check pits one computation route against an
// independent one or against a closed form.

namespace gnshom {

namespace detail {

struct SuiteRunner {
    std::ostream& out;
    long checks = 0;
    long failures = 0;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            out << "  FAIL: " << what << '\n';
        }
    }
};

}  // namespace detail

// Runs all suites, prints one line per suite plus a summary; returns the
// number of failed checks.
inline long run_selfcheck(std::ostream& out) {
    long total_checks = 0, total_failures = 0;
    auto suite = [&](const std::string& name, const std::function<void(detail::SuiteRunner&)>& fn) {
        detail::SuiteRunner r{out};
        fn(r);
        out << (r.failures ? "FAIL " : "ok   ") << name << ": " << (r.checks - r.failures) << "/"
            << r.checks << " checks\n";
        total_checks += r.checks;
        total_failures += r.failures;
    };

    suite("partition round-trip and transpose", [](detail::SuiteRunner& r) {
        for (int n = 0; n <= 10; ++n)
            for (const auto& p : all_partitions(n)) {
                r.check(parse_partition(format_partition(p)) == p, "parse(format) identity");
                r.check(p.transpose().transpose() == p, "transpose involution");
                r.check(dim_irreducible(p) == dim_irreducible(p.transpose()),
                        "dim invariance under transpose");
            }
    });

    suite("sum of squared dimensions = n!", [](detail::SuiteRunner& r) {
        for (int n = 0; n <= 8; ++n) {
            BigNat acc;
            for (const auto& p : all_partitions(n)) {
                BigNat d = dim_irreducible(p);
                acc += d * d;
            }
            r.check(acc == factorial(n), "n = " + std::to_string(n));
        }
    });

    suite("Pieri rule vs tableau enumeration", [](detail::SuiteRunner& r) {
        for (int n = 0; n <= 6; ++n)
            for (const auto& lam : all_partitions(n))
                for (int k = 0; k <= 4; ++k) {
                    ModuleSum fast = lr_expand(lam, rectangle(k, k > 0 ? 1 : 0));
                    ModuleSum slow(n + k);
                    for (const auto& nu : all_partitions(n + k))
                        slow.add(nu, lr_coefficient(lam, rectangle(k, k > 0 ? 1 : 0), nu));
                    r.check(fast == slow,
                            "P_" + format_partition(lam) + " o P_(" + std::to_string(k) + ")");
                }
    });

    suite("LR rule vs character inner products", [](detail::SuiteRunner& r) {
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; a + b <= 6; ++b)
                for (const auto& lam : all_partitions(a))
                    for (const auto& mu : all_partitions(b))
                        for (const auto& nu : all_partitions(a + b))
                            r.check(lr_coefficient(lam, mu, nu) ==
                                        BigNat(static_cast<std::uint64_t>(
                                            lr_via_characters(lam, mu, nu))),
                                    "c^" + format_partition(nu) + "_{" + format_partition(lam) +
                                        "," + format_partition(mu) + "}");
    });

    suite("induced dimension identity", [](detail::SuiteRunner& r) {
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= a; ++b)
                for (const auto& lam : all_partitions(a))
                    for (const auto& mu : all_partitions(b)) {
                        ModuleSum prod = induction_product(irreducible(lam), irreducible(mu));
                        r.check(prod.dimension() == binomial(a + b, a) * dim_irreducible(lam) *
                                                        dim_irreducible(mu),
                                "dim(P o Q) = binom(a+b,a) dim P dim Q");
                    }
    });

    suite("restriction and Frobenius reciprocity", [](detail::SuiteRunner& r) {
        for (int n = 1; n <= 7; ++n)
            for (const auto& p : all_partitions(n)) {
                ModuleSum res = restrict_to(irreducible(p), n - 1);
                r.check(res.dimension() == dim_irreducible(p), "branching preserves dimension");
            }
        for (int n = 1; n <= 5; ++n)
            for (const auto& lam : all_partitions(n))
                for (const auto& nu : all_partitions(n + 1)) {
                    ModuleSum ind = induction_product(irreducible(lam), irreducible(rectangle(1, 1)));
                    BigNat lhs = ind.multiplicity(nu);
                    BigNat rhs = restrict_to(irreducible(nu), n).multiplicity(lam);
                    r.check(lhs == rhs, "<Ind P, P_nu> = <P, Res P_nu>");
                }
    });

    suite("modular form dimensions", [](detail::SuiteRunner& r) {
        for (int k = 1; k <= 41; k += 2) r.check(modular_dims(k).dim_full == 0, "odd weight");
        r.check(modular_dims(2).dim_full == 0, "weight 2");
        for (int k : {4, 6, 8, 10})
            r.check(modular_dims(k).dim_full == 1 && modular_dims(k).dim_cusp == 0,
                    "weight " + std::to_string(k));
        r.check(modular_dims(12).dim_full == 2 && modular_dims(12).dim_cusp == 1, "weight 12");
        for (int k = 16; k <= 40; k += 2)
            r.check(modular_dims(k).dim_full - modular_dims(k - 12).dim_full == 1,
                    "k[E4,E6] weight ladder at " + std::to_string(k));
        r.check(modular_dims(14).dim_cusp == 0 && modular_dims(24).dim_cusp == 2,
                "cusp dimensions at 14 and 24");
    });

    suite("gamma cohomology invariants", [](detail::SuiteRunner& r) {
        for (int s = 0; s <= 10; ++s)
            for (int i = 0; i <= 14; ++i) {
                ModuleSum one = gamma_cohomology(1, s, i);
                BigNat expect =
                    (s >= 1 && i % 2 == 0 && i <= s - 1) ? binomial(s - 1, i) : BigNat(s == 0 && i == 0 ? 1 : 0);
                r.check(one.dimension() == expect, "rank-one binomial dimension");
                if (i > 2 + s - 3 && s >= 1) r.check(one.is_zero(), "rank-one vanishing above vcd");
                if (i > 4 + s - 3) r.check(gamma_cohomology(2, s, i).is_zero(),
                                           "rank-two vanishing above vcd");
            }
        for (int s = 0; s <= 12; ++s)
            for (int m = 0; 4 * m <= s; ++m) {
                BigNat lhs = gamma_cohomology(2, s, 4 * m).dimension();
                BigNat rhs = BigNat::divexact(
                    factorial(s), factorial(s - 4 * m) * factorial(2 * m + 1) * factorial(2 * m));
                r.check(lhs == rhs, "closed-form dimension of H^{4m}");
            }
        for (int k = 0; k <= 8; ++k)
            r.check(gamma_cohomology(2, 1, k).dimension() == gamma_cohomology(2, 0, k).dimension(),
                    "basepointed and free rank-two dimensions agree");
        for (int q = 0; q <= 12; q += 2)
            for (const auto& layer : w_module(q).layers) {
                r.check(layer.part.part(0) <= 2, "W layers have at most two columns");
                r.check(layer.part.transpose().part(1) == layer.index,
                        "second column length equals layer index");
            }
        for (int n : {1, 2})
            for (int i = 0; i <= 4; ++i)
                for (int s = 3 * i; s <= 12; ++s) {
                    ModuleSum lo = gamma_cohomology(n, s, i);
                    ModuleSum hi = gamma_cohomology(n, s + 1, i);
                    ModuleSum padded(s + 1);
                    for (const auto& [p, c] : lo.terms) {
                        std::vector<int> parts = p.parts();
                        if (parts.empty())
                            parts.push_back(1);
                        else
                            ++parts[0];
                        padded.add(Partition(std::move(parts)), c);
                    }
                    r.check(hi == padded, "representation stability padding");
                }
    });

    suite("assembly verdict soundness", [](detail::SuiteRunner& r) {
        r.check(assembly_verdict(gallery::self_gluing(7, 4)).forced_zero(),
                "self-gluing of a degree-4 class");
        r.check(assembly_verdict(gallery::rank_one_pair(1, 2)).forced_zero(),
                "unequal-degree rank-one pair");
        r.check(assembly_verdict(gallery::mss_odd(1)).forced_zero(), "odd candidate gamma_1");
        r.check(!assembly_verdict(gallery::morita(1)).forced_zero(), "mu_1 stays inconclusive");
        r.check(!assembly_verdict(gallery::alpha_pair_single_edge()).forced_zero(),
                "alpha_1 (x) alpha_1 stays inconclusive");
        r.check(!assembly_verdict(gallery::eisenstein(1)).forced_zero(),
                "Eisenstein pattern stays inconclusive");
        r.check(morita_verdict(gallery::morita_two_vertex(3, 5, 3)).forced_zero(),
                "unequal valences");
        r.check(!morita_verdict(gallery::morita(2)).forced_zero(), "mu_2 graph stays inconclusive");
    });

    out << "selfcheck: " << (total_checks - total_failures) << "/" << total_checks
        << " checks passed\n";
    return total_failures;
}

}  // namespace gnshom
