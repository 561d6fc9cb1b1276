#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gnshom/bignat.hpp"
#include "gnshom/modular_forms.hpp"
#include "gnshom/partition.hpp"
#include "gnshom/rep_ring.hpp"

// Closed-form (co)homology of the groups Gamma_{n,s} for n <= 2 as
// S_s-modules.  Cohomology and homology agree as S_s-modules here (every
// finite-dimensional S_s-module is self-dual), so one function serves both.

namespace gnshom {

enum class FormKind { cusp, full };

struct WLayer {
    int index = 0;       // 0 <= index < q/2
    FormKind kind = FormKind::cusp;  // cusp iff index even
    int weight = 0;      // q + 2 - 2*index
    int form_dim = 0;    // dim of the cusp/full space at that weight
    Partition part;      // (2^index, 1^{q-2*index})
};

// W_q = H^1(GL_2(Z); H^{wedge q}), layered by form spaces tensored with
// two-column partitions.  Layers with form_dim 0 stay in the layer list but
// drop out of the flattened module.
struct ModularLayeredSum {
    int q = 0;
    std::vector<WLayer> layers;
    ModuleSum flattened;
};

inline ModularLayeredSum w_module(int q) {
    if (q < 0 || q % 2 != 0) throw std::invalid_argument("w_module: q must be even and >= 0");
    ModularLayeredSum w;
    w.q = q;
    w.flattened = ModuleSum(q);
    for (int i = 0; 2 * i < q; ++i) {
        WLayer layer;
        layer.index = i;
        layer.kind = i % 2 == 0 ? FormKind::cusp : FormKind::full;
        layer.weight = q + 2 - 2 * i;
        FormDims f = modular_dims(layer.weight);
        layer.form_dim = layer.kind == FormKind::cusp ? f.dim_cusp : f.dim_full;
        std::vector<int> parts(static_cast<std::size_t>(i), 2);
        parts.insert(parts.end(), static_cast<std::size_t>(q - 2 * i), 1);
        layer.part = Partition(std::move(parts));
        if (layer.form_dim > 0)
            w.flattened.add(layer.part, BigNat(static_cast<std::uint64_t>(layer.form_dim)));
        w.layers.push_back(std::move(layer));
    }
    return w;
}

// Image of W_q under restriction to the parabolic line: one copy of each
// full-form layer, independent of the form dimension (only the value of the
// form at infinity survives).
inline ModuleSum parabolic_image(const ModularLayeredSum& w) {
    ModuleSum out(w.q);
    for (const auto& layer : w.layers)
        if (layer.kind == FormKind::full && layer.form_dim > 0) out.add(layer.part, BigNat(1));
    return out;
}

// H^i(Gamma_{n,s}) for n <= 2.  Total in i: degenerate or out-of-range inputs
// give the zero sum.  Ranks n >= 3 are unknown and rejected.
inline ModuleSum gamma_cohomology(int n, int s, int i) {
    if (n < 0 || n > 2) throw std::domain_error("gamma_cohomology: unsupported rank");
    if (s < 0) return ModuleSum(0);
    if (i < 0) return ModuleSum(s);

    switch (n) {
        case 0:
            return i == 0 ? irreducible(rectangle(s, s > 0 ? 1 : 0)) : ModuleSum(s);
        case 1: {
            if (s == 0)  // Gamma_{1,0} = Out(F_1) = Z/2: rational cohomology of a point
                return i == 0 ? irreducible(Partition()) : ModuleSum(0);
            if (i % 2 != 0 || i > s - 1) return ModuleSum(s);
            return irreducible(hook_shape(s - i, i));
        }
        default: {
            if (i % 4 == 0) {
                const int m = i / 4;
                if (i > s) return ModuleSum(s);
                return induction_product(irreducible(rectangle(2, 2 * m)),
                                         irreducible(rectangle(s - 4 * m, s - 4 * m > 0 ? 1 : 0)));
            }
            if (i % 2 == 0) return ModuleSum(s);  // i = 4m + 2
            const int m = (i - 1) / 2;
            if (s - 2 * m < 0) return ModuleSum(s);
            return induction_product(
                w_module(2 * m).flattened,
                irreducible(rectangle(s - 2 * m, s - 2 * m > 0 ? 1 : 0)));
        }
    }
}

// Schur-Weyl decomposition of V^{wedge q} for dim V = n: pairs (lambda,
// lambda') over partitions of q with at most n rows.
struct SchurWeylTerm {
    Partition gl_weight;  // lambda, a GL_n highest weight
    Partition sym_part;   // lambda', the S_q side after the sign twist

    friend bool operator==(const SchurWeylTerm&, const SchurWeylTerm&) = default;
};

inline std::vector<SchurWeylTerm> schur_weyl_wedge(int n, int q) {
    if (n < 1 || q < 0) throw std::invalid_argument("schur_weyl_wedge: need n >= 1, q >= 0");
    std::vector<SchurWeylTerm> out;
    for (auto& lam : partitions_max_length(q, n)) out.push_back({lam, lam.transpose()});
    return out;
}

// H^q(F_n^s) = V^{wedge q} o P_{(s-q)} term by term; empty above q = s.
struct CoefficientTerm {
    Partition gl_weight;
    ModuleSum induced;  // P_{lambda'} o P_{(s-q)}, an S_s-module
};

inline std::vector<CoefficientTerm> coefficients_module(int n, int s, int q) {
    if (q < 0 || s < 0) throw std::invalid_argument("coefficients_module: negative input");
    std::vector<CoefficientTerm> out;
    if (q > s) return out;
    ModuleSum row = irreducible(rectangle(s - q, s - q > 0 ? 1 : 0));
    for (auto& term : schur_weyl_wedge(n, q))
        out.push_back({term.gl_weight, induction_product(irreducible(term.sym_part), row)});
    return out;
}

// Two-row GL_2 weight in Sym/det normal form: S_{(a,b)} = Sym^{a-b} (x) det^b.
inline std::pair<int, int> gl2_normal_form(const Partition& lam) {
    if (lam.length() > 2) throw std::invalid_argument("gl2_normal_form: more than two rows");
    return {lam.part(0) - lam.part(1), lam.part(1)};
}

enum class GL2H1Kind { zero, cusp, full };

struct GL2H1 {
    GL2H1Kind kind = GL2H1Kind::zero;
    int weight = 0;
    int dim = 0;

    friend bool operator==(const GL2H1&, const GL2H1&) = default;
};

// H^1(GL_2(Z); Sym^r (x) det^l): zero for odd r, cusp forms of weight r+2 for
// r, l even, full forms of weight r+2 for r even and l odd.
inline GL2H1 gl2_h1(int r, int ell) {
    if (r < 0 || ell < 0) throw std::invalid_argument("gl2_h1: negative input");
    GL2H1 out;
    out.weight = r + 2;
    if (r % 2 != 0) return out;
    FormDims f = modular_dims(r + 2);
    if (ell % 2 == 0) {
        out.kind = GL2H1Kind::cusp;
        out.dim = f.dim_cusp;
    } else {
        out.kind = GL2H1Kind::full;
        out.dim = f.dim_full;
    }
    return out;
}

// GL_n(Z)-invariants of V^{wedge q}: P_{(n^{2m})} when q = 2mn, else zero.
inline ModuleSum gl_invariants_wedge(int n, int q) {
    if (n < 1 || q < 0) throw std::invalid_argument("gl_invariants_wedge: need n >= 1, q >= 0");
    if (q % (2 * n) != 0) return ModuleSum(q);
    return irreducible(rectangle(n, q / n));
}

// Multiplicity of P_{(s-2mn, n^{2m})} in P_{(n^{2m})} o P_{(s-2mn)}; this is
// the summand that survives to H^{2mn}(Gamma_{n,s}) for any rank n.
inline BigNat theorem_2mn_summand(int n, int m, int s) {
    if (n < 1 || m < 1) throw std::invalid_argument("theorem_2mn_summand: need n, m >= 1");
    if (s < 2 * m * n) throw std::invalid_argument("theorem_2mn_summand: s < 2mn");
    const int head = s - 2 * m * n;
    if (head < n) return BigNat();
    std::vector<int> parts{head};
    parts.insert(parts.end(), static_cast<std::size_t>(2 * m), n);
    return lr_coefficient(rectangle(n, 2 * m), rectangle(head, head > 0 ? 1 : 0),
                          Partition(std::move(parts)));
}

// dim of the Schur functor S_lambda applied to an N-dimensional space, by the
// hook content formula; zero when lambda has more than N rows.
inline BigNat schur_dim(const Partition& lam, int N) {
    if (N < 0) throw std::invalid_argument("schur_dim: negative dimension");
    if (lam.length() > N) return BigNat();
    if (lam.empty()) return BigNat(1);
    const Partition t = lam.transpose();
    BigNat num(1), den(1);
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.part(i); ++j) {
            num *= BigNat(static_cast<std::uint64_t>(N + j - i));
            den *= BigNat(static_cast<std::uint64_t>(hook_length(lam, t, i, j)));
        }
    return BigNat::divexact(num, den);
}

// H_k of the hairy Lie graph complex with rank n, s hairs labeled by an
// N-dimensional space: transpose-match V^{wedge s} against
// H^{2n+s-2-k}(Gamma_{n,s}).
struct HairyTerm {
    Partition gl_weight;
    BigNat mult;
};

struct HairyDim {
    BigNat total;
    std::vector<HairyTerm> terms;
};

inline HairyDim hairy_dim(int n, int s, int k, int N) {
    if (n < 1 || n > 2) throw std::domain_error("hairy_dim: unsupported rank");
    if (s < 0 || N < 0) throw std::invalid_argument("hairy_dim: negative input");
    HairyDim out;
    ModuleSum a = gamma_cohomology(n, s, 2 * n + s - 2 - k);
    for (const auto& [p, c] : a.terms) {
        Partition lam = p.transpose();
        BigNat d = schur_dim(lam, N);
        if (d.is_zero()) continue;
        out.total += c * d;
        out.terms.push_back({std::move(lam), c});
    }
    return out;
}

// Degree and sp-weight detected inside the homology of the Lie algebra of
// positive-degree symplectic derivations.
struct SymplecticDetection {
    int degree = 0;
    Partition weight;
};

inline SymplecticDetection symplectic_detection(int n, int m, int d) {
    if (n < 1 || m < 0 || d < 0)
        throw std::invalid_argument("symplectic_detection: need n >= 1, m >= 0, d >= 0");
    std::vector<int> parts(static_cast<std::size_t>(n), 2 * m + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(d), 1);
    return {3 * n + d - 2, Partition(std::move(parts))};
}

// Domain of the map built from pairs of forms of equal weight: layer i of
// W_{2m} contributes Lambda^2 of its form space, i.e. C(form_dim, 2).
struct CuspPairLayer {
    int index = 0;
    int weight = 0;
    FormKind kind = FormKind::cusp;
    int form_dim = 0;
    BigNat wedge2_dim;
};

struct CuspPairDomain {
    std::vector<CuspPairLayer> layers;
    BigNat total;
    int target_degree = 0;  // 4m + 2
    int target_rank = 0;    // 2m + 3, i.e. the map lands in H_{4m+2}(Out(F_{2m+3}))
};

inline CuspPairDomain cusp_pair_domain(int m) {
    if (m < 1) throw std::invalid_argument("cusp_pair_domain: need m >= 1");
    CuspPairDomain out;
    out.target_degree = 4 * m + 2;
    out.target_rank = 2 * m + 3;
    for (const auto& layer : w_module(2 * m).layers) {
        CuspPairLayer c;
        c.index = layer.index;
        c.weight = layer.weight;
        c.kind = layer.kind;
        c.form_dim = layer.form_dim;
        c.wedge2_dim = binomial(layer.form_dim, 2);
        out.total += c.wedge2_dim;
        out.layers.push_back(std::move(c));
    }
    return out;
}

}  // namespace gnshom
