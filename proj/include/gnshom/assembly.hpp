#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gnshom/gamma.hpp"
#include "gnshom/rep_ring.hpp"

// Gluing patterns and a vanishing-verdict engine for assembly maps.  The
// engine only ever proves classes zero; an Inconclusive verdict never claims
// nontriviality.

namespace gnshom {

enum class ClassModuleKind { automatic, explicit_sum, unknown };

struct VertexSpec {
    std::string id;
    int rank = 0;
    int leaves = 0;
    int degree = 0;  // homology degree of the class carried by this vertex
    ClassModuleKind kind = ClassModuleKind::automatic;
    ModuleSum module;  // used when kind == explicit_sum
};

struct LeafRef {
    int vertex = 0;  // index into GluingPattern::vertices
    int leaf = 0;    // 1-based
    friend bool operator==(const LeafRef&, const LeafRef&) = default;
};

struct Pairing {
    LeafRef a, b;
};

struct GluingPattern {
    std::vector<VertexSpec> vertices;
    std::vector<Pairing> pairings;

    int vertex_index(std::string_view id) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].id == id) return static_cast<int>(i);
        return -1;
    }
    void glue(std::string_view va, int la, std::string_view vb, int lb) {
        int ia = vertex_index(va), ib = vertex_index(vb);
        if (ia < 0 || ib < 0) throw std::invalid_argument("glue: unknown vertex id");
        pairings.push_back({{ia, la}, {ib, lb}});
    }
};

struct Signature {
    int n = 0, s = 0, degree = 0, vcd = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::string signature_string(const Signature& sig) {
    std::ostringstream os;
    os << "n=" << sig.n << " s=" << sig.s << " degree=" << sig.degree << " vcd=" << sig.vcd;
    return os.str();
}

// Structural checks plus the glued signature:
//   n = sum(n_i) + E - V + 1,  s = sum(s_i) - 2E,  degree = sum(k_i).
inline Signature validate_pattern(const GluingPattern& p) {
    if (p.vertices.empty()) throw std::invalid_argument("pattern: no vertices");
    std::set<std::string> ids;
    for (const auto& v : p.vertices) {
        if (v.id.empty()) throw std::invalid_argument("pattern: empty vertex id");
        if (!ids.insert(v.id).second)
            throw std::invalid_argument("pattern: duplicate vertex id '" + v.id + "'");
        if (v.rank < 0 || v.leaves < 0 || v.degree < 0)
            throw std::invalid_argument("pattern: negative field on vertex '" + v.id + "'");
        if (v.rank == 0 && v.leaves < 3)
            throw std::invalid_argument("pattern: rank-0 vertex '" + v.id +
                                        "' needs at least 3 leaves");
        if (v.kind == ClassModuleKind::explicit_sum && v.module.degree != v.leaves)
            throw std::invalid_argument("pattern: explicit module degree of '" + v.id +
                                        "' does not match leaf count");
    }

    std::set<std::pair<int, int>> used;
    for (const auto& q : p.pairings) {
        for (LeafRef ref : {q.a, q.b}) {
            if (ref.vertex < 0 || ref.vertex >= static_cast<int>(p.vertices.size()))
                throw std::invalid_argument("pattern: pairing references unknown vertex");
            const auto& v = p.vertices[static_cast<std::size_t>(ref.vertex)];
            if (ref.leaf < 1 || ref.leaf > v.leaves)
                throw std::invalid_argument("pattern: leaf index out of range on '" + v.id + "'");
            if (!used.insert({ref.vertex, ref.leaf}).second)
                throw std::invalid_argument("pattern: leaf " + v.id + "." +
                                            std::to_string(ref.leaf) + " used twice");
        }
        if (q.a == q.b) throw std::invalid_argument("pattern: leaf glued to itself");
    }

    // connectivity
    std::vector<int> parent(p.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& q : p.pairings) parent[static_cast<std::size_t>(find(q.a.vertex))] = find(q.b.vertex);
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) != find(0))
            throw std::invalid_argument("pattern: not connected");

    Signature sig;
    const int e = static_cast<int>(p.pairings.size());
    const int nv = static_cast<int>(p.vertices.size());
    for (const auto& v : p.vertices) {
        sig.n += v.rank;
        sig.s += v.leaves;
        sig.degree += v.degree;
    }
    sig.n += e - nv + 1;
    sig.s -= 2 * e;
    sig.vcd = 2 * sig.n + sig.s - 3;
    return sig;
}

// H_{k_i}(Gamma_{n_i,s_i}) when it is known: automatic resolution works
// exactly for rank <= 2; explicit modules are taken as given; unknown stays
// unresolved and disables the support criteria.
inline std::optional<ModuleSum> resolve_class_module(const VertexSpec& v) {
    switch (v.kind) {
        case ClassModuleKind::explicit_sum: return v.module;
        case ClassModuleKind::unknown: return std::nullopt;
        case ClassModuleKind::automatic:
            if (v.rank <= 2) return gamma_cohomology(v.rank, v.leaves, v.degree);
            return std::nullopt;
    }
    return std::nullopt;
}

enum class Outcome { forced_zero, inconclusive };

struct Witness {
    Partition part;
    BigNat in_domain, in_target;
};

struct Verdict {
    Outcome outcome = Outcome::inconclusive;
    std::string criterion;  // which criterion fired; empty when inconclusive
    Signature signature;    // signature the criterion fired on (sub-pattern for "subgluing")
    std::vector<std::string> trace;
    std::vector<Witness> witnesses;  // common support, when the support test ran
    bool budget_exhausted = false;

    bool forced_zero() const { return outcome == Outcome::forced_zero; }
};

struct VerdictOptions {
    std::size_t subgluing_budget = 10000;
};

namespace detail {

inline std::string support_string(const ModuleSum& m) {
    std::string out = "{";
    for (const auto& [p, c] : m.terms) {
        if (out.size() > 1) out += ", ";
        out += format_partition(p);
    }
    return out + "}";
}

// Criteria (a)-(d); shared between the top-level pattern and sub-patterns.
inline std::optional<Verdict> evaluate_local(const GluingPattern& p, const Signature& sig,
                                             std::vector<Witness>* witnesses_out,
                                             bool* support_ran) {
    std::vector<std::optional<ModuleSum>> mods;
    mods.reserve(p.vertices.size());
    for (const auto& v : p.vertices) mods.push_back(resolve_class_module(v));

    // (a) a factor class is the zero module
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (mods[i] && mods[i]->is_zero()) {
            Verdict v;
            v.outcome = Outcome::forced_zero;
            v.criterion = "factor-zero";
            v.signature = sig;
            v.trace.push_back("class module of vertex '" + p.vertices[i].id + "' is 0: H_" +
                              std::to_string(p.vertices[i].degree) + "(Gamma_{" +
                              std::to_string(p.vertices[i].rank) + "," +
                              std::to_string(p.vertices[i].leaves) + "}) = 0");
            return v;
        }
    }

    // (b) target vanishes in the glued degree
    if (sig.degree > sig.vcd) {
        Verdict v;
        v.outcome = Outcome::forced_zero;
        v.criterion = "degree-bound";
        v.signature = sig;
        v.trace.push_back("degree " + std::to_string(sig.degree) + " exceeds vcd " +
                          std::to_string(sig.vcd) + " of the target");
        return v;
    }
    std::optional<ModuleSum> target;
    if (sig.n <= 2) {
        target = gamma_cohomology(sig.n, sig.s, sig.degree);
        if (target->is_zero()) {
            Verdict v;
            v.outcome = Outcome::forced_zero;
            v.criterion = "degree-bound";
            v.signature = sig;
            v.trace.push_back("target H_" + std::to_string(sig.degree) + "(Gamma_{" +
                              std::to_string(sig.n) + "," + std::to_string(sig.s) + "}) = 0");
            return v;
        }
    }

    // (c) two fully glued vertices with disjoint module support
    std::vector<int> glued_ends(p.vertices.size(), 0);
    for (const auto& q : p.pairings) {
        ++glued_ends[static_cast<std::size_t>(q.a.vertex)];
        ++glued_ends[static_cast<std::size_t>(q.b.vertex)];
    }
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
            if (!mods[i] || !mods[j]) continue;
            if (glued_ends[i] != p.vertices[i].leaves || glued_ends[j] != p.vertices[j].leaves)
                continue;
            bool only_between = true;
            for (const auto& q : p.pairings) {
                bool ti = q.a.vertex == static_cast<int>(i) || q.b.vertex == static_cast<int>(i);
                bool tj = q.a.vertex == static_cast<int>(j) || q.b.vertex == static_cast<int>(j);
                if ((ti || tj) && !(ti && tj)) {
                    only_between = false;
                    break;
                }
            }
            if (!only_between) continue;
            if (coinvariant_dim(*mods[i], *mods[j]).is_zero()) {
                Verdict v;
                v.outcome = Outcome::forced_zero;
                v.criterion = "coinvariant";
                v.signature = sig;
                v.trace.push_back("vertices '" + p.vertices[i].id + "' and '" + p.vertices[j].id +
                                  "' are fully glued to each other and their modules share no "
                                  "irreducible: " +
                                  support_string(*mods[i]) + " vs " + support_string(*mods[j]));
                return v;
            }
        }
    }

    // (d) induced S_s-module support test
    if (sig.n <= 2) {
        bool all = true;
        for (const auto& m : mods) all = all && m.has_value();
        if (all) {
            ModuleSum domain = irreducible(Partition());  // unit of the induction product
            for (std::size_t i = 0; i < p.vertices.size(); ++i) {
                int unglued = p.vertices[i].leaves - glued_ends[i];
                domain = induction_product(domain, restrict_to(*mods[i], unglued));
            }
            if (support_ran) *support_ran = true;
            std::vector<Witness> common;
            for (const auto& [part, mult] : domain.terms) {
                auto it = target->terms.find(part);
                if (it != target->terms.end()) common.push_back({part, mult, it->second});
            }
            if (common.empty()) {
                Verdict v;
                v.outcome = Outcome::forced_zero;
                v.criterion = "induced-support";
                v.signature = sig;
                v.trace.push_back("induced domain support " + support_string(domain) +
                                  " is disjoint from target support " + support_string(*target) +
                                  " in H_" + std::to_string(sig.degree) + "(Gamma_{" +
                                  std::to_string(sig.n) + "," + std::to_string(sig.s) + "})");
                return v;
            }
            if (witnesses_out) *witnesses_out = std::move(common);
        }
    }
    return std::nullopt;
}

inline Verdict evaluate_pattern(const GluingPattern& p, bool allow_subgluing,
                                const VerdictOptions& opts) {
    Signature sig = validate_pattern(p);
    std::vector<Witness> witnesses;
    bool support_ran = false;
    if (auto forced = evaluate_local(p, sig, &witnesses, &support_ran)) return *forced;

    bool exhausted = false;
    if (allow_subgluing) {
        const int nv = static_cast<int>(p.vertices.size());
        if (nv <= 16) {
            std::size_t evaluated = 0;
            // (e): connected sub-patterns of rank <= 2, smallest vertex subsets
            // first; a ForcedZero intermediate kills the whole class.
            for (int size = 1; size <= nv && !exhausted; ++size) {
                for (unsigned mask = 1; mask < (1u << nv) && !exhausted; ++mask) {
                    if (std::popcount(mask) != size) continue;
                    int rank_sum = 0;
                    for (int i = 0; i < nv; ++i)
                        if (mask & (1u << i)) rank_sum += p.vertices[static_cast<std::size_t>(i)].rank;
                    std::vector<int> internal;  // pairing indices inside the subset
                    for (std::size_t qi = 0; qi < p.pairings.size(); ++qi) {
                        const auto& q = p.pairings[qi];
                        if ((mask & (1u << q.a.vertex)) && (mask & (1u << q.b.vertex)))
                            internal.push_back(static_cast<int>(qi));
                    }
                    const int hi = std::min(static_cast<int>(internal.size()),
                                            size + 1 - rank_sum);  // keeps sub-rank <= 2
                    const int lo = std::max(1, size - 1);          // connectivity floor
                    for (int qsize = lo; qsize <= hi && !exhausted; ++qsize) {
                        std::vector<int> pick(static_cast<std::size_t>(qsize));
                        auto combos = [&](auto&& self, int from, int depth) -> std::optional<Verdict> {
                            if (exhausted) return std::nullopt;
                            if (depth == qsize) {
                                if (size == nv &&
                                    qsize == static_cast<int>(p.pairings.size()))
                                    return std::nullopt;  // the pattern itself
                                // connectivity of the sub-pattern
                                std::vector<int> comp(static_cast<std::size_t>(nv), -1);
                                std::vector<int> verts;
                                for (int i = 0; i < nv; ++i)
                                    if (mask & (1u << i)) {
                                        comp[static_cast<std::size_t>(i)] =
                                            static_cast<int>(verts.size());
                                        verts.push_back(i);
                                    }
                                std::vector<int> parent(verts.size());
                                for (std::size_t i = 0; i < verts.size(); ++i)
                                    parent[i] = static_cast<int>(i);
                                auto find = [&](int x) {
                                    while (parent[static_cast<std::size_t>(x)] != x)
                                        x = parent[static_cast<std::size_t>(x)] =
                                            parent[static_cast<std::size_t>(
                                                parent[static_cast<std::size_t>(x)])];
                                    return x;
                                };
                                for (int qi : pick) {
                                    const auto& q = p.pairings[static_cast<std::size_t>(qi)];
                                    parent[static_cast<std::size_t>(
                                        find(comp[static_cast<std::size_t>(q.a.vertex)]))] =
                                        find(comp[static_cast<std::size_t>(q.b.vertex)]);
                                }
                                for (std::size_t i = 0; i < verts.size(); ++i)
                                    if (find(static_cast<int>(i)) != find(0)) return std::nullopt;

                                if (evaluated >= opts.subgluing_budget) {
                                    exhausted = true;
                                    return std::nullopt;
                                }
                                ++evaluated;

                                GluingPattern sub;
                                for (int i : verts)
                                    sub.vertices.push_back(p.vertices[static_cast<std::size_t>(i)]);
                                for (int qi : pick) {
                                    Pairing q = p.pairings[static_cast<std::size_t>(qi)];
                                    q.a.vertex = comp[static_cast<std::size_t>(q.a.vertex)];
                                    q.b.vertex = comp[static_cast<std::size_t>(q.b.vertex)];
                                    sub.pairings.push_back(q);
                                }
                                Signature sub_sig = validate_pattern(sub);
                                if (auto inner = evaluate_local(sub, sub_sig, nullptr, nullptr)) {
                                    Verdict v;
                                    v.outcome = Outcome::forced_zero;
                                    v.criterion = "subgluing";
                                    v.signature = sub_sig;
                                    std::string who = "{";
                                    for (int i : verts) {
                                        if (who.size() > 1) who += ", ";
                                        who += p.vertices[static_cast<std::size_t>(i)].id;
                                    }
                                    who += "}";
                                    v.trace.push_back("intermediate gluing of " + who + " with " +
                                                      std::to_string(qsize) +
                                                      " pairing(s) has signature " +
                                                      signature_string(sub_sig));
                                    v.trace.push_back("inner verdict: " + inner->criterion);
                                    for (const auto& line : inner->trace)
                                        v.trace.push_back("  " + line);
                                    return v;
                                }
                                return std::nullopt;
                            }
                            for (int c = from; c < static_cast<int>(internal.size()); ++c) {
                                pick[static_cast<std::size_t>(depth)] = internal[static_cast<std::size_t>(c)];
                                if (auto r = self(self, c + 1, depth + 1)) return r;
                            }
                            return std::nullopt;
                        };
                        if (auto forced = combos(combos, 0, 0)) return *forced;
                    }
                }
            }
        } else {
            exhausted = true;  // too many vertices to enumerate sub-patterns
        }
    }

    Verdict v;
    v.outcome = Outcome::inconclusive;
    v.signature = sig;
    v.witnesses = std::move(witnesses);
    v.budget_exhausted = exhausted;
    if (support_ran && !v.witnesses.empty())
        v.trace.push_back("no criterion fired; common support witnesses recorded");
    else
        v.trace.push_back("no criterion fired; support test not evaluable");
    return v;
}

}  // namespace detail

// Sound vanishing analysis.  ForcedZero means a representation-theoretic
// proof that the assembled class is zero; Inconclusive carries the common
// support witnesses when the induced-support test could run.
inline Verdict assembly_verdict(const GluingPattern& p, VerdictOptions opts = {}) {
    return detail::evaluate_pattern(p, /*allow_subgluing=*/true, opts);
}

// Generalized Morita patterns: rank-one vertices carry top classes, rank-zero
// vertices are connectors.  Zero is forced by unequal rank-one valences or by
// a loop at a rank-one vertex.
inline Verdict morita_verdict(const GluingPattern& p) {
    Signature sig = validate_pattern(p);
    std::vector<int> v1_valences;
    for (const auto& v : p.vertices) {
        if (v.rank != 0 && v.rank != 1)
            throw std::invalid_argument("morita_verdict: vertices must have rank 0 or 1");
        if (v.rank == 1) {
            if (v.leaves % 2 == 0)
                throw std::invalid_argument("morita_verdict: even valence at rank-one vertex '" +
                                            v.id + "'");
            if (v.leaves < 3)
                throw std::invalid_argument("morita_verdict: rank-one valence must be >= 3");
            v1_valences.push_back(v.leaves);
        }
    }
    for (const auto& q : p.pairings) {
        const auto& va = p.vertices[static_cast<std::size_t>(q.a.vertex)];
        const auto& vb = p.vertices[static_cast<std::size_t>(q.b.vertex)];
        if (va.rank == 0 && vb.rank == 0)
            throw std::invalid_argument(
                "morita_verdict: rank-zero vertices must be isolated from each other");
    }

    Verdict out;
    out.signature = sig;
    for (std::size_t i = 1; i < v1_valences.size(); ++i) {
        if (v1_valences[i] != v1_valences[0]) {
            out.outcome = Outcome::forced_zero;
            out.criterion = "unequal-valence";
            out.trace.push_back("rank-one vertices of valences " +
                                std::to_string(v1_valences[0]) + " and " +
                                std::to_string(v1_valences[i]) + " force the class to vanish");
            return out;
        }
    }
    for (const auto& q : p.pairings) {
        if (q.a.vertex == q.b.vertex &&
            p.vertices[static_cast<std::size_t>(q.a.vertex)].rank == 1) {
            out.outcome = Outcome::forced_zero;
            out.criterion = "loop-at-rank-one";
            out.trace.push_back("edge with both ends at rank-one vertex '" +
                                p.vertices[static_cast<std::size_t>(q.a.vertex)].id +
                                "' forces the class to vanish");
            return out;
        }
    }
    out.outcome = Outcome::inconclusive;
    out.trace.push_back("no Morita vanishing criterion fired");
    return out;
}

// Pattern-level name for the coinvariant pairing.
inline BigNat coinvariant_pairing(const ModuleSum& a, const ModuleSum& b) {
    return coinvariant_dim(a, b);
}

// Line-oriented pattern files:
//   vertex <id> rank=<int> leaves=<int> degree=<int> [module=<sum>|module=unknown]
//   glue <id>.<leaf> <id>.<leaf>
// '#' starts a comment; leaf indices are 1-based.
inline GluingPattern parse_pattern_text(std::string_view text) {
    GluingPattern p;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("pattern file line " + std::to_string(line_no) + ": " + what);
    };
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::string module_text;
        bool has_module = false;
        if (std::size_t mpos = line.find("module="); mpos != std::string_view::npos) {
            has_module = true;
            module_text = std::string(line.substr(mpos + 7));
            line = line.substr(0, mpos);
            while (!module_text.empty() && (module_text.back() == ' ' || module_text.back() == '\r' ||
                                            module_text.back() == '\t'))
                module_text.pop_back();
        }

        std::istringstream words{std::string(line)};
        std::string head;
        if (!(words >> head)) {
            if (has_module) fail("module= without a vertex directive");
            continue;
        }
        if (head == "vertex") {
            VertexSpec v;
            if (!(words >> v.id)) fail("vertex needs an id");
            bool saw_rank = false, saw_leaves = false, saw_degree = false;
            std::string kv;
            while (words >> kv) {
                std::size_t eq = kv.find('=');
                if (eq == std::string::npos) fail("expected key=value, got '" + kv + "'");
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                int parsed = 0;
                try {
                    parsed = std::stoi(val);
                } catch (const std::exception&) {
                    fail("bad integer value for '" + key + "'");
                }
                if (key == "rank") {
                    v.rank = parsed;
                    saw_rank = true;
                } else if (key == "leaves") {
                    v.leaves = parsed;
                    saw_leaves = true;
                } else if (key == "degree") {
                    v.degree = parsed;
                    saw_degree = true;
                } else {
                    fail("unknown key '" + key + "'");
                }
            }
            if (!saw_rank || !saw_leaves || !saw_degree)
                fail("vertex needs rank=, leaves= and degree=");
            if (has_module) {
                if (module_text == "unknown") {
                    v.kind = ClassModuleKind::unknown;
                } else {
                    v.kind = ClassModuleKind::explicit_sum;
                    v.module = parse_module_sum(module_text, v.leaves);
                }
            }
            if (p.vertex_index(v.id) >= 0) fail("duplicate vertex id '" + v.id + "'");
            p.vertices.push_back(std::move(v));
        } else if (head == "glue") {
            if (has_module) fail("glue does not take module=");
            std::string ea, eb;
            if (!(words >> ea >> eb)) fail("glue needs two endpoints");
            std::string extra;
            if (words >> extra) fail("unexpected token '" + extra + "'");
            auto endpoint = [&](const std::string& e) -> LeafRef {
                std::size_t dot = e.rfind('.');
                if (dot == std::string::npos || dot == 0 || dot + 1 >= e.size())
                    fail("endpoint must be <id>.<leaf>, got '" + e + "'");
                int vi = p.vertex_index(e.substr(0, dot));
                if (vi < 0) fail("unknown vertex '" + e.substr(0, dot) + "'");
                int leaf = 0;
                try {
                    leaf = std::stoi(e.substr(dot + 1));
                } catch (const std::exception&) {
                    fail("bad leaf index in '" + e + "'");
                }
                return {vi, leaf};
            };
            LeafRef a = endpoint(ea), b = endpoint(eb);
            p.pairings.push_back({a, b});
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    return p;
}

}  // namespace gnshom
