#pragma once

#include <string>

#include "gnshom/assembly.hpp"

// Standard gluing patterns.  Conventions: rank-one vertices with 2k+1 leaves
// carry the top class in degree 2k; cross pairings are listed leaf-by-leaf.

namespace gnshom::gallery {

inline VertexSpec rank_one_top(std::string id, int k) {
    return {std::move(id), 1, 2 * k + 1, 2 * k, ClassModuleKind::automatic, {}};
}

// Two rank-one graphs with 2k+1 leaves each, all leaves paired up: the k-th
// class of the original series in H_{4k}(Out(F_{2k+2})).
inline GluingPattern morita(int k) {
    GluingPattern p;
    p.vertices.push_back(rank_one_top("a", k));
    p.vertices.push_back(rank_one_top("b", k));
    for (int l = 1; l <= 2 * k + 1; ++l) p.glue("a", l, "b", l);
    return p;
}

// alpha_1 (x) alpha_1 joined along a single pair of leaves, landing in
// H_4(Gamma_{2,4}); the image is the nonvanishing top class there.
inline GluingPattern alpha_pair_single_edge() {
    GluingPattern p;
    p.vertices.push_back(rank_one_top("a", 1));
    p.vertices.push_back(rank_one_top("b", 1));
    p.glue("a", 1, "b", 1);
    return p;
}

// Rank-two vertex of degree 2k+3 glued to a rank-one top class along 2k+1
// leaves, one leaf left free: the k-th Eisenstein pattern into
// H_{4k+3}(Aut(F_{2k+3})).
inline GluingPattern eisenstein(int k) {
    GluingPattern p;
    p.vertices.push_back({"m", 2, 2 * k + 2, 2 * k + 3, ClassModuleKind::automatic, {}});
    p.vertices.push_back(rank_one_top("a", k));
    for (int l = 1; l <= 2 * k + 1; ++l) p.glue("m", l + 1, "a", l);  // m.1 stays free
    return p;
}

// The odd-degree candidates of the gamma_k series: rank-one vertices of
// degrees 2k+2 and 2k, a rank-two vertex of degree 5 with 4 leaves, glued as
// drawn (2k edges between the rank-one pair, one edge from the small one and
// three from the big one into the rank-two vertex).
inline GluingPattern mss_odd(int k) {
    GluingPattern p;
    p.vertices.push_back(rank_one_top("big", k + 1));    // 2k+3 leaves, degree 2k+2
    p.vertices.push_back(rank_one_top("small", k));      // 2k+1 leaves, degree 2k
    p.vertices.push_back({"two", 2, 4, 5, ClassModuleKind::automatic, {}});
    for (int l = 1; l <= 2 * k; ++l) p.glue("big", l, "small", l);
    p.glue("small", 2 * k + 1, "two", 1);
    for (int l = 1; l <= 3; ++l) p.glue("big", 2 * k + l, "two", 1 + l);
    return p;
}

// One rank-one vertex with s leaves carrying a degree-i class, two of its own
// leaves glued together: lands in H_i(Gamma_{2,s-2}).
inline GluingPattern self_gluing(int s, int degree) {
    GluingPattern p;
    p.vertices.push_back({"a", 1, s, degree, ClassModuleKind::automatic, {}});
    p.glue("a", 1, "a", 2);
    return p;
}

// Two rank-one top classes of degrees 2k1 and 2k2 joined by a given number of
// pairings (default one).
inline GluingPattern rank_one_pair(int k1, int k2, int pairings = 1) {
    GluingPattern p;
    p.vertices.push_back(rank_one_top("a", k1));
    p.vertices.push_back(rank_one_top("b", k2));
    for (int l = 1; l <= pairings; ++l) p.glue("a", l, "b", l);
    return p;
}

// Leaf stabilization: a rank-zero tripod glued along one leaf, carrying the
// class into Gamma_{n,s+1}.
inline GluingPattern leaf_stabilization(int n, int s, int degree) {
    GluingPattern p;
    p.vertices.push_back({"a", n, s, degree, ClassModuleKind::automatic, {}});
    p.vertices.push_back({"t", 0, 3, 0, ClassModuleKind::automatic, {}});
    p.glue("a", 1, "t", 1);
    return p;
}

// Basepointed lift of the k-th class of the original series: the two rank-one
// vertices share a rank-zero tripod whose third leaf stays free, landing in
// H_{4k}(Aut(F_{2k+2})).
inline GluingPattern morita_lift(int k) {
    GluingPattern p;
    p.vertices.push_back(rank_one_top("a", k));
    p.vertices.push_back(rank_one_top("b", k));
    p.vertices.push_back({"t", 0, 3, 0, ClassModuleKind::automatic, {}});
    p.glue("a", 1, "t", 1);
    p.glue("b", 1, "t", 2);
    for (int l = 2; l <= 2 * k + 1; ++l) p.glue("a", l, "b", l);
    return p;
}

// Rank stabilization of a degree-i class on a rank-one graph with s leaves:
// glue a rank-one two-leaf graph (degree 0) along one leaf.
inline GluingPattern rank_one_stabilization(int s, int degree) {
    GluingPattern p;
    p.vertices.push_back({"a", 1, s, degree, ClassModuleKind::automatic, {}});
    p.vertices.push_back({"stab", 1, 2, 0, ClassModuleKind::automatic, {}});
    p.glue("a", 1, "stab", 1);
    return p;
}

// First stage of the chain carrying the standard maximal torus of Aut(F_n):
// the top-degree-range class on a rank-one graph with 2n-1 leaves, one
// self-pairing, landing in H_k(Gamma_{2,2n-3}).
inline GluingPattern torus_chain(int n, int degree) { return self_gluing(2 * n - 1, degree); }

// Generalized Morita pattern on two rank-one vertices of odd valences v1, v2
// joined by `edges` pairings (remaining leaves stay free).
inline GluingPattern morita_two_vertex(int v1, int v2, int edges) {
    GluingPattern p;
    p.vertices.push_back({"a", 1, v1, v1 - 1, ClassModuleKind::automatic, {}});
    p.vertices.push_back({"b", 1, v2, v2 - 1, ClassModuleKind::automatic, {}});
    for (int l = 1; l <= edges; ++l) p.glue("a", l, "b", l);
    return p;
}

// Pair of rank-two vertices of odd degree 2m+1 with all 2m leaves matched:
// the domain of the form-pair map into H_{4m+2}(Out(F_{2m+3})).
inline GluingPattern form_pair(int m) {
    GluingPattern p;
    p.vertices.push_back({"a", 2, 2 * m, 2 * m + 1, ClassModuleKind::automatic, {}});
    p.vertices.push_back({"b", 2, 2 * m, 2 * m + 1, ClassModuleKind::automatic, {}});
    for (int l = 1; l <= 2 * m; ++l) p.glue("a", l, "b", l);
    return p;
}

}  // namespace gnshom::gallery
