#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

/// Named graph families. Every constructor uses a fixed labeling: the
/// center/hub is vertex 0 and the special leaf of S(n,e) is vertex 1.
struct FamilySpec {
    enum class Kind { Star, SGraph, BGraph, Cycle, Complete, CompleteBipartite, Wheel, DisjointUnion };

    Kind kind = Kind::Star;
    std::vector<int> params;
    std::vector<FamilySpec> parts;  // DisjointUnion only

    static FamilySpec star(int n) { return {Kind::Star, {n}, {}}; }
    static FamilySpec s_graph(int n, int e) { return {Kind::SGraph, {n, e}, {}}; }
    static FamilySpec b_graph(int n, int e) { return {Kind::BGraph, {n, e}, {}}; }
    static FamilySpec cycle(int k) { return {Kind::Cycle, {k}, {}}; }
    static FamilySpec complete(int k) { return {Kind::Complete, {k}, {}}; }
    static FamilySpec complete_bipartite(int a, int b) { return {Kind::CompleteBipartite, {a, b}, {}}; }
    static FamilySpec wheel(int k) { return {Kind::Wheel, {k}, {}}; }
    static FamilySpec disjoint_union(std::vector<FamilySpec> parts) {
        return {Kind::DisjointUnion, {}, std::move(parts)};
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Vertex count and edge list of a family member, without the 32-vertex cap
/// of Graph. Used for energy comparisons at larger n.
struct FamilyLayout {
    int n = 0;
    std::vector<Edge> edges;
};

/// Throws InvalidFamilyError for out-of-range parameters.
FamilyLayout family_layout(const FamilySpec& spec);

/// Star S_n plus e-n+1 edges joining leaf 1 to leaves 2, 3, ...
/// Requires n >= 3 and n-1 <= e <= 2n-3.
Graph make_s_graph(int n, int e);

/// Bipartite graph with parts {0, 1} and W = {2..n-1}: vertex 0 is joined to
/// all of W, vertex 1 to the first e-(n-2) vertices of W.
/// Requires n >= 3 and n-1 <= e <= 2(n-2).
Graph make_b_graph(int n, int e);

Graph make_star(int n);
Graph make_cycle(int k);
Graph make_complete(int k);
Graph make_complete_bipartite(int a, int b);

/// Hub 0 joined to every vertex of the rim cycle 1..k-1; W_5 has 8 edges.
Graph make_wheel(int k);

/// Throws InvalidFamilyError for out-of-range parameters.
Graph make_named(const FamilySpec& spec);

/// Parses the family mini-language: "S n e", "B n e", "C k", "K k",
/// "Kb a b", "W k", "Star n", joined by "+" for disjoint unions. A letter
/// prefix may be glued to its first number ("K4", "C3").
FamilySpec parse_family(std::string_view text);

/// Inverse of parse_family, in the spaced form ("S 5 5 + C 3").
std::string to_string(const FamilySpec& spec);

}  // namespace genergy
