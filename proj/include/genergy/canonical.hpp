#pragma once

#include <span>
#include <string>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

/// perm[v] is the image of vertex v.
using Permutation = std::vector<int>;

struct CanonicalForm {
    std::string graph6;                   // graph6 of the canonical image
    double automorphism_group_order = 1;  // diagnostic

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    Graph canonical;                      // g.relabeled(labeling)
    std::vector<int> labeling;            // labeling[v] = canonical position of v
    std::vector<Permutation> generators;  // generate Aut(g)
    double group_order = 1;
};

/// Individualization-refinement search: equitable refinement by neighbour
/// counts, branching on the first non-singleton cell, pruning children that
/// lie in one orbit of the automorphisms found so far. The canonical image is
/// the lexicographically largest leaf graph.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_label(const Graph& g);

/// Canonical image by trying all n! relabelings; n <= 8 only. Produces a
/// different representative than canonical_label, but the same partition
/// into isomorphism classes.
CanonicalForm canonical_label_exhaustive(const Graph& g);

/// Direct backtracking isomorphism test; shares no code with the search above.
bool are_isomorphic(const Graph& g, const Graph& h);

/// Orbit representative (smallest member) of each vertex under the group
/// generated by gens.
std::vector<int> vertex_orbits(int n, std::span<const Permutation> gens);

/// True if perm is an automorphism of g.
bool is_automorphism(const Graph& g, std::span<const int> perm);

}  // namespace genergy
