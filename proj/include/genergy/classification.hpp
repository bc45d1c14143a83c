#pragma once

#include <optional>
#include <span>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> coloring;   // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;  // vertex sequence of an odd cycle otherwise
};

/// Breadth-first two-colouring; on failure the offending odd closed walk is
/// cut down to a simple odd cycle.
BipartiteResult is_bipartite(const Graph& g);

/// A simple cycle as its vertex sequence plus membership masks.
struct Cycle {
    std::vector<int> vertices;
    Graph::Row vertex_mask = 0;
    unsigned __int128 edge_mask = 0;  // bit index = upper-triangle pair index

    int length() const noexcept { return static_cast<int>(vertices.size()); }
};

/// Every simple cycle of odd length, each reported once. n <= 12.
std::vector<Cycle> odd_cycles(const Graph& g);

enum class ClassId { Class1, Class2 };

/// Class2 iff g has two disjoint odd cycles with lengths p + q = 2 (mod 4).
struct ClassLabel {
    ClassId id = ClassId::Class1;
    std::optional<std::pair<Cycle, Cycle>> witness;
};

enum class Disjointness { Vertex, Edge };

/// Vertex-disjointness is the reading used throughout; Edge exists to audit
/// whether the alternative reading would ever change a label.
/// Throws UnsupportedScaleError for n > 12.
ClassLabel classify(const Graph& g, Disjointness mode = Disjointness::Vertex);

/// True if the witness pair is odd, disjoint under mode, and p+q = 2 (mod 4).
bool validate_witness(const Cycle& a, const Cycle& b, Disjointness mode = Disjointness::Vertex);

/// Cut edges via DFS low-link.
std::vector<Edge> bridges(const Graph& g);

/// True iff deleting f increases the number of connected components.
/// Throws NotAnEdgeError if f contains a non-edge.
bool is_edge_cut(const Graph& g, std::span<const Edge> f);

}  // namespace genergy
