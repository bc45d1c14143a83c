#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace genergy {

/// Undirected vertex pair, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 32 vertices. Each adjacency row is a
/// single 32-bit word. Values are immutable; edits return new graphs.
class Graph {
public:
    static constexpr int kMaxVertices = 32;
    using Row = std::uint32_t;

    Graph() = default;

    /// Edgeless graph on n vertices. Throws CapacityError if n > 32.
    explicit Graph(int n);

    /// Throws std::invalid_argument on loops or out-of-range endpoints.
    /// Duplicate edges are merged.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return e_; }

    bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
    Row neighbors(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept;

    /// Edges in lexicographic (u, v) order.
    std::vector<Edge> edges() const;

    /// Non-adjacent vertex pairs in lexicographic order.
    std::vector<Edge> non_edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    /// Image under the relabeling v -> perm[v]. perm must be a permutation
    /// of 0..order()-1.
    Graph relabeled(std::span<const int> perm) const;

    /// Induced subgraph on the vertices in mask, renumbered in index order.
    Graph induced(Row mask) const;

    Row vertex_mask() const noexcept;

    bool is_connected() const noexcept;
    int component_count() const noexcept;
    int triangle_count() const noexcept;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    /// Orders by vertex count, then by adjacency rows.
    friend std::strong_ordering operator<=>(const Graph& a, const Graph& b) noexcept;

private:
    int n_ = 0;
    int e_ = 0;
    std::array<Row, kMaxVertices> adj_{};
};

/// Vertex-relabeled disjoint union: g keeps its labels, h is shifted by
/// g.order(). Throws CapacityError when the result exceeds 32 vertices.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Removes every edge in f. Throws NotAnEdgeError if any is absent.
Graph delete_edges(const Graph& g, std::span<const Edge> f);

/// Component masks ordered by lowest vertex.
std::vector<Graph::Row> components(const Graph& g);

}  // namespace genergy
