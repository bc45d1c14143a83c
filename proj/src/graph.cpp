#include "genergy/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "genergy/errors.hpp"

namespace genergy {

namespace {

void check_vertex(int n, int v) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(n));
    }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices) {
        throw CapacityError("graph order " + std::to_string(n) + " exceeds limit of " +
                            std::to_string(kMaxVertices));
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& ed : edges) {
        check_vertex(n, ed.u);
        check_vertex(n, ed.v);
        if (ed.u == ed.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(ed.u));
        if (!g.has_edge(ed.u, ed.v)) {
            g.adj_[ed.u] |= Row{1} << ed.v;
            g.adj_[ed.v] |= Row{1} << ed.u;
            ++g.e_;
        }
    }
    return g;
}

int Graph::degree(int v) const noexcept { return std::popcount(adj_[v]); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(e_));
    for (int u = 0; u < n_; ++u) {
        Row higher = adj_[u] & ~((Row{2} << u) - 1);
        while (higher != 0) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    Graph g = *this;
    if (!g.has_edge(u, v)) {
        g.adj_[u] |= Row{1} << v;
        g.adj_[v] |= Row{1} << u;
        ++g.e_;
    }
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v || !has_edge(u, v)) {
        throw NotAnEdgeError("{" + std::to_string(u) + "," + std::to_string(v) +
                             "} is not an edge");
    }
    Graph g = *this;
    g.adj_[u] &= ~(Row{1} << v);
    g.adj_[v] &= ~(Row{1} << u);
    --g.e_;
    return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Graph g(n_);
    g.e_ = e_;
    for (int u = 0; u < n_; ++u) {
        Row row = adj_[u];
        Row mapped = 0;
        while (row != 0) {
            int v = std::countr_zero(row);
            row &= row - 1;
            mapped |= Row{1} << perm[v];
        }
        g.adj_[perm[u]] = mapped;
    }
    return g;
}

Graph Graph::induced(Row mask) const {
    std::array<int, kMaxVertices> index{};
    int k = 0;
    for (int v = 0; v < n_; ++v) {
        if ((mask >> v) & 1U) index[v] = k++;
    }
    Graph g(k);
    for (int u = 0; u < n_; ++u) {
        if (!((mask >> u) & 1U)) continue;
        Row row = adj_[u] & mask;
        while (row != 0) {
            int v = std::countr_zero(row);
            row &= row - 1;
            g.adj_[index[u]] |= Row{1} << index[v];
        }
        g.e_ += std::popcount(adj_[u] & mask);
    }
    g.e_ /= 2;
    return g;
}

Graph::Row Graph::vertex_mask() const noexcept {
    return n_ == kMaxVertices ? ~Row{0} : (Row{1} << n_) - 1;
}

bool Graph::is_connected() const noexcept { return n_ <= 1 || component_count() == 1; }

int Graph::component_count() const noexcept { return static_cast<int>(components(*this).size()); }

int Graph::triangle_count() const noexcept {
    int count = 0;
    for (int u = 0; u < n_; ++u) {
        Row higher = adj_[u] & ~((Row{2} << u) - 1);
        while (higher != 0) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            Row common = adj_[u] & adj_[v] & ~((Row{2} << v) - 1);
            count += std::popcount(common);
        }
    }
    return count;
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (int v = 0; v < a.n_; ++v) {
        if (auto c = a.adj_[v] <=> b.adj_[v]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > Graph::kMaxVertices) {
        throw CapacityError("disjoint union has " + std::to_string(n) + " vertices, limit is " +
                            std::to_string(Graph::kMaxVertices));
    }
    std::vector<Edge> all = g.edges();
    for (const Edge& ed : h.edges()) all.emplace_back(ed.u + g.order(), ed.v + g.order());
    return Graph::from_edges(n, all);
}

Graph delete_edges(const Graph& g, std::span<const Edge> f) {
    Graph out = g;
    for (const Edge& ed : f) {
        if (ed.u < 0 || ed.v >= g.order() || !out.has_edge(ed.u, ed.v)) {
            throw NotAnEdgeError("{" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                                 "} is not an edge");
        }
        out = out.without_edge(ed.u, ed.v);
    }
    return out;
}

std::vector<Graph::Row> components(const Graph& g) {
    std::vector<Graph::Row> out;
    Graph::Row unseen = g.vertex_mask();
    while (unseen != 0) {
        Graph::Row comp = unseen & (~unseen + 1);
        Graph::Row frontier = comp;
        while (frontier != 0) {
            Graph::Row next = 0;
            Graph::Row f = frontier;
            while (f != 0) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

}  // namespace genergy
