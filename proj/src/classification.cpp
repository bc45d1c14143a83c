#include "genergy/classification.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

#include "genergy/errors.hpp"

namespace genergy {

namespace {

constexpr int kClassifyLimit = 12;

int pair_index(int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

}  // namespace

BipartiteResult is_bipartite(const Graph& g) {
    const int n = g.order();
    BipartiteResult out;
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            Graph::Row row = g.neighbors(u);
            while (row != 0) {
                const int w = std::countr_zero(row);
                row &= row - 1;
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Same BFS level: walk both tree paths up to their meeting
                    // point; the two paths plus edge uw form a simple odd cycle.
                    std::vector<int> left{u};
                    std::vector<int> right{w};
                    int a = u;
                    int b = w;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back();
                    out.odd_cycle = left;
                    out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    out.coloring = std::move(color);
    return out;
}

std::vector<Cycle> odd_cycles(const Graph& g) {
    const int n = g.order();
    if (n > kClassifyLimit) {
        throw UnsupportedScaleError("cycle enumeration is limited to n <= " + std::to_string(kClassifyLimit));
    }
    std::vector<Cycle> out;
    std::vector<int> path;
    // Each cycle is rooted at its smallest vertex s, extended only through
    // larger vertices, and kept in the orientation whose second vertex is
    // smaller than its last.
    std::function<void(int, Graph::Row, unsigned __int128)> extend = [&](int v, Graph::Row used,
                                                                         unsigned __int128 edges) {
        const int s = path.front();
        if (path.size() >= 3 && g.has_edge(v, s) && path[1] < path.back() && path.size() % 2 == 1) {
            Cycle c;
            c.vertices = path;
            c.vertex_mask = used;
            c.edge_mask = edges | (static_cast<unsigned __int128>(1) << pair_index(v, s));
            out.push_back(std::move(c));
        }
        Graph::Row next = g.neighbors(v) & ~used & ~((Graph::Row{2} << s) - 1);
        while (next != 0) {
            const int w = std::countr_zero(next);
            next &= next - 1;
            path.push_back(w);
            extend(w, used | (Graph::Row{1} << w), edges | (static_cast<unsigned __int128>(1) << pair_index(v, w)));
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        extend(s, Graph::Row{1} << s, 0);
    }
    return out;
}

bool validate_witness(const Cycle& a, const Cycle& b, Disjointness mode) {
    if (a.length() % 2 == 0 || b.length() % 2 == 0) return false;
    if ((a.length() + b.length()) % 4 != 2) return false;
    if (mode == Disjointness::Vertex) return (a.vertex_mask & b.vertex_mask) == 0;
    return (a.edge_mask & b.edge_mask) == 0;
}

ClassLabel classify(const Graph& g, Disjointness mode) {
    const std::vector<Cycle> cycles = odd_cycles(g);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (validate_witness(cycles[i], cycles[j], mode)) {
                return {ClassId::Class2, std::make_pair(cycles[i], cycles[j])};
            }
        }
    }
    return {};
}

std::vector<Edge> bridges(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        Graph::Row row = g.neighbors(u);
        while (row != 0) {
            const int w = std::countr_zero(row);
            row &= row - 1;
            if (w == parent) continue;
            if (disc[w] == -1) {
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] > disc[u]) out.emplace_back(u, w);
            } else {
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v) {
        if (disc[v] == -1) dfs(v, -1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_edge_cut(const Graph& g, std::span<const Edge> f) {
    const Graph rest = delete_edges(g, f);
    return rest.component_count() > g.component_count();
}

}  // namespace genergy
