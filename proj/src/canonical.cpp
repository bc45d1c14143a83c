#include "genergy/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "genergy/errors.hpp"
#include "genergy/graph6.hpp"

namespace genergy {

namespace {

using Row = Graph::Row;
using Partition = std::vector<Row>;  // ordered cells as vertex masks

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

// Splits every cell by the number of neighbours each vertex has in each
// splitter cell until the partition is equitable. Fragments are ordered by
// ascending count, which keeps the map label-invariant.
void refine(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size(); ++s) {
            const Row splitter = cells[s];
            for (std::size_t i = 0; i < cells.size(); ++i) {
                const Row cell = cells[i];
                if (std::popcount(cell) < 2) continue;
                std::array<Row, Graph::kMaxVertices + 1> by_count{};
                Row rest = cell;
                while (rest != 0) {
                    const int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    by_count[std::popcount(g.neighbors(v) & splitter)] |= Row{1} << v;
                }
                Partition fragments;
                for (Row frag : by_count) {
                    if (frag != 0) fragments.push_back(frag);
                }
                if (fragments.size() == 1) continue;
                cells[i] = fragments[0];
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i) + 1, fragments.begin() + 1,
                             fragments.end());
                i += fragments.size() - 1;
                changed = true;
            }
        }
    }
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run() {
        CanonicalLabeling out;
        if (n_ == 0) {
            out.canonical = g_;
            return out;
        }
        Partition root{g_.vertex_mask()};
        std::vector<int> prefix;
        visit(root, prefix);
        out.canonical = best_graph_;
        out.labeling = best_labeling_;
        out.generators = automorphisms_;
        out.group_order = group_order();
        return out;
    }

private:
    void visit(Partition cells, std::vector<int>& prefix) {
        refine(g_, cells);
        if (static_cast<int>(cells.size()) == n_) {
            leaf(cells, prefix);
            return;
        }
        std::size_t target = 0;
        while (std::popcount(cells[target]) < 2) ++target;

        std::vector<int> explored;
        Row rest = cells[target];
        while (rest != 0) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (!explored.empty()) {
                const std::vector<int> orbit = stabilizer_orbits(prefix);
                const bool covered = std::any_of(explored.begin(), explored.end(),
                                                 [&](int w) { return orbit[w] == orbit[v]; });
                if (covered) continue;
            }
            Partition child = cells;
            child[target] = Row{1} << v;
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells[target] & ~(Row{1} << v));
            prefix.push_back(v);
            visit(std::move(child), prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    void leaf(const Partition& cells, const std::vector<int>& prefix) {
        std::vector<int> labeling(static_cast<std::size_t>(n_));
        for (int pos = 0; pos < n_; ++pos) labeling[std::countr_zero(cells[pos])] = pos;
        Graph image = g_.relabeled(labeling);

        if (!have_first_) {
            have_first_ = true;
            first_path_ = prefix;
            first_graph_ = best_graph_ = image;
            first_labeling_ = best_labeling_ = labeling;
            return;
        }
        if (image == first_graph_) {
            record_automorphism(first_labeling_, labeling);
        } else if (image == best_graph_) {
            record_automorphism(best_labeling_, labeling);
        } else if (image > best_graph_) {
            best_graph_ = image;
            best_labeling_ = labeling;
        }
    }

    // Both labelings map g onto the same image, so from^-1 . to fixes g.
    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> inverse(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) inverse[from[v]] = v;
        Permutation gamma(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) gamma[v] = inverse[to[v]];
        automorphisms_.push_back(std::move(gamma));
    }

    std::vector<int> stabilizer_orbits(const std::vector<int>& fixed) const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        for (const Permutation& gamma : automorphisms_) {
            const bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find_root(parent, v);
                const int b = find_root(parent, gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = find_root(parent, v);
        return parent;
    }

    // |Aut| as the product of orbit lengths of the first-path vertices under
    // the point stabilisers of the preceding path.
    double group_order() const {
        double order = 1.0;
        std::vector<int> fixed;
        for (int v : first_path_) {
            const std::vector<int> orbit = stabilizer_orbits(fixed);
            order *= static_cast<double>(std::count(orbit.begin(), orbit.end(), orbit[v]));
            fixed.push_back(v);
        }
        return order;
    }

    const Graph& g_;
    int n_;
    bool have_first_ = false;
    std::vector<int> first_path_;
    Graph first_graph_;
    Graph best_graph_;
    std::vector<int> first_labeling_;
    std::vector<int> best_labeling_;
    std::vector<Permutation> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

CanonicalForm canonical_label(const Graph& g) {
    CanonicalLabeling lab = canonical_labeling(g);
    return {graph6_encode(lab.canonical), lab.group_order};
}

CanonicalForm canonical_label_exhaustive(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw UnsupportedScaleError("exhaustive canonical labeling is limited to n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Graph best = g;
    double automorphisms = 0;
    do {
        Graph image = g.relabeled(perm);
        if (image == g) automorphisms += 1;
        if (image > best) best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {graph6_encode(best), automorphisms};
}

namespace {

struct VertexColor {
    int degree;
    std::vector<int> neighbor_degrees;

    friend bool operator==(const VertexColor&, const VertexColor&) = default;
};

std::vector<VertexColor> colors(const Graph& g) {
    std::vector<VertexColor> out(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        out[v].degree = g.degree(v);
        Row row = g.neighbors(v);
        while (row != 0) {
            const int w = std::countr_zero(row);
            row &= row - 1;
            out[v].neighbor_degrees.push_back(g.degree(w));
        }
        std::sort(out[v].neighbor_degrees.begin(), out[v].neighbor_degrees.end());
    }
    return out;
}

class Matcher {
public:
    Matcher(const Graph& g, const Graph& h)
        : g_(g), h_(h), cg_(colors(g)), ch_(colors(h)), map_(static_cast<std::size_t>(g.order()), -1) {
        // Visit g's vertices so each one (after the first of its component)
        // has an already-mapped neighbour.
        const int n = g.order();
        std::vector<bool> placed(static_cast<std::size_t>(n), false);
        for (int placed_count = 0; placed_count < n; ++placed_count) {
            int pick = -1;
            int best_links = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int u : order_) links += g.has_edge(u, v) ? 1 : 0;
                if (links > best_links || (links == best_links && g.degree(v) > g.degree(pick))) {
                    pick = v;
                    best_links = links;
                }
            }
            placed[pick] = true;
            order_.push_back(pick);
        }
    }

    bool match(std::size_t depth = 0) {
        if (depth == order_.size()) return true;
        const int u = order_[depth];
        for (int w = 0; w < h_.order(); ++w) {
            if (used_ & (Row{1} << w)) continue;
            if (!(cg_[u] == ch_[w])) continue;
            bool consistent = true;
            for (std::size_t k = 0; k < depth && consistent; ++k) {
                const int x = order_[k];
                consistent = g_.has_edge(u, x) == h_.has_edge(w, map_[x]);
            }
            if (!consistent) continue;
            map_[u] = w;
            used_ |= Row{1} << w;
            if (match(depth + 1)) return true;
            used_ &= ~(Row{1} << w);
            map_[u] = -1;
        }
        return false;
    }

private:
    const Graph& g_;
    const Graph& h_;
    std::vector<VertexColor> cg_;
    std::vector<VertexColor> ch_;
    std::vector<int> map_;
    std::vector<int> order_;
    Row used_ = 0;
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return Matcher(g, h).match();
}

std::vector<int> vertex_orbits(int n, std::span<const Permutation> gens) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (const Permutation& gamma : gens) {
        for (int v = 0; v < n; ++v) {
            const int a = find_root(parent, v);
            const int b = find_root(parent, gamma[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    for (int v = 0; v < n; ++v) parent[v] = find_root(parent, v);
    return parent;
}

bool is_automorphism(const Graph& g, std::span<const int> perm) {
    return g.relabeled(perm) == g;
}

}  // namespace genergy
