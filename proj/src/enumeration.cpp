#include "genergy/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "genergy/canonical.hpp"
#include "genergy/classification.hpp"
#include "genergy/errors.hpp"
#include "genergy/graph6.hpp"
#include "genergy/parallel.hpp"
#include "genergy/spectral.hpp"

namespace genergy {

std::vector<Graph> GraphClassCensus::decode() const {
    std::vector<Graph> out;
    out.reserve(graphs.size());
    for (const std::string& s : graphs) out.push_back(graph6_decode(s));
    return out;
}

std::string to_string(Strategy s) {
    return s == Strategy::CanonicalAugmentation ? "canonical-augmentation" : "generate-and-filter";
}

bool within_envelope(int n, int e) noexcept { return n >= 1 && n <= 10 && e >= 0 && e <= n + 3; }

namespace {

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Union-find over the non-edges of g under the automorphism generators;
// returns one representative per orbit.
std::vector<Edge> non_edge_orbit_representatives(const Graph& g, const std::vector<Permutation>& gens) {
    const std::vector<Edge> pairs = g.non_edges();
    if (gens.empty()) return pairs;
    const int n = g.order();
    std::vector<int> index(static_cast<std::size_t>(n * n), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i].u * n + pairs[i].v] = static_cast<int>(i);
    std::vector<int> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Permutation& gamma : gens) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const Edge image(gamma[pairs[i].u], gamma[pairs[i].v]);
            const int a = root(static_cast<int>(i));
            const int b = root(index[image.u * n + image.v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<Edge> reps;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (root(static_cast<int>(i)) == static_cast<int>(i)) reps.push_back(pairs[i]);
    }
    return reps;
}

bool same_edge_orbit(const Edge& a, const Edge& b, const std::vector<Permutation>& gens) {
    if (a == b) return true;
    std::vector<Edge> orbit{a};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const Permutation& gamma : gens) {
            const Edge image(gamma[orbit[i].u], gamma[orbit[i].v]);
            if (image == b) return true;
            if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(image);
        }
    }
    return false;
}

// ---- canonical augmentation -------------------------------------------

std::vector<Graph> augment_trees(const std::vector<Graph>& parents, int threads) {
    std::vector<std::vector<Graph>> children(parents.size());
    parallel_for(parents.size(), threads, [&](std::size_t i) {
        const Graph& tree = parents[i];
        const int n = tree.order() + 1;
        const CanonicalLabeling parent_lab = canonical_labeling(tree);
        const std::vector<int> parent_orbits = vertex_orbits(tree.order(), parent_lab.generators);
        std::vector<Edge> edges = tree.edges();
        for (int v = 0; v < tree.order(); ++v) {
            if (parent_orbits[v] != v) continue;
            edges.emplace_back(v, n - 1);
            const Graph child = Graph::from_edges(n, edges);
            edges.pop_back();
            const CanonicalLabeling lab = canonical_labeling(child);
            // Canonical deletion: the leaf with the largest canonical position.
            int chosen = -1;
            for (int w = 0; w < n; ++w) {
                if (child.degree(w) == 1 && (chosen < 0 || lab.labeling[w] > lab.labeling[chosen])) chosen = w;
            }
            const std::vector<int> orbits = vertex_orbits(n, lab.generators);
            if (orbits[chosen] == orbits[n - 1]) children[i].push_back(lab.canonical);
        }
    });
    std::vector<Graph> out;
    for (auto& batch : children) out.insert(out.end(), batch.begin(), batch.end());
    return out;
}

std::vector<Graph> augment_edges(const std::vector<Graph>& parents, int threads) {
    std::vector<std::vector<Graph>> children(parents.size());
    parallel_for(parents.size(), threads, [&](std::size_t i) {
        const Graph& parent = parents[i];
        const CanonicalLabeling parent_lab = canonical_labeling(parent);
        for (const Edge& f : non_edge_orbit_representatives(parent, parent_lab.generators)) {
            const Graph child = parent.with_edge(f.u, f.v);
            const CanonicalLabeling lab = canonical_labeling(child);
            // Canonical deletion: among edges whose removal keeps the graph
            // connected, the one with the largest canonical endpoint pair.
            const std::vector<Edge> cut_edges = bridges(child);
            Edge chosen;
            std::pair<int, int> best{-1, -1};
            for (const Edge& ed : child.edges()) {
                if (std::binary_search(cut_edges.begin(), cut_edges.end(), ed)) continue;
                const int a = lab.labeling[ed.u];
                const int b = lab.labeling[ed.v];
                const std::pair<int, int> key{std::max(a, b), std::min(a, b)};
                if (key > best) {
                    best = key;
                    chosen = ed;
                }
            }
            if (same_edge_orbit(chosen, f, lab.generators)) children[i].push_back(lab.canonical);
        }
    });
    std::vector<Graph> out;
    for (auto& batch : children) out.insert(out.end(), batch.begin(), batch.end());
    return out;
}

// ---- generate and filter ----------------------------------------------

std::string invariant_key(const Graph& g) {
    std::vector<int> degrees;
    for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    std::string key;
    for (int d : degrees) key += std::to_string(d) + ",";
    key += "|";
    for (Int128 c : char_poly(g).coeffs) key += to_string(c) + ",";
    return key;
}

class IsoFilter {
public:
    void offer(const Graph& g) {
        std::vector<Graph>& bucket = buckets_[invariant_key(g)];
        for (const Graph& seen : bucket) {
            if (are_isomorphic(seen, g)) return;
        }
        bucket.push_back(g);
        kept_.push_back(g);
    }

    std::vector<Graph> take() { return std::move(kept_); }

private:
    std::unordered_map<std::string, std::vector<Graph>> buckets_;
    std::vector<Graph> kept_;
};

std::vector<Graph> extend_trees_filtered(const std::vector<Graph>& parents) {
    IsoFilter filter;
    for (const Graph& tree : parents) {
        const int n = tree.order() + 1;
        std::vector<Edge> edges = tree.edges();
        for (int v = 0; v < tree.order(); ++v) {
            edges.emplace_back(v, n - 1);
            filter.offer(Graph::from_edges(n, edges));
            edges.pop_back();
        }
    }
    return filter.take();
}

std::vector<Graph> extend_edges_filtered(const std::vector<Graph>& parents) {
    IsoFilter filter;
    for (const Graph& parent : parents) {
        for (const Edge& f : parent.non_edges()) filter.offer(parent.with_edge(f.u, f.v));
    }
    return filter.take();
}

// ---- level driver ------------------------------------------------------

// Levels already built in this process, keyed by (strategy, n, e). Entries
// are immutable once inserted.
struct LevelCache {
    std::mutex mutex;
    std::map<std::tuple<int, int, int>, std::vector<Graph>> levels;
};

LevelCache& level_cache() {
    static LevelCache cache;
    return cache;
}

std::vector<Graph> build_level(Strategy strategy, int n, int e, int threads);

std::vector<Graph> cached_level(Strategy strategy, int n, int e, int threads) {
    const auto key = std::make_tuple(static_cast<int>(strategy), n, e);
    {
        std::lock_guard lock(level_cache().mutex);
        auto it = level_cache().levels.find(key);
        if (it != level_cache().levels.end()) return it->second;
    }
    std::vector<Graph> level = build_level(strategy, n, e, threads);
    std::lock_guard lock(level_cache().mutex);
    return level_cache().levels.emplace(key, std::move(level)).first->second;
}

std::vector<Graph> build_level(Strategy strategy, int n, int e, int threads) {
    const bool augment = strategy == Strategy::CanonicalAugmentation;
    if (e < n - 1 || e > n * (n - 1) / 2) return {};
    if (e == n - 1) {
        if (n == 1) return {Graph(1)};
        const std::vector<Graph> smaller = cached_level(strategy, n - 1, n - 2, threads);
        return augment ? augment_trees(smaller, threads) : extend_trees_filtered(smaller);
    }
    const std::vector<Graph> parents = cached_level(strategy, n, e - 1, threads);
    return augment ? augment_edges(parents, threads) : extend_edges_filtered(parents);
}

std::vector<std::string> canonical_strings(const std::vector<Graph>& graphs, Strategy strategy, int threads) {
    std::vector<std::string> out(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) {
        // Augmentation already yields canonical images.
        out[i] = strategy == Strategy::CanonicalAugmentation ? graph6_encode(graphs[i])
                                                             : canonical_label(graphs[i]).graph6;
    });
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw std::logic_error("enumeration produced duplicate isomorphism classes");
    }
    return out;
}

}  // namespace

GraphClassCensus enumerate_connected(int n, int e, const EnumerationOptions& options) {
    if (!within_envelope(n, e)) {
        throw UnsupportedScaleError("(" + std::to_string(n) + "," + std::to_string(e) +
                                    ") lies outside the supported envelope 1 <= n <= 10, 0 <= e <= n+3");
    }
    GraphClassCensus census;
    census.n = n;
    census.e = e;
    census.generator = std::string(kGeneratorVersion) + " " + to_string(options.strategy);
    census.graphs = canonical_strings(cached_level(options.strategy, n, e, options.threads), options.strategy,
                                      options.threads);
    census.generated_at = utc_now();
    return census;
}

std::vector<std::string> enumerate_trees(int n, const EnumerationOptions& options) {
    if (n < 1 || n > 10) throw UnsupportedScaleError("tree enumeration is limited to 1 <= n <= 10");
    return canonical_strings(cached_level(options.strategy, n, n - 1, options.threads), options.strategy,
                             options.threads);
}

}  // namespace genergy
