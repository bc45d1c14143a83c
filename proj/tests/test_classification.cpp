#include <doctest.h>

#include <random>

#include "genergy/classification.hpp"
#include "genergy/enumeration.hpp"
#include "genergy/errors.hpp"
#include "genergy/family.hpp"
#include "random_graphs.hpp"

using namespace genergy;

namespace {

Graph triangles_joined_by_edge() {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}};
    return Graph::from_edges(6, edges);
}

Graph triangles_joined_by_path() {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}};
    return Graph::from_edges(7, edges);
}

}  // namespace

TEST_CASE("bipartite") {
    CHECK(is_bipartite(make_b_graph(8, 10)).bipartite);
    CHECK(is_bipartite(make_complete_bipartite(3, 3)).bipartite);
    const BipartiteResult c3 = is_bipartite(make_cycle(3));
    CHECK_FALSE(c3.bipartite);
    CHECK(c3.odd_cycle.size() == 3);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const Graph g = testing_support::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.3);
        const BipartiteResult r = is_bipartite(g);
        if (r.bipartite) {
            for (const Edge& e : g.edges()) CHECK(r.coloring[e.u] != r.coloring[e.v]);
        } else {
            const auto& cyc = r.odd_cycle;
            CHECK(cyc.size() % 2 == 1);
            for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
        }
    }
}

TEST_CASE("odd cycles") {
    CHECK(odd_cycles(make_complete(4)).size() == 4);
    CHECK(odd_cycles(make_complete(5)).size() == 10 + 12);
    CHECK(odd_cycles(make_cycle(6)).empty());
    CHECK_THROWS_AS(odd_cycles(make_complete(13)), UnsupportedScaleError);
}

TEST_CASE("classify") {
    CHECK(classify(make_b_graph(7, 9)).id == ClassId::Class1);
    CHECK(classify(make_complete_bipartite(3, 3)).id == ClassId::Class1);

    const ClassLabel path = classify(triangles_joined_by_path());
    REQUIRE(path.id == ClassId::Class2);
    REQUIRE(path.witness.has_value());
    CHECK(validate_witness(path.witness->first, path.witness->second));

    for (int n = 6; n <= 10; ++n) CHECK(classify(make_s_graph(n, n + 1)).id == ClassId::Class1);

    // Triangle and pentagon: 3 + 5 = 8 is not 2 mod 4.
    const Graph tp = disjoint_union(make_cycle(3), make_cycle(5));
    CHECK(classify(tp).id == ClassId::Class1);
}

TEST_CASE("witnesses validate across censuses") {
    for (int n = 4; n <= 8; ++n) {
        for (int e = n; e <= n + 3; ++e) {
            if (!within_envelope(n, e)) continue;
            for (const Graph& g : enumerate_connected(n, e).decode()) {
                const ClassLabel label = classify(g);
                if (is_bipartite(g).bipartite) CHECK(label.id == ClassId::Class1);
                if (label.id == ClassId::Class2) {
                    REQUIRE(label.witness.has_value());
                    CHECK(validate_witness(label.witness->first, label.witness->second));
                }
            }
        }
    }
}

TEST_CASE("vertex and edge disjoint readings agree on the censuses") {
    // Two odd cycles sharing a vertex but no edge exist from n = 5, so
    // record rather than assume agreement.
    int differing = 0;
    int checked = 0;
    for (int n = 4; n <= 8; ++n) {
        for (int e = n + 1; e <= n + 3; ++e) {
            for (const Graph& g : enumerate_connected(n, e).decode()) {
                ++checked;
                if (classify(g, Disjointness::Vertex).id != classify(g, Disjointness::Edge).id) ++differing;
            }
        }
    }
    MESSAGE("graphs whose label depends on the reading of 'disjoint': ", differing, " of ", checked);
    CHECK(checked > 0);
}

TEST_CASE("class split is stable across runs") {
    for (int n = 4; n <= 8; ++n) {
        int first = 0;
        int second = 0;
        for (int threads : {1, 3}) {
            int class2 = 0;
            for (const Graph& g : enumerate_connected(n, n + 1, {Strategy::CanonicalAugmentation, threads}).decode()) {
                if (classify(g).id == ClassId::Class2) ++class2;
            }
            (threads == 1 ? first : second) = class2;
        }
        CHECK(first == second);
    }
}

TEST_CASE("bridges") {
    const Graph tree = make_s_graph(6, 5);
    CHECK(bridges(tree).size() == 5);
    CHECK(bridges(make_cycle(5)).empty());
    const std::vector<Edge> joined = bridges(triangles_joined_by_edge());
    REQUIRE(joined.size() == 1);
    CHECK(joined.front() == Edge{2, 3});

    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const Graph g = testing_support::random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.35);
        const std::vector<Edge> found = bridges(g);
        for (const Edge& e : g.edges()) {
            const bool is_bridge = g.without_edge(e.u, e.v).component_count() > g.component_count();
            const bool listed = std::find(found.begin(), found.end(), e) != found.end();
            CHECK(is_bridge == listed);
            const std::vector<Edge> single{e};
            CHECK(is_edge_cut(g, single) == is_bridge);
        }
    }
}

TEST_CASE("edge cuts") {
    const Graph g = make_s_graph(6, 7);
    std::vector<Edge> star;
    for (const Edge& e : g.edges()) {
        if (e.u == 3 || e.v == 3) star.push_back(e);
    }
    CHECK(is_edge_cut(g, star));

    const Graph c4 = make_cycle(4);
    const std::vector<Edge> one{{0, 1}};
    CHECK_FALSE(is_edge_cut(c4, one));
    const std::vector<Edge> adjacent{{0, 1}, {1, 2}};
    const std::vector<Edge> opposite{{0, 1}, {2, 3}};
    CHECK(is_edge_cut(c4, adjacent));
    CHECK(is_edge_cut(c4, opposite));
    const std::vector<Edge> missing{{0, 2}};
    CHECK_THROWS_AS(is_edge_cut(c4, missing), NotAnEdgeError);
}
