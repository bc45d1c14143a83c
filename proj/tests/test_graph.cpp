#include <doctest.h>

#include <random>

#include "genergy/canonical.hpp"
#include "genergy/classification.hpp"
#include "genergy/enumeration.hpp"
#include "genergy/errors.hpp"
#include "genergy/family.hpp"
#include "genergy/graph.hpp"
#include "genergy/graph6.hpp"
#include "genergy/spectral.hpp"
#include "random_graphs.hpp"

using namespace genergy;

namespace {

void check_well_formed(const Graph& g) {
    int degree_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
        CHECK_FALSE(g.has_edge(v, v));
        degree_sum += g.degree(v);
        for (int w = 0; w < g.order(); ++w) CHECK(g.has_edge(v, w) == g.has_edge(w, v));
    }
    CHECK(degree_sum == 2 * g.size());
}

int brute_triangles(const Graph& g) {
    int count = 0;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++count;
    return count;
}

}  // namespace

TEST_CASE("graph basics") {
    const Graph k4 = make_complete(4);
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
    CHECK(k4.triangle_count() == 4);
    CHECK(k4.is_connected());

    const Graph minus = k4.without_edge(0, 1);
    CHECK(minus.size() == 5);
    CHECK(k4.size() == 6);
    CHECK_THROWS_AS(minus.without_edge(0, 1), NotAnEdgeError);
    CHECK(minus.with_edge(0, 1) == k4);

    CHECK_THROWS_AS(Graph(33), CapacityError);
    const std::vector<Edge> loop{{2, 2}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
}

TEST_CASE("S graphs") {
    const Graph claw = make_s_graph(4, 3);
    CHECK(claw.size() == 3);
    CHECK(claw.degree(0) == 3);

    for (int n = 3; n <= 12; ++n) {
        for (int e = n - 1; e <= 2 * n - 3; ++e) {
            const Graph g = make_s_graph(n, e);
            check_well_formed(g);
            CHECK(g.order() == n);
            CHECK(g.size() == e);
            CHECK(g.is_connected());
            CHECK(brute_triangles(g) == e - n + 1);
        }
    }
    CHECK_THROWS_AS(make_s_graph(2, 1), InvalidFamilyError);
    CHECK_THROWS_AS(make_s_graph(5, 3), InvalidFamilyError);
    CHECK_THROWS_AS(make_s_graph(5, 8), InvalidFamilyError);
}

TEST_CASE("B graphs") {
    for (int n = 3; n <= 12; ++n) {
        for (int e = n - 1; e <= 2 * (n - 2); ++e) {
            const Graph g = make_b_graph(n, e);
            check_well_formed(g);
            CHECK(g.size() == e);
            CHECK(g.is_connected());
            CHECK(is_bipartite(g).bipartite);
        }
    }
    const Graph double_star = make_b_graph(7, 6);
    CHECK(double_star.degree(1) == 1);
    CHECK_THROWS_AS(make_b_graph(6, 9), InvalidFamilyError);
}

TEST_CASE("named families") {
    CHECK(make_cycle(5).size() == 5);
    const Graph w5 = make_wheel(5);
    CHECK(w5.order() == 5);
    CHECK(w5.size() == 8);
    CHECK(w5.degree(0) == 4);
    const Graph k33 = make_complete_bipartite(3, 3);
    CHECK(k33.order() == 6);
    CHECK(k33.size() == 9);
    CHECK(make_star(6).size() == 5);
    CHECK_THROWS_AS(make_cycle(2), InvalidFamilyError);
    CHECK_THROWS_AS(make_wheel(3), InvalidFamilyError);

    const FamilyLayout big = family_layout(FamilySpec::s_graph(40, 43));
    CHECK(big.n == 40);
    CHECK(big.edges.size() == 43);
    CHECK_THROWS_AS(make_s_graph(40, 43), CapacityError);
}

TEST_CASE("family language") {
    CHECK(parse_family("K4") == FamilySpec::complete(4));
    CHECK(parse_family("S 7 7") == FamilySpec::s_graph(7, 7));
    CHECK(parse_family("  Kb 3 3 ") == FamilySpec::complete_bipartite(3, 3));
    CHECK(parse_family("Star 5") == FamilySpec::star(5));
    const FamilySpec u = parse_family("S 5 5 + C 3");
    CHECK(u == FamilySpec::disjoint_union({FamilySpec::s_graph(5, 5), FamilySpec::cycle(3)}));
    CHECK(to_string(u) == "S 5 5 + C 3");
    CHECK(parse_family(to_string(u)) == u);

    CHECK_THROWS_AS(parse_family(""), ParseError);
    CHECK_THROWS_AS(parse_family("Q 3"), ParseError);
    CHECK_THROWS_AS(parse_family("S 5"), ParseError);
    try {
        parse_family("S 5 5 + X 2");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.offset() == 8);
    }
}

TEST_CASE("disjoint union and edge deletion") {
    const Graph two = disjoint_union(make_cycle(3), make_cycle(3));
    CHECK(two.order() == 6);
    CHECK(two.size() == 6);
    CHECK(two.component_count() == 2);
    CHECK(components(two).size() == 2);

    const Graph s8 = make_named(parse_family("S 5 5 + C 3"));
    CHECK(s8 == disjoint_union(make_s_graph(5, 5), make_cycle(3)));

    const Graph k4 = make_complete(4);
    const std::vector<Edge> one{{0, 1}};
    CHECK(delete_edges(k4, one).size() == 5);
    CHECK(delete_edges(k4, {}) == k4);
    const std::vector<Edge> opposite{{0, 1}, {2, 3}};
    const Graph matching = delete_edges(make_cycle(4), opposite);
    CHECK(matching.size() == 2);
    CHECK(energy(matching) == doctest::Approx(4.0).epsilon(1e-12));
    const std::vector<Edge> missing{{0, 2}};
    CHECK_THROWS_AS(delete_edges(make_cycle(4), missing), NotAnEdgeError);

    CHECK_THROWS_AS(disjoint_union(make_complete(20), make_complete(13)), CapacityError);

    // Associativity up to isomorphism.
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const Graph a = testing_support::random_graph(rng, 3, 0.5);
        const Graph b = testing_support::random_graph(rng, 4, 0.5);
        const Graph c = testing_support::random_graph(rng, 2, 0.5);
        CHECK(canonical_label(disjoint_union(disjoint_union(a, b), c)) ==
              canonical_label(disjoint_union(a, disjoint_union(b, c))));
    }
}

TEST_CASE("graph6") {
    CHECK(graph6_encode(make_complete(4)) == "C~");
    CHECK(graph6_decode("C~") == make_complete(4));
    CHECK(graph6_encode(Graph(1)) == "@");

    CHECK_THROWS_AS(graph6_decode(""), ParseError);
    CHECK_THROWS_AS(graph6_decode("C"), ParseError);
    CHECK_THROWS_AS(graph6_decode("C~~"), ParseError);
    CHECK_THROWS_AS(graph6_decode("C~ "), ParseError);
    CHECK_THROWS_AS(graph6_decode("B@"), ParseError);  // padding bit set

    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = testing_support::random_graph(rng, n, 0.4);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    for (const std::string& s : enumerate_connected(7, 10).graphs) CHECK(graph6_encode(graph6_decode(s)) == s);
}
