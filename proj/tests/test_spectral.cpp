#include <doctest.h>

#include <cmath>
#include <random>

#include "genergy/classification.hpp"
#include "genergy/enumeration.hpp"
#include "genergy/errors.hpp"
#include "genergy/family.hpp"
#include "genergy/quadrature.hpp"
#include "genergy/spectral.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace genergy;

namespace {

CharPoly poly(std::initializer_list<long long> coeffs) {
    CharPoly p;
    for (long long c : coeffs) p.coeffs.push_back(c);
    return p;
}

// x^n + c2 x^(n-2) + c3 x^(n-3) + c4 x^(n-4)
CharPoly sparse_poly(int n, long long c2, long long c3, long long c4) {
    CharPoly p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    p.coeffs[0] = 1;
    p.coeffs[2] = c2;
    p.coeffs[3] = c3;
    p.coeffs[4] = c4;
    return p;
}

}  // namespace

TEST_CASE("char poly against principal minors") {
    CHECK(char_poly(make_complete(4)) == poly({1, 0, -6, -8, -3}));
    CHECK(char_poly(Graph(5)) == poly({1, 0, 0, 0, 0, 0}));

    std::mt19937_64 rng(2012);
    for (int t = 0; t < 150; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = testing_support::random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
        const CharPoly p = char_poly(g);
        CHECK(p.coeffs == oracle::charpoly_by_minors(g));
        CHECK(p[0] == 1);
        if (n >= 2) {
            CHECK(p[1] == 0);
            CHECK(p[2] == -g.size());
        }
        if (n >= 3) CHECK(p[3] == -2 * g.triangle_count());
    }
}

TEST_CASE("char poly at full size") {
    const Graph k32 = make_complete(32);
    const CharPoly p = char_poly(k32);
    // (x - 31)(x + 1)^31 evaluated at x = 1 is 30 * -2^31.
    CHECK(p.degree() == 32);
    Int128 value = 0;
    for (Int128 c : p.coeffs) value += c;
    CHECK(value == Int128{-30} * (Int128{1} << 31));
}

TEST_CASE("closed forms from the text") {
    CHECK(char_poly(make_s_graph(8, 11)) == sparse_poly(8, -11, -8, 8));
    CHECK(char_poly(make_s_graph(6, 6)) == sparse_poly(6, -6, -2, 3));
    CHECK(closed_form_charpoly(FamilySpec::s_graph(10, 13)) == sparse_poly(10, -13, -8, 16));
    CHECK(closed_form_charpoly(FamilySpec::s_graph(6, 6)) == sparse_poly(6, -6, -2, 3));
    CHECK(closed_form_charpoly(FamilySpec::s_graph(6, 8)) == sparse_poly(6, -8, -6, 3));
    for (int n = 6; n <= 12; ++n) {
        for (int extra : {0, 2, 3}) {
            const FamilySpec spec = FamilySpec::s_graph(n, n + extra);
            CHECK(char_poly(make_named(spec)) == closed_form_charpoly(spec));
        }
    }
    CHECK_THROWS_AS(closed_form_charpoly(FamilySpec::s_graph(6, 7)), InvalidFamilyError);
    CHECK_THROWS_AS(closed_form_charpoly(FamilySpec::b_graph(6, 6)), InvalidFamilyError);
}

TEST_CASE("b coefficients") {
    const BCoeffs k4 = b_coeffs(char_poly(make_complete(4)));
    CHECK(k4[0] == 1);
    CHECK(k4[3] == 8);
    CHECK(k4.values.size() == 5);
    for (int n = 7; n <= 12; ++n) CHECK(b_coeffs(char_poly(make_s_graph(n, n + 3)))[4] == 4 * n - 24);
    CHECK(b_coeffs(char_poly(make_s_graph(8, 11)))[4] == 8);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const Graph g = testing_support::random_graph(rng, 7, 0.5);
        CHECK(b_coeffs(char_poly(g))[2] == g.size());
    }
}

TEST_CASE("format and digest") {
    CHECK(format_poly(char_poly(make_complete(4))) == "x^4 - 6x^2 - 8x - 3");
    CHECK(format_poly(char_poly(Graph(1))) == "x");
    CHECK(digest(char_poly(make_cycle(6))) == digest(char_poly(make_cycle(6))));
    CHECK(digest(char_poly(make_cycle(6))) != digest(char_poly(make_cycle(5))));
}

TEST_CASE("eigenvalues") {
    const Spectrum c3 = eigenvalues(make_cycle(3));
    REQUIRE(c3.eigenvalues.size() == 3);
    CHECK(c3.eigenvalues[0] == doctest::Approx(2.0));
    CHECK(c3.eigenvalues[1] == doctest::Approx(-1.0));
    CHECK(c3.energy == doctest::Approx(4.0));
    CHECK(energy(make_complete(2)) == doctest::Approx(2.0));
    CHECK(energy(make_complete(4)) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(std::abs(energy(make_s_graph(8, 8)) - 7.07326) <= 1e-5);
    CHECK(std::abs(energy(make_b_graph(7, 9)) - 7.21110) <= 1e-5);
    CHECK(std::abs(energy(make_b_graph(9, 11)) - 8.46834) <= 1e-5);

    const FamilyLayout layout = family_layout(FamilySpec::s_graph(12, 15));
    CHECK(energy(layout) == doctest::Approx(energy(make_s_graph(12, 15))).epsilon(1e-12));

    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = testing_support::random_graph(rng, n, 0.5);
        const Spectrum s = eigenvalues(g);
        double sum = 0.0;
        double squares = 0.0;
        for (double x : s.eigenvalues) {
            sum += x;
            squares += x * x;
        }
        CHECK(std::abs(sum) <= 1e-9 * n);
        CHECK(std::abs(squares - 2 * g.size()) <= 1e-8 * std::max(1, g.size()));
        CHECK(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
        CHECK(std::abs(s.energy - oracle::jacobi_energy(g)) <= 1e-9);
        long double scale = 1;
        for (Int128 c : char_poly(g).coeffs) scale = std::max(scale, std::abs(static_cast<long double>(c)));
        CHECK(s.residual <= 1e-6 * static_cast<double>(scale));
    }
}

TEST_CASE("coulson integral") {
    CHECK(energy_coulson(char_poly(make_complete(4))).energy == doctest::Approx(6.0).epsilon(1e-7));
    CHECK(std::abs(energy_coulson(char_poly(make_s_graph(5, 5))).energy - 5.62721) <= 1e-5);
    CHECK(energy_coulson(char_poly(Graph(6))).energy == 0.0);

    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = testing_support::random_graph(rng, n, 0.6);
        const CoulsonEstimate c = energy_coulson(char_poly(g));
        CHECK(std::abs(c.energy - energy(g)) <= 1e-6);
    }

    QuadratureSettings starved;
    starved.abs_tolerance = 1e-14;
    starved.max_evaluations = 30;
    CHECK_THROWS_AS(energy_coulson(char_poly(make_s_graph(9, 12)), starved), AccuracyError);
}

TEST_CASE("adaptive quadrature") {
    const auto r = quadrature::integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12, 10000);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    const auto s = quadrature::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-9, 100000);
    CHECK(s.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("union multiplicativity") {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 200; ++t) {
        const Graph g = testing_support::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.5);
        const Graph h = testing_support::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.5);
        const Graph u = disjoint_union(g, h);
        CHECK(char_poly(u) == multiply(char_poly(g), char_poly(h)));
        CHECK(energy(u) == doctest::Approx(energy(g) + energy(h)).epsilon(1e-10));
    }
}

TEST_CASE("bipartite spectral symmetry") {
    for (int e = 5; e <= 9; ++e) {
        for (const Graph& g : enumerate_connected(6, e).decode()) {
            if (!is_bipartite(g).bipartite) continue;
            const CharPoly p = char_poly(g);
            for (std::size_t k = 1; k < p.coeffs.size(); k += 2) CHECK(p[k] == 0);
            const Spectrum s = eigenvalues(g);
            const std::size_t n = s.eigenvalues.size();
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(s.eigenvalues[i] + s.eigenvalues[n - 1 - i]) <= 1e-9);
        }
    }
}
