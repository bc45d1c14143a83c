#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "genergy/family.hpp"
#include "genergy/graph.hpp"

namespace genergy {

using Int128 = __int128;

std::string to_string(Int128 value);

/// Exact coefficients a_0..a_n of phi(G, x) = det(xI - A) = sum a_i x^(n-i).
struct CharPoly {
    std::vector<Int128> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    Int128 operator[](std::size_t i) const { return coeffs.at(i); }

    /// Value at x, evaluated in long double.
    long double evaluate(long double x) const noexcept;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Sign-adjusted coefficients: b_{2i} = (-1)^i a_{2i}, b_{2i+1} = (-1)^i a_{2i+1}.
struct BCoeffs {
    std::vector<Int128> values;

    Int128 operator[](std::size_t i) const { return values.at(i); }
};

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double energy = 0.0;
    double residual = 0.0;  // max |phi(lambda_i)|
};

struct QuadratureSettings {
    double abs_tolerance = 1e-7;
    long max_evaluations = 1'000'000;
};

struct CoulsonEstimate {
    double energy = 0.0;
    double error_bound = 0.0;
    long evaluations = 0;
};

/// Exact characteristic polynomial. Uses the division-free Berkowitz
/// recurrence modulo two 62-bit primes and reconstructs by CRT; the Hadamard
/// bound on principal minors keeps every coefficient inside the CRT range for
/// n <= 32 (asserted, OverflowError otherwise).
CharPoly char_poly(const Graph& g);

/// Exact product, as for the polynomial of a disjoint union.
CharPoly multiply(const CharPoly& p, const CharPoly& q);

BCoeffs b_coeffs(const CharPoly& p);

/// Adjacency spectrum from a symmetric eigensolver, with energy and the
/// residual of each eigenvalue against the exact polynomial.
Spectrum eigenvalues(const Graph& g);

/// Energy via the eigensolver; the authoritative value.
double energy(const Graph& g);

/// Eigensolver energy of an edge list on any number of vertices. Serves
/// family comparisons beyond the Graph size cap.
double energy(int n, std::span<const Edge> edges);
double energy(const FamilyLayout& layout);

/// Energy by the Coulson integral
///   E = (1/2pi) int_R x^-2 ln[(sum (-1)^i a_{2i} x^{2i})^2 + (sum (-1)^i a_{2i+1} x^{2i+1})^2] dx,
/// folded onto [0, inf), split at 1, with the tail mapped through x = 1/u.
/// Throws AccuracyError when the tolerance is not met within the budget.
CoulsonEstimate energy_coulson(const CharPoly& p, const QuadratureSettings& settings = {});

/// Hard-coded closed forms for S(n,n), S(n,n+2) and S(n,n+3), n >= 6:
///   x^n - n x^{n-2} - 2 x^{n-3} + (n-3) x^{n-4}
///   x^n - (n+2) x^{n-2} - 6 x^{n-3} + (3n-15) x^{n-4}
///   x^n - (n+3) x^{n-2} - 8 x^{n-3} + (4n-24) x^{n-4}
/// Throws InvalidFamilyError for any other family.
CharPoly closed_form_charpoly(const FamilySpec& family);

/// Human-readable polynomial, e.g. "x^4 - 6x^2 - 8x - 3".
std::string format_poly(const CharPoly& p);

/// Stable 64-bit FNV-1a digest of the coefficient sequence.
std::uint64_t digest(const CharPoly& p);

}  // namespace genergy
