#include "genergy/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "genergy/errors.hpp"
#include "genergy/quadrature.hpp"

namespace genergy {

std::string to_string(Int128 value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    unsigned __int128 magnitude =
        negative ? static_cast<unsigned __int128>(-(value + 1)) + 1 : static_cast<unsigned __int128>(value);
    std::string digits;
    while (magnitude != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
        magnitude /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

long double CharPoly::evaluate(long double x) const noexcept {
    long double acc = 0.0L;
    for (Int128 c : coeffs) acc = acc * x + static_cast<long double>(c);
    return acc;
}

namespace {

using U64 = std::uint64_t;
using U128 = unsigned __int128;

constexpr U64 kPrime1 = (U64{1} << 61) - 1;
constexpr U64 kPrime2 = 2305843009213693921ULL;

U64 add_mod(U64 a, U64 b, U64 p) { return (a + b) % p; }
U64 sub_mod(U64 a, U64 b, U64 p) { return (a + p - b) % p; }
U64 mul_mod(U64 a, U64 b, U64 p) { return static_cast<U64>(static_cast<U128>(a) * b % p); }

U64 pow_mod(U64 base, U64 exp, U64 p) {
    U64 result = 1;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

// Berkowitz: grows the characteristic polynomial one leading principal
// block at a time. With A_{r+1} = [[A_r, C], [R, a]],
//   p_{r+1}(x) = (x - a) p_r(x) - R adj(xI - A_r) C,
// and the adjugate term expands through the walk counts R A_r^k C.
std::vector<U64> berkowitz_mod(const Graph& g, U64 p) {
    const int n = g.order();
    std::vector<U64> poly{1};
    for (int r = 0; r < n; ++r) {
        // Walk counts m_k = R A_r^k C, k = 0..r-1, where R is row r
        // restricted to columns < r and C the matching column.
        std::vector<U64> walks(static_cast<std::size_t>(r));
        std::vector<U64> row(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) row[j] = g.has_edge(r, j) ? 1 : 0;
        for (int k = 0; k < r; ++k) {
            U64 m = 0;
            for (int j = 0; j < r; ++j) {
                if (g.has_edge(j, r)) m = add_mod(m, row[j], p);
            }
            walks[k] = m;
            if (k + 1 < r) {
                std::vector<U64> next(static_cast<std::size_t>(r), 0);
                for (int j = 0; j < r; ++j) {
                    if (row[j] == 0) continue;
                    for (int t = 0; t < r; ++t) {
                        if (g.has_edge(j, t)) next[t] = add_mod(next[t], row[j], p);
                    }
                }
                row = std::move(next);
            }
        }
        // Adjacency diagonal is zero, so a = 0 and (x - a) p_r is a shift.
        std::vector<U64> next(static_cast<std::size_t>(r) + 2, 0);
        for (int i = 0; i <= r; ++i) next[i] = poly[i];
        for (int i = 2; i <= r + 1; ++i) {
            U64 s = 0;
            for (int t = 0; t <= i - 2; ++t) s = add_mod(s, mul_mod(poly[t], walks[i - 2 - t], p), p);
            next[i] = sub_mod(next[i], s, p);
        }
        poly = std::move(next);
    }
    return poly;
}

// Largest |a_k| permitted by Hadamard's inequality on the k x k principal
// minors of a 0/1 matrix: C(n,k) k^(k/2).
long double coefficient_bound(int n) {
    long double best = 1.0L;
    long double binom = 1.0L;
    for (int k = 1; k <= n; ++k) {
        binom = binom * static_cast<long double>(n - k + 1) / static_cast<long double>(k);
        best = std::max(best, binom * std::pow(static_cast<long double>(k), 0.5L * k));
    }
    return best;
}

}  // namespace

CharPoly char_poly(const Graph& g) {
    const long double modulus = static_cast<long double>(kPrime1) * static_cast<long double>(kPrime2);
    if (2.0L * coefficient_bound(g.order()) >= modulus) {
        throw OverflowError("characteristic polynomial coefficients may exceed the CRT range");
    }
    const std::vector<U64> r1 = berkowitz_mod(g, kPrime1);
    const std::vector<U64> r2 = berkowitz_mod(g, kPrime2);
    const U64 inv = pow_mod(kPrime1 % kPrime2, kPrime2 - 2, kPrime2);
    const U128 product = static_cast<U128>(kPrime1) * kPrime2;

    CharPoly out;
    out.coeffs.reserve(r1.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        const U64 t = mul_mod(sub_mod(r2[i], r1[i] % kPrime2, kPrime2), inv, kPrime2);
        const U128 x = static_cast<U128>(r1[i]) + static_cast<U128>(kPrime1) * t;
        out.coeffs.push_back(x > product / 2 ? -static_cast<Int128>(product - x) : static_cast<Int128>(x));
    }
    return out;
}

CharPoly multiply(const CharPoly& p, const CharPoly& q) {
    CharPoly out;
    out.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
            Int128 term = 0;
            Int128 sum = 0;
            if (__builtin_mul_overflow(p.coeffs[i], q.coeffs[j], &term) ||
                __builtin_add_overflow(out.coeffs[i + j], term, &sum)) {
                throw OverflowError("polynomial product overflows 128 bits");
            }
            out.coeffs[i + j] = sum;
        }
    }
    return out;
}

BCoeffs b_coeffs(const CharPoly& p) {
    BCoeffs out;
    out.values.reserve(p.coeffs.size());
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        const bool flip = (k / 2) % 2 == 1;
        out.values.push_back(flip ? -p.coeffs[k] : p.coeffs[k]);
    }
    return out;
}

Spectrum eigenvalues(const Graph& g) {
    const int n = g.order();
    Spectrum out;
    if (n == 0) return out;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& ed : g.edges()) {
        a(ed.u, ed.v) = 1.0;
        a(ed.v, ed.u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver failed to converge");
    }
    const Eigen::VectorXd& values = solver.eigenvalues();
    out.eigenvalues.assign(values.data(), values.data() + n);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    const CharPoly phi = char_poly(g);
    for (double lambda : out.eigenvalues) {
        out.energy += std::abs(lambda);
        out.residual = std::max(out.residual, static_cast<double>(std::abs(phi.evaluate(lambda))));
    }
    return out;
}

double energy(const Graph& g) { return eigenvalues(g).energy; }

double energy(int n, std::span<const Edge> edges) {
    if (n == 0) return 0.0;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& ed : edges) {
        a(ed.u, ed.v) = 1.0;
        a(ed.v, ed.u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver failed to converge");
    }
    return solver.eigenvalues().cwiseAbs().sum();
}

double energy(const FamilyLayout& layout) { return energy(layout.n, layout.edges); }

CoulsonEstimate energy_coulson(const CharPoly& p, const QuadratureSettings& settings) {
    // Zero roots leave the integrand unchanged, so drop trailing zero
    // coefficients; the reduced degree d has a_d != 0.
    int d = p.degree();
    while (d > 0 && p.coeffs[d] == 0) --d;
    if (d <= 0) return {};

    const BCoeffs b = b_coeffs(p);
    auto bval = [&](int k) -> long double { return k <= d ? static_cast<long double>(b.values[k]) : 0.0L; };

    // Bracket B(x) = P(x)^2 + Q(x)^2 = sum_m beta_m x^{2m}; for a real-rooted
    // polynomial it equals prod (1 + lambda^2 x^2), so every beta_m >= 0.
    std::vector<long double> beta(static_cast<std::size_t>(d) + 1, 0.0L);
    for (int i = 0; 2 * i <= d; ++i) {
        for (int j = 0; 2 * j <= d; ++j) beta[i + j] += bval(2 * i) * bval(2 * j);
    }
    for (int i = 0; 2 * i + 1 <= d; ++i) {
        for (int j = 0; 2 * j + 1 <= d; ++j) beta[i + j + 1] += bval(2 * i + 1) * bval(2 * j + 1);
    }

    // [0, 1]: x^-2 ln B(x) = h(x) log1p(y) / y with y = B - 1 = x^2 h(x).
    auto near = [&](double xd) -> double {
        const long double x2 = static_cast<long double>(xd) * xd;
        long double h = 0.0L;
        for (int m = d; m >= 1; --m) h = h * x2 + beta[m];
        const long double y = x2 * h;
        if (std::abs(y) < 1e-300L) return static_cast<double>(h);
        return static_cast<double>(h * std::log1p(y) / y);
    };
    // [1, inf) via x = 1/u: int_0^1 ln B(1/u) du = 2d + int_0^1 ln R(u) du,
    // R(u) = u^{2d} B(1/u) = sum_m beta_m u^{2(d-m)}, R(0) = a_d^2 > 0.
    auto far = [&](double ud) -> double {
        const long double u2 = static_cast<long double>(ud) * ud;
        long double r = 0.0L;
        for (int m = 0; m <= d; ++m) r = r * u2 + beta[m];
        return static_cast<double>(std::log(r));
    };

    const double tol = settings.abs_tolerance * std::numbers::pi;
    const long budget = settings.max_evaluations;
    const quadrature::Result lower = quadrature::integrate(near, 0.0, 1.0, 0.5 * tol, budget / 2);
    const quadrature::Result upper = quadrature::integrate(far, 0.0, 1.0, 0.5 * tol, budget / 2);

    CoulsonEstimate out;
    out.energy = (lower.value + upper.value + 2.0 * d) / std::numbers::pi;
    out.error_bound = (lower.error + upper.error) / std::numbers::pi;
    out.evaluations = lower.evaluations + upper.evaluations;
    if (out.error_bound > settings.abs_tolerance) {
        throw AccuracyError("Coulson quadrature missed tolerance " + std::to_string(settings.abs_tolerance),
                            out.energy, out.error_bound);
    }
    return out;
}

CharPoly closed_form_charpoly(const FamilySpec& family) {
    if (family.kind != FamilySpec::Kind::SGraph || family.params.size() != 2) {
        throw InvalidFamilyError("closed forms exist only for S(n,n), S(n,n+2), S(n,n+3)");
    }
    const int n = family.params[0];
    const int e = family.params[1];
    if (n < 6) throw InvalidFamilyError("closed forms require n >= 6");
    Int128 a2 = 0, a3 = 0, a4 = 0;
    if (e == n) {
        a2 = -n, a3 = -2, a4 = n - 3;
    } else if (e == n + 2) {
        a2 = -(n + 2), a3 = -6, a4 = 3 * n - 15;
    } else if (e == n + 3) {
        a2 = -(n + 3), a3 = -8, a4 = 4 * n - 24;
    } else {
        throw InvalidFamilyError("no closed form for S(" + std::to_string(n) + "," + std::to_string(e) + ")");
    }
    CharPoly out;
    out.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    out.coeffs[0] = 1;
    out.coeffs[2] = a2;
    out.coeffs[3] = a3;
    out.coeffs[4] = a4;
    return out;
}

std::string format_poly(const CharPoly& p) {
    std::string out;
    const int n = p.degree();
    for (int i = 0; i <= n; ++i) {
        const Int128 c = p.coeffs[i];
        if (c == 0) continue;
        const int power = n - i;
        const Int128 mag = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || power == 0) out += to_string(mag);
        if (power >= 1) out += "x";
        if (power >= 2) out += "^" + std::to_string(power);
    }
    return out.empty() ? "0" : out;
}

std::uint64_t digest(const CharPoly& p) {
    std::uint64_t h = 1469598103934665603ULL;
    for (Int128 c : p.coeffs) {
        auto u = static_cast<unsigned __int128>(c);
        for (int byte = 0; byte < 16; ++byte) {
            h ^= static_cast<std::uint64_t>(u & 0xFF);
            h *= 1099511628211ULL;
            u >>= 8;
        }
    }
    return h;
}

}  // namespace genergy
