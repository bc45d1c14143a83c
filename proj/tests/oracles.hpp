#pragma once

// Slow reference computations sharing no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "genergy/graph.hpp"

namespace oracle {

using Int128 = __int128;
using Matrix = std::vector<std::vector<long long>>;

// Counts frozen after both generation strategies produced identical sets.
inline constexpr std::size_t kCount_8_11 = 814;
inline constexpr std::size_t kCount_9_12 = 4495;

// Unlabeled trees, n = 1..10.
inline constexpr std::size_t kTreeCounts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
// Connected unicyclic graphs, n = 3..8.
inline constexpr std::size_t kUnicyclicCounts[] = {1, 2, 5, 13, 33, 89};

inline Matrix adjacency(const genergy::Graph& g) {
    const int n = g.order();
    Matrix a(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (const genergy::Edge& e : g.edges()) {
        a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    return a;
}

// Fraction-free Bareiss determinant, exact for small 0/1 matrices.
inline Int128 determinant(std::vector<std::vector<Int128>> m) {
    const std::size_t k = m.size();
    if (k == 0) return 1;
    Int128 sign = 1;
    Int128 prev = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (m[p][p] == 0) {
            std::size_t swap = p + 1;
            while (swap < k && m[swap][p] == 0) ++swap;
            if (swap == k) return 0;
            std::swap(m[p], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
            }
        }
        prev = m[p][p];
    }
    return sign * m[k - 1][k - 1];
}

// a_k = (-1)^k * (sum of k x k principal minors of A). n <= 12.
inline std::vector<Int128> charpoly_by_minors(const genergy::Graph& g) {
    const int n = g.order();
    const Matrix a = adjacency(g);
    std::vector<Int128> coeffs(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<std::size_t> idx;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1U) idx.push_back(static_cast<std::size_t>(v));
        }
        std::vector<std::vector<Int128>> sub(idx.size(), std::vector<Int128>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i) {
            for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = a[idx[i]][idx[j]];
        }
        const Int128 minor = determinant(sub);
        coeffs[idx.size()] += (idx.size() % 2 == 0) ? minor : -minor;
    }
    return coeffs;
}

// Cyclic Jacobi rotations on the adjacency matrix.
inline std::vector<double> jacobi_eigenvalues(const genergy::Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    const Matrix a = adjacency(g);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<double>(a[i][j]);
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(m[p][q]) < 1e-300) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m[k][p];
                    const double mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m[p][k];
                    const double mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = m[i][i];
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline double jacobi_energy(const genergy::Graph& g) {
    double sum = 0.0;
    for (double x : jacobi_eigenvalues(g)) sum += std::abs(x);
    return sum;
}

}  // namespace oracle
