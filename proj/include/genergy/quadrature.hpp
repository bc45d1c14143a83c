#pragma once

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace genergy::quadrature {

struct Result {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for Kronrod nodes 1, 3, 5 and the center.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Interval& other) const { return error < other.error; }
};

template <typename F>
Interval gauss_kronrod_15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * sum;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b]: always bisects the
/// interval with the largest error estimate until the summed estimate drops
/// to abs_tolerance or the evaluation budget is spent. The error bound is the
/// sum of per-interval |K15 - G7| differences.
template <typename F>
Result integrate(F f, double a, double b, double abs_tolerance, long max_evaluations) {
    std::priority_queue<detail::Interval> heap;
    Result result;
    detail::Interval first = detail::gauss_kronrod_15(f, a, b);
    result.evaluations = 15;
    double total = first.value;
    double error = first.error;
    heap.push(first);
    while (error > abs_tolerance && result.evaluations + 30 <= max_evaluations) {
        detail::Interval worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // no representable split left
        heap.pop();
        detail::Interval left = detail::gauss_kronrod_15(f, worst.a, mid);
        detail::Interval right = detail::gauss_kronrod_15(f, mid, worst.b);
        result.evaluations += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    total = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    result.value = total;
    result.error = error;
    result.converged = error <= abs_tolerance;
    return result;
}

}  // namespace genergy::quadrature
