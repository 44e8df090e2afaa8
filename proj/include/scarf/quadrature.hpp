#pragma once
// Adaptive Gauss-Legendre quadrature. Nodes are generated once by Newton
// iteration on the Legendre polynomial, so no coefficient tables are carried.

#include <array>
#include <cmath>
#include <functional>

#include "core.hpp"

namespace scarf {
namespace detail {

struct GLRule {
    static constexpr int N = 15;
    std::array<double, N> x{};  // nodes on (-1, 1)
    std::array<double, N> w{};
};

inline const GLRule& gl15() {
    static const GLRule rule = [] {
        GLRule r;
        constexpr int n = GLRule::N;
        for (int i = 0; i < n; ++i) {
            // Chebyshev-like seed, refined by Newton on P_n.
            double x = std::cos(pi * (double(i) + 0.75) / (double(n) + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
                    p0 = p1;
                    p1 = p2;
                }
                dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            r.x[i] = x;
            r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

template <class F>
double gl15_panel(F&& f, double a, double b) {
    const GLRule& r = gl15();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < GLRule::N; ++i) acc += r.w[i] * f(mid + half * r.x[i]);
    return acc * half;
}

template <class F>
double adapt(F&& f, double a, double b, double whole, double tol, int depth, long& budget) {
    if (--budget <= 0) throw QuadratureFailure("integrate_adaptive: panel budget exhausted");
    const double mid = 0.5 * (a + b);
    const double left = gl15_panel(f, a, mid);
    const double right = gl15_panel(f, mid, b);
    const double err = std::abs(left + right - whole);
    if (err <= tol || depth >= 48) return left + right;
    return adapt(f, a, mid, left, 0.5 * tol, depth + 1, budget) +
           adapt(f, mid, b, right, 0.5 * tol, depth + 1, budget);
}

}  // namespace detail

/// Adaptive bisection with 15-point Gauss-Legendre panels to an absolute
/// tolerance. Throws QuadratureFailure if the panel budget is exhausted
/// before the local error estimates fall below tol.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol, long max_panels = 200000) {
    if (!(b > a)) throw DomainError("integrate_adaptive: bad interval");
    long budget = max_panels;
    const double whole = detail::gl15_panel(f, a, b);
    return detail::adapt(f, a, b, whole, abs_tol, 0, budget);
}

/// Two-pass relative control: a single-panel probe sizes the integrand (it
/// may be tiny in absolute terms), a crude pass refines that scale, and the
/// final pass tightens to rel_tol of the refined estimate.
template <class F>
double integrate_relative(F&& f, double a, double b, double rel_tol = 1e-12,
                          long max_panels = 200000) {
    const double probe = std::abs(detail::gl15_panel(f, a, b));
    double scale = std::max(probe, 1e-300);
    const double crude = integrate_adaptive(f, a, b, 1e-6 * scale, max_panels);
    scale = std::max(std::abs(crude), 1e-300);
    return integrate_adaptive(f, a, b, rel_tol * scale, max_panels);
}

}  // namespace scarf
