#pragma once
// Bracketed real root refinement (Brent), sign-change scanning with
// invalid-region skipping, and a damped complex Newton iteration with a
// numerically differenced Jacobian.

#include <cmath>
#include <functional>
#include <vector>

#include "core.hpp"

namespace scarf {

/// Brent's method on [a, b]; requires a sign change. Converges to
/// |interval| < tol + machine slack.
template <class F>
double brent(F&& f, double a, double b, double tol = 1e-13, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) throw NoBracket("brent: no sign change on [a, b]");
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa; d = b - a; e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

/// Result of scanning a residual over an interval: every bracketing subinterval
/// plus a flag recording whether invalid (NaN) regions were skipped.
struct ScanResult {
    std::vector<std::pair<double, double>> brackets;
    bool skipped_invalid = false;
};

template <class F>
ScanResult scan_sign_changes(F&& f, double lo, double hi, int points) {
    if (!(hi > lo) || points < 2) throw DomainError("scan_sign_changes: bad interval");
    ScanResult out;
    const double h = (hi - lo) / double(points - 1);
    double xprev = lo, fprev = f(lo);
    bool valid_prev = std::isfinite(fprev);
    if (!valid_prev) out.skipped_invalid = true;
    for (int i = 1; i < points; ++i) {
        const double x = lo + double(i) * h;
        const double fx = f(x);
        const bool valid = std::isfinite(fx);
        if (!valid) out.skipped_invalid = true;
        if (valid && valid_prev && (fprev > 0.0) != (fx > 0.0))
            out.brackets.emplace_back(xprev, x);
        xprev = x;
        fprev = fx;
        valid_prev = valid;
    }
    return out;
}

/// Damped Newton iteration for complex residuals with a central-difference
/// derivative. Never throws on stagnation: returns the best iterate with
/// converged = false so the caller can report it.
struct NewtonResult {
    complex root{};
    complex residual{};
    int iterations = 0;
    bool converged = false;
};

template <class F>
NewtonResult newton_complex(F&& f, complex seed, double tol = 1e-10, int max_iter = 200) {
    NewtonResult best;
    complex z = seed;
    complex fz = f(z);
    best.root = z;
    best.residual = fz;
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(fz) < tol) {
            best.root = z;
            best.residual = fz;
            best.iterations = it;
            best.converged = true;
            return best;
        }
        const double h = 1e-7 * (1.0 + std::abs(z));
        const complex df = (f(z + h) - f(z - h)) / (2.0 * h);
        if (!(std::abs(df) > 0.0)) break;
        const complex step = fz / df;
        double damp = 1.0;
        complex znext = z - step;
        complex fnext = f(znext);
        while (!(std::abs(fnext) < std::abs(fz)) && damp > 1.0 / 1024.0) {
            damp *= 0.5;
            znext = z - damp * step;
            fnext = f(znext);
        }
        if (!(std::abs(fnext) < std::abs(fz))) break;  // stagnated
        z = znext;
        fz = fnext;
        if (std::abs(fz) < std::abs(best.residual)) {
            best.root = z;
            best.residual = fz;
        }
        best.iterations = it + 1;
    }
    best.converged = std::abs(best.residual) < tol;
    return best;
}

}  // namespace scarf
