#pragma once
// Jacobi polynomials with complex parameters, complex log-gamma, and the
// Gauss summation of 2F1 at unit argument. Everything here must stay usable
// at the large parameter magnitudes this problem produces (|a| up to ~1e4),
// hence the log-space gamma arithmetic and the product-form Jacobi series
// that never evaluates a gamma function at a possibly-polar argument.

#include <cmath>
#include <cstdlib>

#include "core.hpp"

namespace scarf {

struct JacobiSpec {
    complex a;
    complex b;
    int n = 0;
};

namespace detail {

inline bool is_nonpositive_integer(complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace detail

/// Principal-branch log Gamma via the Lanczos approximation (g = 7, 9 terms)
/// with the reflection formula for Re(z) < 1/2. Relative accuracy ~1e-13 for
/// |z| < 100. Throws PoleError at the poles z = 0, -1, -2, ...
inline complex log_gamma(complex z) {
    static const double lanczos[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

    if (detail::is_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at non-positive integer");

    if (z.real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        const complex s = std::sin(pi * z);
        return std::log(pi) - std::log(s) - log_gamma(1.0 - z);
    }
    const complex zm = z - 1.0;
    complex acc(lanczos[0]);
    for (int i = 1; i < 9; ++i) acc += lanczos[i] / (zm + double(i));
    const complex t = zm + 7.5;
    return 0.5 * std::log(2.0 * pi) + (zm + 0.5) * std::log(t) - t + std::log(acc);
}

/// Finite hypergeometric series for P_n^{(a,b)}(x), written as pure products
/// so that negative real parameters (the bound-state case b = -nu) never route
/// through a gamma evaluation. If abs_sum is non-null it receives the sum of
/// term magnitudes, the natural conditioning scale of the series.
inline complex jacobi_series(const JacobiSpec& spec, complex x, double* abs_sum = nullptr) {
    if (spec.n < 0) throw DomainError("jacobi_series: n must be >= 0");
    const int n = spec.n;
    const complex a = spec.a, b = spec.b;
    const complex hp = 0.5 * (x - 1.0);
    complex sum(0.0);
    double mag = 0.0;
    for (int m = 0; m <= n; ++m) {
        complex term(1.0);
        for (int j = 1; j <= n - m; ++j) term *= (a + double(m + j)) / double(j);
        for (int j = 0; j < m; ++j) term *= (a + b + double(n + 1 + j)) * hp / double(j + 1);
        sum += term;
        mag += std::abs(term);
    }
    if (abs_sum) *abs_sum = mag;
    return sum;
}

/// P_n^{(a,b)}(x) by the three-term recurrence. Falls back to the series when
/// a recurrence denominator degenerates (possible for exotic complex a+b; the
/// parameters produced by the physics never trigger it).
inline complex jacobi(const JacobiSpec& spec, complex x) {
    if (spec.n < 0) throw DomainError("jacobi: n must be >= 0");
    const int n = spec.n;
    const complex a = spec.a, b = spec.b;
    if (n == 0) return complex(1.0);
    complex pm1(1.0);
    complex p = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for (int m = 2; m <= n; ++m) {
        const complex ab = a + b;
        const complex c1 = 2.0 * double(m) * (double(m) + ab) * (2.0 * double(m) + ab - 2.0);
        if (std::abs(c1) < 1e-9 * double(m) * double(m))
            return jacobi_series(spec, x);
        const complex c2 = (2.0 * double(m) + ab - 1.0) *
                           ((2.0 * double(m) + ab) * (2.0 * double(m) + ab - 2.0) * x +
                            a * a - b * b);
        const complex c3 =
            2.0 * (double(m) + a - 1.0) * (double(m) + b - 1.0) * (2.0 * double(m) + ab);
        const complex next = (c2 * p - c3 * pm1) / c1;
        pm1 = p;
        p = next;
    }
#ifdef SCARF_CHECKED
    if (n <= 30) {
        double mag = 0.0;
        const complex s = jacobi_series(spec, x, &mag);
        if (std::abs(p - s) > std::max(1e-10 * std::abs(p), 1e-13 * mag))
            throw Error("jacobi: series and recurrence disagree");
    }
#endif
    return p;
}

/// d/dx P_n^{(a,b)}(x) = (a+b+n+1)/2 * P_{n-1}^{(a+1,b+1)}(x); zero for n = 0.
inline complex jacobi_derivative(const JacobiSpec& spec, complex x) {
    if (spec.n == 0) return complex(0.0);
    JacobiSpec d{spec.a + 1.0, spec.b + 1.0, spec.n - 1};
    return 0.5 * (spec.a + spec.b + double(spec.n) + 1.0) * jacobi(d, x);
}

namespace detail {

// exp(log_gamma(z)) reciprocal that treats denominator poles as exact zeros.
inline complex reciprocal_gamma_factor(complex z) {
    if (is_nonpositive_integer(z)) return complex(0.0);
    return std::exp(-log_gamma(z));
}

inline complex gauss_terminating_sum(complex a, complex b, complex c, int nterms) {
    complex sum(0.0), term(1.0);
    for (int k = 0;; ++k) {
        sum += term;
        if (k + 1 > nterms) break;
        term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1));
    }
    return sum;
}

}  // namespace detail

/// 2F1(a, b; c; 1) by the Gauss formula Gamma(c)Gamma(c-a-b) /
/// (Gamma(c-a)Gamma(c-b)), evaluated in log space. Terminating series
/// (a or b a non-positive integer) are summed exactly instead, which keeps
/// them valid even when Re(c-a-b) <= 0. Non-terminating series with
/// Re(c-a-b) <= 0 diverge and throw.
inline complex gauss_2f1_at_1(complex a, complex b, complex c) {
    if (detail::is_nonpositive_integer(c))
        throw PoleError("gauss_2f1_at_1: c at a non-positive integer");
    if (detail::is_nonpositive_integer(a))
        return detail::gauss_terminating_sum(a, b, c, int(-a.real()));
    if (detail::is_nonpositive_integer(b))
        return detail::gauss_terminating_sum(b, a, c, int(-b.real()));
    if (std::real(c - a - b) <= 0.0)
        throw DivergentSeries("gauss_2f1_at_1: series diverges, Re(c-a-b) <= 0");
    const complex num = log_gamma(c) + log_gamma(c - a - b);
    return std::exp(num) * detail::reciprocal_gamma_factor(c - a) *
           detail::reciprocal_gamma_factor(c - b);
}

/// Analytic continuation of the Gauss value, with a convergence verdict
/// instead of an exception. Used by the normalization audit, which must
/// record divergent closed forms rather than die on them.
struct Gauss2F1Result {
    complex value{};
    bool convergent = false;
};

inline Gauss2F1Result gauss_2f1_at_1_continued(complex a, complex b, complex c) {
    Gauss2F1Result out;
    out.convergent = std::real(c - a - b) > 0.0;
    if (detail::is_nonpositive_integer(c))
        throw PoleError("gauss_2f1_at_1_continued: c at a non-positive integer");
    if (detail::is_nonpositive_integer(a)) {
        out.value = detail::gauss_terminating_sum(a, b, c, int(-a.real()));
        out.convergent = true;
        return out;
    }
    if (detail::is_nonpositive_integer(b)) {
        out.value = detail::gauss_terminating_sum(b, a, c, int(-b.real()));
        out.convergent = true;
        return out;
    }
    if (detail::is_nonpositive_integer(c - a - b))
        throw PoleError("gauss_2f1_at_1_continued: continuation pole");
    out.value = std::exp(log_gamma(c) + log_gamma(c - a - b)) *
                detail::reciprocal_gamma_factor(c - a) *
                detail::reciprocal_gamma_factor(c - b);
    return out;
}

}  // namespace scarf
