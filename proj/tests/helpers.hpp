#pragma once

// Shared fixtures for the test suite. The oracles here are deliberately
// computed by a different route than the library code they check: the
// log-gamma oracle uses the Euler product, the 2F1 oracle uses extrapolated
// partial sums, and the Jacobi oracle expands the Rodrigues formula.

#include <scarf/scarf.hpp>

#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

using scarf::complex;

// ---------------------------------------------------------------------------
// Small numeric utilities.
// ---------------------------------------------------------------------------

inline double rel_err(complex got, complex want) {
    const double scale = std::max(std::abs(got), std::abs(want));
    if (scale == 0.0) return std::abs(got - want);
    return std::abs(got - want) / scale;
}

inline double rel_err(double got, double want) {
    return rel_err(complex(got, 0.0), complex(want, 0.0));
}

/// Integer power without branch-cut ambiguity.
inline complex ipow(complex z, int n) {
    complex acc = 1.0;
    for (int i = 0; i < n; ++i) acc *= z;
    return acc;
}

/// Falling factorial x (x-1) ... (x-m+1).
inline complex falling(complex x, int m) {
    complex acc = 1.0;
    for (int i = 0; i < m; ++i) acc *= x - double(i);
    return acc;
}

inline double binomial(int n, int k) {
    double acc = 1.0;
    for (int i = 1; i <= k; ++i) acc *= double(n - k + i) / double(i);
    return acc;
}

// ---------------------------------------------------------------------------
// Euler-product log-gamma oracle (right half-plane).
//
//   log G(z) = -log z + sum_{k=1..N} [ z log(1+1/k) - log(1+z/k) ]
//
// The tail decays like 1/N, so two Richardson levels over N, 2N, 4N cancel
// the 1/N and 1/N^2 terms. For Re z > 0 every factor stays in the right
// half-plane and the principal-branch sum equals the canonical log-gamma.
// ---------------------------------------------------------------------------

inline complex log_gamma_euler_partial(complex z, long N) {
    complex acc = -std::log(z);
    for (long k = 1; k <= N; ++k) {
        const double dk = double(k);
        acc += z * std::log1p(1.0 / dk) - std::log(complex(1.0, 0.0) + z / dk);
    }
    return acc;
}

inline complex log_gamma_euler(complex z) {
    const long N = 20000;
    const complex s1 = log_gamma_euler_partial(z, N);
    const complex s2 = log_gamma_euler_partial(z, 2 * N);
    const complex s4 = log_gamma_euler_partial(z, 4 * N);
    const complex t1 = 2.0 * s2 - s1;
    const complex t2 = 2.0 * s4 - s2;
    return (4.0 * t2 - t1) / 3.0;
}

// ---------------------------------------------------------------------------
// Gauss 2F1(a, b; c; 1) oracle from partial sums.
//
// The term ratio is 1 - (1+w)/k + O(1/k^2) with w = c-a-b, so the tail of
// the N-term partial sum expands as N^{-w} (c0 + c1/N + c2/N^2 + ...).
// Three exponent-aware extrapolation levels over N, 2N, 4N, 8N cancel the
// first three tail orders.
// ---------------------------------------------------------------------------

inline complex gauss_partial_sum(complex a, complex b, complex c, long N) {
    complex t = 1.0, s = 1.0;
    for (long k = 0; k + 1 < N; ++k) {
        const double dk = double(k);
        t *= (a + dk) * (b + dk) / ((c + dk) * (1.0 + dk));
        s += t;
    }
    return s;
}

inline complex gauss_2f1_oracle(complex a, complex b, complex c, long N = 10000) {
    const complex w = c - a - b;
    complex T[4];
    for (int i = 0; i < 4; ++i) T[i] = gauss_partial_sum(a, b, c, N << i);
    for (int level = 0; level < 3; ++level) {
        const complex f = std::pow(complex(2.0, 0.0), w + double(level));
        for (int i = 0; i + 1 < 4 - level; ++i) T[i] = (f * T[i + 1] - T[i]) / (f - 1.0);
    }
    return T[0];
}

// ---------------------------------------------------------------------------
// Rodrigues-form Jacobi oracle. Expanding the Rodrigues derivative with the
// Leibniz rule at x = 1-2z gives
//
//   n! P_n^{(a,b)}(1-2z) = sum_j C(n,j) ff(n+a,j) ff(n+b,n-j) (-1)^{n-j}
//                          z^{n-j} (1-z)^j
//
// with ff the falling factorial. All powers are integer powers, so the
// formula is branch-free for any complex argument.
// ---------------------------------------------------------------------------

inline complex jacobi_rodrigues(complex a, complex b, int n, complex x) {
    const complex z = 0.5 * (1.0 - x);
    complex acc = 0.0;
    for (int j = 0; j <= n; ++j) {
        complex term = binomial(n, j) * falling(a + double(n), j) *
                       falling(b + double(n), n - j);
        if ((n - j) % 2 != 0) term = -term;
        acc += term * ipow(z, n - j) * ipow(1.0 - z, j);
    }
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= double(i);
    return acc / fact;
}

// ---------------------------------------------------------------------------
// Quantization-root harness: finds the decay exponent nu at which the
// termination condition of the trigonometric triple is satisfied, by a sign
// scan plus Brent refinement. The closed-form guess is used only to size the
// search window; the root location itself comes from the residual.
//
// The termination residual genuinely vanishes at TWO nu values (the two signs
// of the radical belonging to the singular point the substitution does not
// map to a finite root). Only one of them decays at that point: the solution
// behaves like |z|^(Re(phi0+phi1)+n) as z -> infinity, so the bound root is
// the one with a negative total exponent. Every bracket is refined and the
// decaying one is returned.
// ---------------------------------------------------------------------------

inline double nu_closed_form(double gamma, double eta, int n_r) {
    const double two_k_plus_1 = std::sqrt(1.0 + 4.0 * gamma);
    const double lam = std::sqrt(1.0 + 4.0 * eta);
    return 0.5 * (2.0 * (2.0 * n_r + 1.0) + two_k_plus_1 + lam);
}

inline double nu_quantization_root(double gamma, double eta, int n_r, double window_center) {
    auto f = [&](double nu) {
        const scarf::NUProblem pr = scarf::trig_scarf_problem(gamma, eta, -nu * nu);
        const scarf::NUBranch b = scarf::bound_state_branch(scarf::enumerate_branches(pr));
        return std::real(scarf::quantization_residual(pr, b, n_r));
    };
    // The two residual roots are separated by sqrt(1 + 4 gamma) >= 1, so the
    // scan spacing must stay below one window unit.
    const double lo = std::max(1e-6, 0.35 * window_center);
    const double hi = 2.2 * window_center + 5.0;
    const scarf::ScanResult scan = scarf::scan_sign_changes(f, lo, hi, 1601);
    for (const auto& [ba, bb] : scan.brackets) {
        const double root = scarf::brent(f, ba, bb, 1e-13 * std::max(1.0, window_center));
        const scarf::NUProblem pr = scarf::trig_scarf_problem(gamma, eta, -root * root);
        const scarf::NUBranch b = scarf::bound_state_branch(scarf::enumerate_branches(pr));
        const double residual = std::abs(scarf::quantization_residual(pr, b, n_r));
        if (residual > 1e-8 * std::max(1.0, root)) continue;  // bracketed a jump, not a zero
        const double edge_exp = std::real(b.phi.exps[0] + b.phi.exps[1]) + double(n_r);
        if (edge_exp < 0.0) return root;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

/// Pseudospin collapsed-shape energy: with equal depths the radicand reduces
/// to alpha^2 and the transcendental equation becomes the quadratic
/// E^2 - E - 2 - (alpha u / 2)^2 = 0, u = 2n + D - 1 (unit M = Cps = 1).
inline double pseudospin_closed_energy(int u, double alpha) {
    return 0.5 * (1.0 - std::sqrt(9.0 + alpha * alpha * double(u) * double(u)));
}

// ---------------------------------------------------------------------------
// Subprocess driver for the CLI binary.
// ---------------------------------------------------------------------------

inline std::string scratch_dir() {
    static const std::string dir = [] {
        const auto base = std::filesystem::temp_directory_path() /
                          ("scarf_tests_" + std::to_string(::getpid()));
        std::filesystem::create_directories(base);
        return base.string();
    }();
    return dir;
}

inline std::string scratch_path(const std::string& name) {
    return scratch_dir() + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return {};
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    std::fclose(f);
    return out;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs the built CLI with `args` (shell-quoted by the caller); `env_prefix`
/// may carry VAR=value assignments. Captures stdout/stderr.
inline CliResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    static int counter = 0;
    const std::string base = scratch_path("capture_" + std::to_string(counter++));
    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += std::string(SCARF_CLI_PATH) + " " + args;
    cmd += " >" + base + ".out 2>" + base + ".err";
    const int rc = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    return r;
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace testutil
