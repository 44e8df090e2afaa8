#pragma once
// Generic solver for equations of hypergeometric type,
//
//     psi'' + (tau~(z)/sigma(z)) psi' + (sigma~(z)/sigma(z)^2) psi = 0,
//
// with sigma, sigma~ of degree <= 2 and tau~ of degree <= 1. The substitution
// psi = phi(z) y(z) reduces this to sigma y'' + tau y' + lambda y = 0 when a
// linear pi(z) can be found such that the radicand
//
//     R_k(z) = ((sigma' - tau~)/2)^2 - sigma~ + k sigma
//
// is the square of a polynomial. Each admissible constant k gives two sign
// branches pi = (sigma' - tau~)/2 +- sqrt(R_k); bound spectra follow from the
// polynomial-termination condition lambda = lambda_n.

#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"
#include "poly.hpp"

namespace scarf {

struct NUProblem {
    Poly sigma;        // degree <= 2, not identically zero
    Poly sigma_tilde;  // degree <= 2
    Poly tau_tilde;    // degree <= 1

    void validate() const {
        if (sigma.degree() > 2 || sigma_tilde.degree() > 2 || tau_tilde.degree() > 1)
            throw DomainError("NUProblem: polynomial degrees out of range");
        if (sigma.is_zero()) throw DomainError("NUProblem: sigma must be nonzero");
    }
};

/// Multiplicative factor (weight rho or prefactor phi) in closed form.
///
/// TwoRootPowers: factor ~ (z - roots[0])^exps[0] * (z - roots[1])^exps[1]
///                (sigma has two distinct roots; for the z(1-z) family this is
///                the familiar z^a (1-z)^b presentation up to a constant)
/// LinearMixed  : factor ~ (z - roots[0])^exps[0] * exp(slope * z)
/// ExpPoly      : factor ~ exp(log_poly(z))        (constant sigma)
/// RepeatedRoot : sigma has a double root; exponent form unsupported,
///                kept for diagnostics only
enum class FactorKind { TwoRootPowers, LinearMixed, ExpPoly, RepeatedRoot };

struct FactorForm {
    FactorKind kind = FactorKind::TwoRootPowers;
    complex roots[2]{};
    complex exps[2]{};
    complex slope{};
    Poly log_poly;
};

struct NUBranch {
    complex nu_k;  // the constant k that makes the radicand a perfect square
    Poly pi;       // linear pi(z)
    Poly tau;      // tau~ + 2 pi
    complex lambda;  // k + pi'
    FactorForm weight;  // rho, solving (sigma rho)' = tau rho
    FactorForm phi;     // prefactor, phi'/phi = pi/sigma
    bool degenerate = false;  // double k-root or collapsed +- pair
};

namespace detail {

inline complex stable_sqrt(complex v) { return std::sqrt(v); }

// Solves a z^2 + b z + c = 0 with complex coefficients (a != 0), returning the
// pair of roots computed against cancellation.
inline std::pair<complex, complex> quadratic_roots(complex a, complex b, complex c) {
    const complex disc = b * b - 4.0 * a * c;
    complex sq = std::sqrt(disc);
    if (std::real(std::conj(b) * sq) > 0.0) sq = -sq;  // b and sq anti-aligned
    const complex q = -0.5 * (b - sq);
    const complex r1 = q / a;
    const complex r2 = (std::abs(q) > 0.0) ? c / q : -b / a - r1;
    return {r1, r2};
}

inline FactorForm factor_from_log_derivative(const Poly& sigma, const Poly& num) {
    // Solves f'/f = num/sigma for the closed-form factor f.
    FactorForm out;
    const int deg = sigma.degree();
    if (deg == 2) {
        auto [r1, r2] = quadratic_roots(sigma.coeff(2), sigma.coeff(1), sigma.coeff(0));
        const double sep = std::abs(r1 - r2);
        const double sc = std::max({1.0, std::abs(r1), std::abs(r2)});
        if (sep <= 1e-9 * sc) {
            out.kind = FactorKind::RepeatedRoot;
            out.roots[0] = out.roots[1] = 0.5 * (r1 + r2);
            return out;
        }
        // Deterministic order: smaller modulus first, ties by (Re, Im).
        auto key = [](complex r) {
            return std::tuple<double, double, double>(std::abs(r), std::real(r), std::imag(r));
        };
        if (key(r2) < key(r1)) std::swap(r1, r2);
        const Poly dsigma = sigma.derivative();
        out.kind = FactorKind::TwoRootPowers;
        out.roots[0] = r1;
        out.roots[1] = r2;
        out.exps[0] = num(r1) / dsigma(r1);
        out.exps[1] = num(r2) / dsigma(r2);
        return out;
    }
    if (deg == 1) {
        const complex s1 = sigma.coeff(1);
        const complex r = -sigma.coeff(0) / s1;
        out.kind = FactorKind::LinearMixed;
        out.roots[0] = r;
        out.exps[0] = num(r) / s1;
        out.slope = num.coeff(1) / s1;
        return out;
    }
    // Constant sigma: f = exp( integral of num/sigma ).
    const complex s0 = sigma.coeff(0);
    out.kind = FactorKind::ExpPoly;
    out.log_poly = Poly{{complex(0.0), num.coeff(0) / s0, 0.5 * num.coeff(1) / s0}};
    return out;
}

}  // namespace detail

/// Weight rho and prefactor phi for a branch: rho satisfies the Pearson
/// equation (sigma rho)' = tau rho, i.e. rho'/rho = (tau - sigma')/sigma, and
/// phi satisfies phi'/phi = pi/sigma.
inline std::pair<FactorForm, FactorForm> weight_and_phi(const NUProblem& problem,
                                                        const NUBranch& branch) {
    const Poly rho_num = branch.tau - problem.sigma.derivative();
    FactorForm weight = detail::factor_from_log_derivative(problem.sigma, rho_num);
    FactorForm phi = detail::factor_from_log_derivative(problem.sigma, branch.pi);
    return {weight, phi};
}

/// Enumerates every branch (k, +-) for which the radicand R_k is a perfect
/// square. k values are the roots of disc(R_k) = 0, a polynomial of degree
/// <= 2 in k. Throws InfiniteBranchFamily when the discriminant vanishes
/// identically (every k admissible) — the caller must constrain the problem.
inline std::vector<NUBranch> enumerate_branches(const NUProblem& problem) {
    problem.validate();
    const Poly& sigma = problem.sigma;
    const Poly p = 0.5 * (sigma.derivative() - problem.tau_tilde);
    const Poly base = p * p - problem.sigma_tilde;

    const complex b0 = base.coeff(0), b1 = base.coeff(1), b2 = base.coeff(2);
    const complex s0 = sigma.coeff(0), s1 = sigma.coeff(1), s2 = sigma.coeff(2);

    // disc(base + k sigma) as a quadratic in k.
    const complex d2 = s1 * s1 - 4.0 * s2 * s0;
    const complex d1 = 2.0 * b1 * s1 - 4.0 * (b2 * s0 + b0 * s2);
    const complex d0 = b1 * b1 - 4.0 * b2 * b0;

    const double sc = std::max(1.0, std::max(base.scale(), sigma.scale()));
    const double tol = 1e-12 * sc * sc;

    std::vector<complex> ks;
    bool k_degenerate = false;
    if (std::abs(d2) > tol) {
        auto [k1, k2] = detail::quadratic_roots(d2, d1, d0);
        if (std::abs(k1 - k2) <= 1e-9 * std::max(1.0, std::abs(k1) + std::abs(k2))) {
            ks.push_back(0.5 * (k1 + k2));
            k_degenerate = true;
        } else {
            ks.push_back(k1);
            ks.push_back(k2);
        }
    } else if (std::abs(d1) > tol) {
        ks.push_back(-d0 / d1);
    } else if (std::abs(d0) > tol) {
        // No k can square the radicand; fall through with an empty list.
    } else {
        throw InfiniteBranchFamily(
            "enumerate_branches: radicand is a perfect square for every k");
    }

    std::vector<NUBranch> out;
    for (const complex k : ks) {
        const Poly R = base + k * sigma;
        const complex r0 = R.coeff(0), r1 = R.coeff(1), r2 = R.coeff(2);
        const double tr = 1e-12 * std::max(1.0, R.scale());

        std::vector<Poly> sqrts;
        bool collapsed = false;
        if (std::abs(r2) > tr) {
            const complex a = detail::stable_sqrt(r2);
            const complex bc = r1 / (2.0 * a);
            sqrts.push_back(Poly{{bc, a}});
            sqrts.push_back(Poly{{-bc, -a}});
        } else if (std::abs(r1) > tr) {
            continue;  // degree-1 radicand is never a perfect square
        } else if (std::abs(r0) > tr) {
            const complex c = detail::stable_sqrt(r0);
            sqrts.push_back(Poly{{c}});
            sqrts.push_back(Poly{{-c}});
        } else {
            sqrts.push_back(Poly{});  // R == 0: the +- pair collapses
            collapsed = true;
        }

        for (const Poly& s : sqrts) {
            NUBranch b;
            b.nu_k = k;
            b.pi = p + s;
            b.tau = problem.tau_tilde + 2.0 * b.pi;
            b.lambda = k + b.pi.coeff(1);
            b.degenerate = k_degenerate || collapsed;
            auto [w, f] = weight_and_phi(problem, b);
            b.weight = w;
            b.phi = f;
            out.push_back(std::move(b));
        }
    }
    return out;
}

namespace detail {

inline std::tuple<double, double, double, double, double> branch_order_key(const NUBranch& b) {
    return {std::abs(b.nu_k), std::real(b.nu_k), std::imag(b.nu_k),
            std::real(b.pi.coeff(1)), std::imag(b.pi.coeff(1))};
}

}  // namespace detail

/// Admissible-branch selection: keep branches with Re(tau') < 0; among those,
/// prefer branches whose phi factor is normalizable at the first sigma root
/// (Re exponent > 0, two-root families only); break remaining ties by the
/// smallest |k|, deterministically.
inline NUBranch select_branch(const std::vector<NUBranch>& branches) {
    std::vector<const NUBranch*> neg;
    for (const auto& b : branches)
        if (std::real(b.tau.coeff(1)) < 0.0) neg.push_back(&b);
    if (neg.empty())
        throw NoAdmissibleBranch("select_branch: no branch has Re(tau') < 0");

    std::vector<const NUBranch*> pool;
    for (const auto* b : neg)
        if (b->phi.kind == FactorKind::TwoRootPowers && std::real(b->phi.exps[0]) > 0.0)
            pool.push_back(b);
    if (pool.empty()) pool = neg;

    const NUBranch* best = pool.front();
    for (const auto* b : pool)
        if (detail::branch_order_key(*b) < detail::branch_order_key(*best)) best = b;
    return *best;
}

/// Structural selection of the bound-state branch for two-root problems:
/// the unique branch whose phi factor vanishes at the first root and whose
/// weight decays at the second. Unlike select_branch, this pin is independent
/// of the sign of tau', which flips once the spectral parameter is quantized.
inline NUBranch bound_state_branch(const std::vector<NUBranch>& branches) {
    std::vector<const NUBranch*> pool;
    for (const auto& b : branches)
        if (b.weight.kind == FactorKind::TwoRootPowers &&
            std::real(b.phi.exps[0]) > 0.0 && std::real(b.weight.exps[1]) < 0.0)
            pool.push_back(&b);
    if (pool.empty())
        throw NoAdmissibleBranch("bound_state_branch: no normalizable branch");
    const NUBranch* best = pool.front();
    for (const auto* b : pool)
        if (detail::branch_order_key(*b) < detail::branch_order_key(*best)) best = b;
    return *best;
}

/// Termination eigenvalue lambda_n = -n tau' - n(n-1) sigma''/2.
inline complex lambda_n(const NUProblem& problem, const NUBranch& branch, int n) {
    if (n < 0) throw DomainError("lambda_n: n must be >= 0");
    const complex taup = branch.tau.coeff(1);
    const complex sigpp = 2.0 * problem.sigma.coeff(2);
    return -double(n) * taup - 0.5 * double(n) * double(n - 1) * sigpp;
}

/// lambda - lambda_n. A zero in the embedded spectral parameter is the
/// quantization condition for the n-th bound state.
inline complex quantization_residual(const NUProblem& problem, const NUBranch& branch,
                                     int n) {
    return branch.lambda - lambda_n(problem, branch, n);
}

/// Polynomial triple of the radial equation
///
///     F'' - (gamma a^2/cos^2(a r) + eta a^2/sin^2(a r) + eps^2 a^2) F = 0
///
/// after the substitution z = -tan^2(a r). sigma = 2z(1-z), and
/// sigma~ = -gamma z^2 + (gamma + eps^2 + eta) z - eta, with tau~ = 1 - 3z.
inline NUProblem trig_scarf_problem(complex gamma, complex eta, complex epsilon_sq) {
    NUProblem pr;
    pr.sigma = Poly{{complex(0.0), complex(2.0), complex(-2.0)}};
    pr.tau_tilde = Poly{{complex(1.0), complex(-3.0)}};
    pr.sigma_tilde = Poly{{-eta, gamma + epsilon_sq + eta, -gamma}};
    return pr;
}

}  // namespace scarf
