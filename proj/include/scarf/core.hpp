#pragma once
// Physical parameters, quantum-number bookkeeping, and the derived
// dimensionless coefficients consumed by every other module.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace scarf {

using complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// ---------------------------------------------------------------------------
// Error taxonomy. Everything thrown by this library derives from Error.
// ---------------------------------------------------------------------------
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct DivergentSeries : Error {
    using Error::Error;
};
struct NoAdmissibleBranch : Error {
    using Error::Error;
};
struct InfiniteBranchFamily : Error {
    using Error::Error;
};
struct NoRootInInterval : Error {
    using Error::Error;
};
struct NoBracket : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct QuadratureFailure : Error {
    using Error::Error;
};
struct SymmetryConstantPole : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Model parameters (natural units, hbar = c = 1).
// ---------------------------------------------------------------------------
enum class Symmetry { Spin, Pseudospin };

inline const char* to_string(Symmetry s) {
    return s == Symmetry::Spin ? "spin" : "pseudospin";
}

/// Physical inputs of the radial problem.
///
/// M    : fermion mass
/// C    : symmetry constant (Cs for spin symmetry, Cps for pseudospin)
/// V0   : vector potential depth
/// S0   : scalar potential depth
/// alpha: potential range parameter (> 0, inverse length)
/// q    : deformation parameter for the deformed-hyperbolic variants
struct ModelParams {
    double M = 1.0;
    double C = 0.0;
    double V0 = 1.0;
    double S0 = 1.0;
    double alpha = 0.01;
    double q = 1.0;
    Symmetry symmetry = Symmetry::Spin;

    void validate() const {
        if (!(alpha > 0.0)) throw DomainError("ModelParams: alpha must be > 0");
    }
};

// ---------------------------------------------------------------------------
// Quantum numbers.
// ---------------------------------------------------------------------------

/// Spin-orbit quantum number for orbital momentum l in D spatial dimensions.
/// Returns -(2l+D-1)/2 for the aligned coupling, +(2l+D-1)/2 otherwise.
inline double kappa_of(int l, int D, bool aligned) {
    if (l < 0) throw DomainError("kappa_of: l must be >= 0");
    if (D < 2) throw DomainError("kappa_of: D must be >= 2");
    const double mag = 0.5 * (2 * l + D - 1);
    return aligned ? -mag : mag;
}

struct QuantumNumbers {
    int D = 3;       // spatial dimension, >= 2
    int n = 1;       // principal quantum number, >= 1
    int n_r = 0;     // radial quantum number, >= 0
    int l = 0;       // orbital quantum number, >= 0
    double kappa = -1.0;
    bool aligned = true;

    void validate() const {
        if (D < 2) throw DomainError("QuantumNumbers: D must be >= 2");
        if (n < 1) throw DomainError("QuantumNumbers: n must be >= 1");
        if (n_r < 0) throw DomainError("QuantumNumbers: n_r must be >= 0");
        if (l < 0) throw DomainError("QuantumNumbers: l must be >= 0");
    }
};

/// Builds a consistent quantum-number set from (D, n_r, l) using the
/// principal-number mapping n = 2 n_r + 1 + l.
inline QuantumNumbers make_quantum_numbers(int D, int n_r, int l, bool aligned = true) {
    QuantumNumbers qn;
    qn.D = D;
    qn.n_r = n_r;
    qn.l = l;
    qn.n = 2 * n_r + 1 + l;
    qn.aligned = aligned;
    qn.kappa = kappa_of(l, D, aligned);
    qn.validate();
    return qn;
}

// ---------------------------------------------------------------------------
// Derived dimensionless coefficients.
// ---------------------------------------------------------------------------

/// Coefficients of the reduced second-order radial equation at energy E.
///
/// gamma     : centrifugal strength, kappa(kappa+1) (spin) or kappa(kappa-1)
/// eta       : potential strength divided by alpha^2
/// epsilon_sq: spectral parameter epsilon^2 (negative for a bound state)
/// lambda_cap: Lambda = sqrt(1 + 4 eta); complex when 1 + 4 eta < 0
/// nu        : real decay exponent sqrt(-epsilon_sq); NaN when epsilon_sq >= 0
struct DerivedCoefficients {
    double gamma = 0.0;
    double eta = 0.0;
    double epsilon_sq = 0.0;
    complex lambda_cap{1.0, 0.0};
    double nu = 0.0;
    bool normalizable = true;  // 1 + 4 eta >= 0
    bool bound = false;        // epsilon_sq < 0
};

inline DerivedCoefficients derived_coefficients(const ModelParams& p,
                                                const QuantumNumbers& qn,
                                                double E) {
    p.validate();
    const double a2 = p.alpha * p.alpha;
    DerivedCoefficients d;
    if (p.symmetry == Symmetry::Spin) {
        d.gamma = qn.kappa * (qn.kappa + 1.0);
        d.eta = (p.V0 + p.S0) * (p.M + E - p.C) / a2;
        d.epsilon_sq = (p.M - E) * (p.M + E - p.C) / a2;
    } else {
        d.gamma = qn.kappa * (qn.kappa - 1.0);
        d.eta = (p.V0 - p.S0) * (p.M - E + p.C) / a2;
        d.epsilon_sq = (p.M + E) * (p.M - E + p.C) / a2;
    }
    const double disc = 1.0 + 4.0 * d.eta;
    d.normalizable = disc >= 0.0;
    d.lambda_cap = std::sqrt(complex(disc, 0.0));
    d.bound = d.epsilon_sq < 0.0;
    d.nu = d.bound ? std::sqrt(-d.epsilon_sq) : std::numeric_limits<double>::quiet_NaN();
    return d;
}

}  // namespace scarf
