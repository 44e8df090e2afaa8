// Builds a normalized two-component bound state and prints a coarse profile
// plus the re-integrated norm.

#include <cstdio>

#include "scarf/quadrature.hpp"
#include "scarf/spectra.hpp"
#include "scarf/wavefunction.hpp"

int main() {
    using namespace scarf;

    EnergyEquationSpec spec;
    spec.params.M = 1.0;
    spec.params.C = 1.0;
    spec.params.V0 = 1.0;
    spec.params.S0 = 1.0;
    spec.params.alpha = 0.05;
    spec.params.symmetry = Symmetry::Spin;
    spec.qn = make_quantum_numbers(3, 1, 0);  // one radial node
    spec.variant = Variant::SpinTrig;

    double E = 0.0;
    for (const EnergyRoot& r : solve_real(spec))
        if (r.normalizable) E = r.E.real();
    std::printf("bound state at E = %.12g\n", E);

    const SpinorState st = normalize(make_spinor_state(spec.params, spec.qn, E));
    std::printf("nu = %.6g  lambda = %.6g  norm = %.6g\n", st.nu, st.lambda_cap, st.norm);

    const double L = domain_length(spec.params.alpha);
    for (int i = 1; i <= 8; ++i) {
        const double r = double(i) * L / 9.0;
        const complex F = upper_component(st, r);
        const complex G = lower_component_via_relation(st, r);
        std::printf("r = %8.4f  |F| = %.6e  |G| = %.6e\n", r, std::abs(F), std::abs(G));
    }

    const double I = integrate_relative(
        [&](double r) { return std::norm(upper_component(st, r)); }, 1e-9 * L, L * (1 - 1e-9));
    std::printf("re-integrated norm: %.12f\n", I);
    return 0;
}
