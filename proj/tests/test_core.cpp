#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace scarf;

TEST_CASE("kappa_of matches the dimensional spin-orbit convention") {
    CHECK(kappa_of(0, 3, false) == 1.0);
    CHECK(kappa_of(0, 3, true) == -1.0);
    CHECK(kappa_of(1, 4, false) == 2.5);
    CHECK(kappa_of(1, 4, true) == -2.5);
    CHECK(kappa_of(2, 5, false) == 4.0);
    CHECK_THROWS_AS(kappa_of(-1, 3, true), DomainError);
    CHECK_THROWS_AS(kappa_of(0, 1, true), DomainError);
}

TEST_CASE("make_quantum_numbers fills the principal-number mapping") {
    const QuantumNumbers qn = make_quantum_numbers(5, 2, 1, false);
    CHECK(qn.D == 5);
    CHECK(qn.n_r == 2);
    CHECK(qn.l == 1);
    CHECK(qn.n == 2 * 2 + 1 + 1);
    CHECK(qn.kappa == kappa_of(1, 5, false));
    CHECK_FALSE(qn.aligned);

    CHECK_THROWS_AS(make_quantum_numbers(1, 0, 0), DomainError);
    CHECK_THROWS_AS(make_quantum_numbers(3, -1, 0), DomainError);
}

TEST_CASE("QuantumNumbers::validate accepts table-style rows") {
    // Audit rows carry (D, n) straight from a published table; they need not
    // satisfy the n = 2 n_r + 1 + l mapping.
    QuantumNumbers qn;
    qn.D = 4;
    qn.n = 2;  // even principal number, no (n_r, l) decomposition with l = 0
    CHECK_NOTHROW(qn.validate());
    qn.n = 0;
    CHECK_THROWS_AS(qn.validate(), DomainError);
}

TEST_CASE("ModelParams validation") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    p.alpha = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.alpha = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("derived_coefficients, spin family") {
    ModelParams p;  // M = C = ... defaults: M=1, C=0
    p.C = 1.0;
    p.alpha = 0.01;
    p.symmetry = Symmetry::Spin;
    const QuantumNumbers qn = make_quantum_numbers(3, 0, 0, true);  // kappa = -1

    const DerivedCoefficients d = derived_coefficients(p, qn, 3.0);
    CHECK(d.gamma == 0.0);  // kappa(kappa+1) with kappa = -1
    // eta = (V0+S0)(M+E-C)/alpha^2 = 2*3/1e-4
    CHECK(d.eta == Catch::Approx(60000.0).epsilon(1e-14));
    // epsilon^2 = (M-E)(M+E-C)/alpha^2 = (-2)(3)/1e-4
    CHECK(d.epsilon_sq == Catch::Approx(-60000.0).epsilon(1e-14));
    CHECK(d.bound);
    CHECK(d.normalizable);
    CHECK(d.nu == Catch::Approx(std::sqrt(60000.0)).epsilon(1e-14));
    CHECK(d.lambda_cap.imag() == 0.0);
    CHECK(d.lambda_cap.real() == Catch::Approx(std::sqrt(240001.0)).epsilon(1e-14));

    // Unaligned coupling puts the centrifugal strength back.
    const QuantumNumbers qn2 = make_quantum_numbers(3, 0, 0, false);  // kappa = +1
    const DerivedCoefficients d2 = derived_coefficients(p, qn2, 3.0);
    CHECK(d2.gamma == 2.0);

    // An unbound energy has epsilon^2 > 0 and a NaN decay exponent.
    const DerivedCoefficients d3 = derived_coefficients(p, qn, 0.5);
    CHECK(d3.epsilon_sq > 0.0);
    CHECK_FALSE(d3.bound);
    CHECK(std::isnan(d3.nu));
}

TEST_CASE("derived_coefficients, pseudospin family") {
    ModelParams p;
    p.C = 1.0;
    p.alpha = 0.001;
    p.symmetry = Symmetry::Pseudospin;
    QuantumNumbers qn = make_quantum_numbers(3, 0, 0, true);

    // Equal depths: the potential strength vanishes identically.
    const DerivedCoefficients d = derived_coefficients(p, qn, -1.0002);
    CHECK(d.eta == 0.0);
    CHECK(d.lambda_cap.real() == 1.0);
    CHECK(d.gamma == qn.kappa * (qn.kappa - 1.0));
    // epsilon^2 = (M+E)(M-E+C)/alpha^2 < 0 just below E = -M
    CHECK(d.epsilon_sq < 0.0);
    CHECK(d.bound);

    // Strongly attractive pseudospin coupling can push 1 + 4 eta negative.
    p.V0 = 0.0;
    p.S0 = 60.0;
    const DerivedCoefficients d2 = derived_coefficients(p, qn, -1.5);
    CHECK(d2.eta * 4.0 + 1.0 < 0.0);
    CHECK_FALSE(d2.normalizable);
    CHECK(d2.lambda_cap.imag() != 0.0);
}

TEST_CASE("symmetry names round-trip") {
    CHECK(std::string(to_string(Symmetry::Spin)) == "spin");
    CHECK(std::string(to_string(Symmetry::Pseudospin)) == "pseudospin");
}
