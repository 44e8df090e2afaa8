#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

#include <atomic>

using namespace scarf;

TEST_CASE("brent finds bracketed roots to tight tolerance") {
    const double r1 = brent([](double x) { return std::cos(x); }, 1.0, 2.0);
    CHECK(std::abs(r1 - 0.5 * pi) < 1e-12);

    const double r2 = brent([](double x) { return x * x * x - 2.0; }, 0.0, 2.0);
    CHECK(std::abs(r2 - std::cbrt(2.0)) < 1e-12);

    // Endpoint roots are returned without iteration.
    CHECK(brent([](double x) { return x; }, 0.0, 1.0) == 0.0);

    CHECK_THROWS_AS(brent([](double x) { return 1.0 + x * x; }, -1.0, 1.0), NoBracket);
}

TEST_CASE("scan_sign_changes brackets every crossing and skips invalid stretches") {
    const ScanResult s = scan_sign_changes([](double x) { return std::sin(x); }, 0.1, 10.0, 4001);
    REQUIRE(s.brackets.size() == 3);
    CHECK_FALSE(s.skipped_invalid);
    const double roots[] = {pi, 2.0 * pi, 3.0 * pi};
    for (size_t i = 0; i < 3; ++i) {
        CHECK(s.brackets[i].first < roots[i]);
        CHECK(s.brackets[i].second > roots[i]);
    }

    // A NaN stretch is skipped and reported; crossings on both sides survive,
    // and the crossing swallowed by the hole is dropped rather than bridged.
    auto holey = [](double x) {
        if (x > 5.5 && x < 7.0) return std::numeric_limits<double>::quiet_NaN();
        return std::sin(x);
    };
    const ScanResult h = scan_sign_changes(holey, 0.1, 10.0, 4001);
    CHECK(h.skipped_invalid);
    REQUIRE(h.brackets.size() == 2);  // 2 pi is inside the hole
    CHECK(h.brackets[0].second < 5.5);
    CHECK(h.brackets[1].first > 7.0);

    CHECK_THROWS_AS(scan_sign_changes([](double) { return 1.0; }, 1.0, 0.0, 100), DomainError);
}

TEST_CASE("newton_complex converges on analytic residuals") {
    const NewtonResult r =
        newton_complex([](complex z) { return z * z + 1.0; }, complex(0.5, 0.5));
    CHECK(r.converged);
    CHECK(std::abs(r.root - complex(0.0, 1.0)) < 1e-9);
    CHECK(std::abs(r.residual) < 1e-10);

    // A flat residual stagnates: best iterate reported, not thrown.
    const NewtonResult s =
        newton_complex([](complex) { return complex(1.0); }, complex(0.3, -0.2), 1e-10, 40);
    CHECK_FALSE(s.converged);
    CHECK(s.root == complex(0.3, -0.2));
    CHECK(s.residual == complex(1.0));
}

TEST_CASE("Gauss-Legendre panel integrates polynomials of degree 29 exactly") {
    // One 15-point panel is exact through degree 2*15 - 1.
    for (int deg : {7, 16, 29}) {
        auto f = [deg](double x) { return std::pow(x, deg); };
        const double got = detail::gl15_panel(f, 0.0, 1.0);
        CHECK(std::abs(got - 1.0 / double(deg + 1)) < 1e-14);
    }
}

TEST_CASE("adaptive quadrature on known integrals") {
    const double i1 = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-14);
    CHECK(std::abs(i1 - 1.0 / 3.0) < 1e-13);

    const double i2 =
        integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, 30.0, 1e-13);
    CHECK(std::abs(i2 - (1.0 - std::exp(-30.0))) < 1e-12);

    // A narrow Gaussian needs the adaptive split to find the spike.
    const double sg = 1e-3;
    auto bump = [sg](double x) {
        const double t = (x - 0.5) / sg;
        return std::exp(-0.5 * t * t);
    };
    const double i3 = integrate_adaptive(bump, 0.0, 1.0, 1e-15);
    CHECK(std::abs(i3 - sg * std::sqrt(2.0 * pi)) < 1e-12);

    CHECK_THROWS_AS(integrate_adaptive(bump, 0.0, 1.0, 1e-300, 8), QuadratureFailure);
    CHECK_THROWS_AS(integrate_adaptive(bump, 1.0, 0.0, 1e-6), DomainError);
}

TEST_CASE("relative-tolerance quadrature handles tiny integrands") {
    // Magnitude ~1e-150: any fixed absolute tolerance would accept garbage.
    const double tiny = 1e-150;
    auto f = [tiny](double x) { return tiny * std::sin(pi * x); };
    const double got = integrate_relative(f, 0.0, 1.0, 1e-12);
    CHECK(testutil::rel_err(got, tiny * 2.0 / pi) < 1e-11);

    // Same control on an ordinary integrand.
    const double g = integrate_relative([](double x) { return std::cos(x); }, 0.0, 1.0, 1e-13);
    CHECK(testutil::rel_err(g, std::sin(1.0)) < 1e-12);
}

TEST_CASE("thread budget respects the environment override") {
    ::setenv("SCARF_THREADS", "3", 1);
    CHECK(thread_budget() == 3);
    ::setenv("SCARF_THREADS", "0", 1);  // out of range: fall back to hardware
    CHECK(thread_budget() >= 1);
    ::setenv("SCARF_THREADS", "junk", 1);
    CHECK(thread_budget() >= 1);
    ::unsetenv("SCARF_THREADS");
    CHECK(thread_budget() >= 1);
}

TEST_CASE("parallel_for_indexed visits every index once and rethrows") {
    const size_t n = 1000;
    std::vector<std::atomic<int>> hits(n);
    parallel_for_indexed(n, [&](size_t i) { hits[i].fetch_add(1); }, 4);
    for (size_t i = 0; i < n; ++i) CHECK(hits[i].load() == 1);

    // Results identical to the serial path.
    std::vector<double> par(n), ser(n);
    parallel_for_indexed(n, [&](size_t i) { par[i] = std::sqrt(double(i)); }, 4);
    parallel_for_indexed(n, [&](size_t i) { ser[i] = std::sqrt(double(i)); }, 1);
    CHECK(par == ser);

    CHECK_THROWS_AS(parallel_for_indexed(
                        100,
                        [](size_t i) {
                            if (i == 7) throw DomainError("boom");
                        },
                        4),
                    DomainError);
}
