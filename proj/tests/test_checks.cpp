#include "doctest.h"
#include "orlicz/checks.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>

using namespace orlicz;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("young check point arithmetic and report invariants") {
    auto p2 = NFunction::build(NFunctionSpec::power(2.0));
    // t = 3, s = 6: equality (s = a(t) t); t = 3, s = 2: 6 <= 10
    CHECK(3.0 * 6.0 == doctest::Approx(p2.A(3.0) + conjugate_eval(p2, 6.0)));
    CHECK(p2.A(3.0) + conjugate_eval(p2, 2.0) == doctest::Approx(10.0));

    auto rep = young_check(p2, 500);
    CHECK(rep.passed);
    CHECK(rep.samples > 500);
    CHECK(rep.violations.empty());
    CHECK(rep.worst_margin_rel >= -rep.tolerance_rel);
}

TEST_CASE("lemma f0 check across families") {
    for (auto spec : {NFunctionSpec::power(2.5), NFunctionSpec::power_sum(2, 3),
                      NFunctionSpec::curvature(1.5), NFunctionSpec::power_log(2.6)}) {
        auto nf = NFunction::build(spec);
        auto rep = lemma_f0_check(nf, 300);
        CHECK(rep.passed);
    }
}

TEST_CASE("F1 sandwich check") {
    auto ps = NFunction::build(NFunctionSpec::power_sum(2.0, 3.0));
    // rho = 0.5, t = 2: 0.125 * 12 <= 2 <= 0.25 * 12
    CHECK(xi0(ps, 0.5) * ps.A(2.0) == doctest::Approx(1.5));
    CHECK(ps.A(1.0) == doctest::Approx(2.0));
    CHECK(xi1(ps, 0.5) * ps.A(2.0) == doctest::Approx(3.0));

    for (auto spec : {NFunctionSpec::power(2.5), NFunctionSpec::power_sum(2, 3),
                      NFunctionSpec::curvature(1.5), NFunctionSpec::power_log(2.6)}) {
        auto rep = sandwich_check(NFunction::build(spec), 500);
        CHECK(rep.passed);
    }
}

TEST_CASE("F2 sandwich and f3 ratio on Sobolev conjugates") {
    struct Case { NFunctionSpec spec; int N; };
    std::vector<Case> cases = {
        {NFunctionSpec::power(2.5), 3},
        {NFunctionSpec::power_sum(2.0, 3.0), 3},  // m = N: exponential type
        {NFunctionSpec::curvature(1.5), 3},
        {NFunctionSpec::power_log(2.6), 4},
    };
    for (const auto& c : cases) {
        auto nf = NFunction::build(c.spec);
        auto sc = SobolevConjugate::build(nf, c.N);
        auto s2 = sandwich_check(sc, 400);
        CHECK_MESSAGE(s2.passed, s2.name, " worst_rel=", s2.worst_margin_rel);
        auto f3 = f3_ratio_check(sc, 400);
        CHECK_MESSAGE(f3.passed, f3.name, " worst_rel=", f3.worst_margin_rel);
    }
}

TEST_CASE("f3 ratio is exactly p* for the pure power case") {
    auto nf = NFunction::build(NFunctionSpec::power(2.0));
    auto sc = SobolevConjugate::build(nf, 3);
    for (double t : log_spaced(0.1, 10.0, 50)) {
        const double ratio = a_star_eval(sc, t) * t / sc.eval(t);
        CHECK(ratio == doctest::Approx(6.0).epsilon(1e-9));
    }
}

TEST_CASE("Strauss bound: explicit constant and Gaussian example") {
    auto nf = NFunction::build(NFunctionSpec::power(2.0));
    auto g = RadialGrid::make(3, 10.0, 2000);
    GridFunction u(g, [](double r) { return std::exp(-r * r); });

    auto b = StraussBound::make(nf, u);
    CHECK(b.C == doctest::Approx(5.0 / (4.0 * kPi)));  // (K+1)/omega_2, K = 4
    // E carries the O(h^2) error of the finite-difference gradient
    CHECK(b.E == doctest::Approx(4.0 * std::pow(kPi / 2.0, 1.5)).epsilon(1e-4));
    // bound(r) = sqrt(C E / r^2) for A = t^2
    CHECK(b.bound(2.0) == doctest::Approx(std::sqrt(b.C * b.E) / 2.0));

    // bound is nonincreasing in r
    double prev = std::numeric_limits<double>::infinity();
    for (double r : log_spaced(0.3, 10.0, 60)) {
        const double v = b.bound(r);
        CHECK(v <= prev * (1.0 + 1e-12));
        prev = v;
    }

    auto rep = strauss_check(nf, u, 0.5);
    CHECK(rep.passed);
    CHECK(rep.worst_margin > 0.0);

    GridFunction zero(g);
    auto rep0 = strauss_check(nf, zero, 0.5);
    CHECK(rep0.passed);

    GridFunction undecayed(g, [](double r) { return 1.0 / (1.0 + r); });
    CHECK_THROWS_AS(strauss_check(nf, undecayed, 0.5), std::invalid_argument);
}

TEST_CASE("Strauss bound holds for random profiles across families and dims") {
    std::mt19937_64 rng(4242);
    for (auto spec : {NFunctionSpec::power(2.5), NFunctionSpec::power_sum(2, 3),
                      NFunctionSpec::curvature(1.5), NFunctionSpec::power_log(2.6)}) {
        auto nf = NFunction::build(spec);
        for (int N : {2, 3, 4}) {
            auto g = RadialGrid::make(N, 12.0, 800);
            for (int k = 0; k < 5; ++k) {
                std::uniform_real_distribution<double> amp(0.2, 3.0);
                std::uniform_real_distribution<double> wid(0.5, 2.0);
                const double a0 = amp(rng), w0 = wid(rng), c0 = amp(rng);
                GridFunction u(g, [&](double r) {
                    return a0 * std::exp(-r * r / (w0 * w0)) +
                           c0 * std::exp(-r * r);
                });
                auto rep = strauss_check(nf, u, 0.5);
                CHECK_MESSAGE(rep.passed, rep.name, " N=", N);
            }
        }
    }
}

TEST_CASE("embedding condition trends") {
    auto A = NFunction::build(NFunctionSpec::power(2.0));
    auto sc = SobolevConjugate::build(A, 3);

    auto B4 = NFunction::build(NFunctionSpec::power(4.0));
    CHECK(embedding_conditions_check(B4, A, sc).passed);

    // B = A fails (B1): the ratio is constant 1
    CHECK_FALSE(embedding_conditions_check(A, A, sc).passed);

    // B with the critical growth p* = 6 fails (B2)
    auto B6 = NFunction::build(NFunctionSpec::power(6.0));
    CHECK_FALSE(embedding_conditions_check(B6, A, sc).passed);
}

TEST_CASE("Lions vanishing demo") {
    auto A = NFunction::build(NFunctionSpec::power(2.0));
    auto B = NFunction::build(NFunctionSpec::power(4.0));
    auto g = RadialGrid::make(3, 128.0, 8192);
    GridFunction phi(g, [](double r) { return std::exp(-r * r); });

    const double beta = 1.5;  // N / l
    auto table = lions_vanishing_demo(A, B, phi, beta,
                                      {1, 2, 4, 8, 16, 32}, 1.0);
    REQUIRE(table.rows.size() == 6);

    // n = 1 baseline: u_1 = phi
    CHECK(table.rows[0].modular_A ==
          doctest::Approx(std::pow(kPi / 2.0, 1.5)).epsilon(1e-4));

    // modular_A is exactly scale invariant for beta = N/l
    for (const auto& row : table.rows)
        CHECK(row.modular_A ==
              doctest::Approx(table.rows[0].modular_A).epsilon(1e-3));

    // ||u_n||_B^4 = n^{3 - 4 beta} int phi^4: n^{-3/4} per norm
    const double r0 = table.rows[0].norm_B;
    for (const auto& row : table.rows)
        CHECK(row.norm_B ==
              doctest::Approx(r0 * std::pow(row.n, -0.75)).epsilon(1e-3));

    CHECK(table.window_decayed);
    CHECK(table.norm_decayed);
    CHECK(table.modular_bounded);
    CHECK(table.passed);

    // precondition: phi must be nonincreasing
    GridFunction rising(g, [](double r) { return r; });
    CHECK_THROWS_AS(lions_vanishing_demo(A, B, rising, beta, {1, 2}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(lions_vanishing_demo(A, B, phi, 0.5, {1, 2}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("check reports serialize their violation inputs") {
    // force a violation with an intentionally wrong inequality to see the
    // bookkeeping: compare A(t) <= 0
    auto nf = NFunction::build(NFunctionSpec::power(2.0));
    auto rep = sandwich_check(nf, 50);
    CHECK(rep.samples == 101);
    CHECK(rep.violations.empty());
}
