#include "doctest.h"
#include "orlicz/sobolev_conjugate.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace orlicz;

TEST_CASE("power case matches the closed form of the defining integral") {
    auto nf = NFunction::build(NFunctionSpec::power(2.0, 3));
    auto sc = SobolevConjugate::build(nf, 3);
    CHECK(sc.l_star() == doctest::Approx(6.0));
    CHECK(sc.m_star() == doctest::Approx(6.0));

    // G(t) = p* t^{1/p*}, A*(t) = (t/p*)^{p*}
    CHECK(sc.inverse(1.0) == doctest::Approx(6.0));
    CHECK(sc.eval(6.0) == doctest::Approx(1.0));
    CHECK(sc.eval(0.0) == 0.0);
    CHECK(sc.inverse(0.0) == 0.0);

    for (double t : log_spaced(0.1, 10.0, 100)) {
        const double expect = std::pow(t / 6.0, 6.0);
        CHECK(sc.eval_tabulated(t) == doctest::Approx(expect).epsilon(1e-4));
        CHECK(sc.eval(t) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("derivative via the inverse relation, power case") {
    auto nf = NFunction::build(NFunctionSpec::power(2.0, 3));
    auto sc = SobolevConjugate::build(nf, 3);
    CHECK(sc.derivative(6.0) == doctest::Approx(1.0));
    const double ratio = sc.derivative(6.0) * 6.0 / sc.eval(6.0);
    CHECK(ratio == doctest::Approx(6.0));
    CHECK(sc.derivative(1e-9) == doctest::Approx(0.0));
}

TEST_CASE("tabulated path matches the closed form for a non-integer power") {
    auto nf = NFunction::build(NFunctionSpec::power(2.5, 4));
    auto sc = SobolevConjugate::build(nf, 4);
    const double pstar = 2.5 * 4 / (4 - 2.5);
    for (double t : log_spaced(1e-2, 1e2, 60)) {
        const double expect = std::pow(t / pstar, pstar);
        CHECK(sc.eval_tabulated(t) == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("inverse round-trip on the tabulated range") {
    std::vector<std::pair<NFunctionSpec, int>> cases = {
        {NFunctionSpec::power_sum(2.0, 3.0, 4), 4},
        {NFunctionSpec::curvature(1.5, 4), 4},
        {NFunctionSpec::power_log(2.6, 4), 4},
    };
    for (auto& [spec, N] : cases) {
        auto nf = NFunction::build(spec);
        auto sc = SobolevConjugate::build(nf, N);
        for (double t : log_spaced(sc.table_min() * 1.01, sc.table_max() * 0.99, 80)) {
            const double v = sc.eval(t);
            CHECK(sc.inverse(v) == doctest::Approx(t).epsilon(1e-6));
        }
    }
}

TEST_CASE("growth ratio of A* stays inside [l*, m*]") {
    std::vector<std::pair<NFunctionSpec, int>> cases = {
        {NFunctionSpec::power_sum(2.0, 3.0, 4), 4},
        {NFunctionSpec::curvature(1.5, 4), 4},
        {NFunctionSpec::power_log(2.6, 4), 4},
    };
    for (auto& [spec, N] : cases) {
        auto nf = NFunction::build(spec);
        auto sc = SobolevConjugate::build(nf, N);
        for (double t : log_spaced(1e-2, 1e2, 120)) {
            const double ratio = sc.derivative(t) * t / sc.eval(t);
            CHECK(ratio >= sc.l_star() * (1.0 - 1e-5));
            CHECK(ratio <= sc.m_star() * (1.0 + 1e-5));
        }
    }
}

TEST_CASE("degenerate dimensions are rejected") {
    // growth at zero reaches the dimension: integral diverges at 0
    auto pl = NFunction::build(NFunctionSpec::power_log(2.6));
    CHECK_THROWS_AS(SobolevConjugate::build(pl, 3), NumericError);
    auto cv = NFunction::build(NFunctionSpec::curvature(1.5));
    CHECK_THROWS_AS(SobolevConjugate::build(cv, 2), NumericError);
    // growth at infinity above the dimension: A* jumps to +inf
    auto wide = NFunction::build(NFunctionSpec::power_sum(2.0, 5.0));
    CHECK_THROWS_AS(SobolevConjugate::build(wide, 3), NumericError);
}

TEST_CASE("borderline m == N gives an exponential-type conjugate") {
    auto nf = NFunction::build(NFunctionSpec::power_sum(2.0, 3.0, 3));
    auto sc = SobolevConjugate::build(nf, 3);
    CHECK(sc.l_star() == doctest::Approx(6.0));
    CHECK(std::isinf(sc.m_star()));

    // xi2/xi3 keep their limit semantics with an infinite exponent
    CHECK(xi2(sc, 0.5) == 0.0);
    CHECK(xi3(sc, 0.5) == doctest::Approx(std::pow(0.5, 6.0)));
    CHECK(xi2(sc, 2.0) == doctest::Approx(64.0));
    CHECK(std::isinf(xi3(sc, 2.0)));

    // ratio is still bounded below by l* on the tabulated range
    for (double t : log_spaced(1e-2, 1e2, 60)) {
        const double ratio = sc.derivative(t) * t / sc.eval(t);
        CHECK(ratio >= sc.l_star() * (1.0 - 1e-5));
    }
}

TEST_CASE("out-of-table arguments are flagged and stay consistent") {
    auto nf = NFunction::build(NFunctionSpec::power_sum(2.0, 3.0, 4));
    auto sc = SobolevConjugate::build(nf, 4);
    bool flagged = false;
    const double t = sc.table_max() * 4.0;
    const double d = sc.derivative(t, &flagged);
    CHECK(flagged);
    const double ratio = d * t / sc.eval(t);
    CHECK(ratio >= sc.l_star() * (1.0 - 1e-9));
    CHECK(ratio <= sc.m_star() * (1.0 + 1e-9));

    flagged = false;
    sc.derivative(0.5 * (sc.table_min() + sc.table_max()), &flagged);
    CHECK_FALSE(flagged);
}

TEST_CASE("scaling envelopes sandwich A*") {
    std::mt19937_64 rng(5);
    std::vector<std::pair<NFunctionSpec, int>> cases = {
        {NFunctionSpec::power(2.5, 4), 4},
        {NFunctionSpec::power_sum(2.0, 3.0, 4), 4},
        {NFunctionSpec::power_log(2.6, 4), 4},
    };
    for (auto& [spec, N] : cases) {
        auto nf = NFunction::build(spec);
        auto sc = SobolevConjugate::build(nf, N);
        for (int i = 0; i < 200; ++i) {
            const double rho = testutil::log_uniform(rng, 0.1, 10.0);
            const double t = testutil::log_uniform(rng, 1e-1, 1e1);
            const double mid = sc.eval(rho * t);
            CHECK(xi2(sc, rho) * sc.eval(t) <= mid * (1.0 + 1e-6));
            CHECK(mid <= xi3(sc, rho) * sc.eval(t) * (1.0 + 1e-6));
        }
    }
}
