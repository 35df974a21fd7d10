#include "doctest.h"
#include "orlicz/nfunction.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace orlicz;

namespace {

std::vector<NFunction> builtin_families() {
    return {
        NFunction::build(NFunctionSpec::power(2.5)),
        NFunction::build(NFunctionSpec::power_sum(2.0, 3.0)),
        NFunction::build(NFunctionSpec::curvature(1.5)),
        NFunction::build(NFunctionSpec::power_log(2.6)),
    };
}

} // namespace

TEST_CASE("builtin closed forms") {
    auto p2 = NFunction::build(NFunctionSpec::power(2.0));
    CHECK(p2.A(1.0) == doctest::Approx(1.0));
    CHECK(p2.A(-3.0) == doctest::Approx(9.0));
    CHECK(p2.a(1.7) == doctest::Approx(2.0));
    CHECK(p2.l() == 2.0);
    CHECK(p2.m() == 2.0);

    auto cv = NFunction::build(NFunctionSpec::curvature(2.0));
    CHECK(cv.A(1.0) == doctest::Approx(3.0));
    CHECK(cv.dA(1.0) == doctest::Approx(8.0));  // 2*gamma*t*(1+t^2)^(gamma-1)
    CHECK(cv.A(2.0) == doctest::Approx(24.0));

    auto pl = NFunction::build(NFunctionSpec::power_log(2.6));
    CHECK(pl.l() == doctest::Approx(2.6));
    CHECK(pl.m() == doctest::Approx(3.6));
}

TEST_CASE("spec validation rejects out-of-range parameters") {
    CHECK_THROWS_AS(NFunction::build(NFunctionSpec::power(1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(NFunction::build(NFunctionSpec::power_sum(3.0, 2.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(NFunction::build(NFunctionSpec::curvature(0.9)),
                    std::invalid_argument);
    // dimension-coupled ranges apply once dim is set
    CHECK_THROWS_AS(NFunction::build(NFunctionSpec::power(2.5, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(NFunction::build(NFunctionSpec::power_log(2.6, 3)),
                    std::invalid_argument);
    CHECK_NOTHROW(NFunction::build(NFunctionSpec::power_log(2.6, 4)));
    CHECK_NOTHROW(NFunction::build(NFunctionSpec::power_sum(2.0, 3.0, 3)));
    CHECK_THROWS_AS(NFunction::build(NFunctionSpec::curvature(2.5, 4)),
                    std::invalid_argument);
}

TEST_CASE("growth ratio stays inside [l, m] on all families") {
    for (const auto& nf : builtin_families()) {
        for (double t : log_spaced(1e-6, 1e6, 400)) {
            const double ratio = nf.dA(t) * t / nf.A(t);
            CHECK(ratio >= nf.l() * (1.0 - 1e-12));
            CHECK(ratio <= nf.m() * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("growth_exponents estimator brackets the analytic values") {
    auto samples = log_spaced(1e-6, 1e6, 2000);

    auto p3 = NFunction::build(NFunctionSpec::power(3.0));
    auto [l3, m3] = growth_exponents(p3, samples);
    CHECK(l3 == doctest::Approx(3.0));
    CHECK(m3 == doctest::Approx(3.0));

    auto ps = NFunction::build(NFunctionSpec::power_sum(2.0, 3.0));
    auto [lps, mps] = growth_exponents(ps, samples);
    CHECK(lps == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(mps == doctest::Approx(3.0).epsilon(1e-4));

    auto cv = NFunction::build(NFunctionSpec::curvature(1.5));
    auto [lcv, mcv] = growth_exponents(cv, samples);
    CHECK(lcv == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(mcv == doctest::Approx(3.0).epsilon(1e-4));

    // the power_log lower exponent is approached only logarithmically
    auto pl = NFunction::build(NFunctionSpec::power_log(2.6));
    auto [lpl, mpl] = growth_exponents(pl, samples);
    CHECK(lpl >= pl.l());
    CHECK(lpl <= pl.l() + 0.1);
    CHECK(mpl == doctest::Approx(pl.m()).epsilon(1e-4));

    CHECK_THROWS_AS(growth_exponents(p3, log_spaced(1e-3, 1e3, 10)),
                    std::invalid_argument);
}

TEST_CASE("doubling constant") {
    auto p2 = NFunction::build(NFunctionSpec::power(2.0));
    CHECK(delta2_bound(p2) == doctest::Approx(4.0));
    auto ps = NFunction::build(NFunctionSpec::power_sum(2.0, 3.0));
    CHECK(delta2_bound(ps) == doctest::Approx(8.0));

    for (const auto& nf : builtin_families())
        for (double t : log_spaced(1e-8, 1e8, 300))
            CHECK(nf.A(2.0 * t) <= nf.K() * nf.A(t) * (1.0 + 1e-12));
}

TEST_CASE("conjugate point values") {
    auto p2 = NFunction::build(NFunctionSpec::power(2.0));
    CHECK(conjugate_eval(p2, 4.0) == doctest::Approx(4.0));
    CHECK(conjugate_eval(p2, 0.0) == 0.0);

    auto cv = NFunction::build(NFunctionSpec::curvature(2.0));
    CHECK(conjugate_eval(cv, 8.0) == doctest::Approx(5.0));

    CHECK_THROWS_AS(conjugate_eval(p2, -1.0), std::domain_error);
}

TEST_CASE("power conjugate matches the analytic formula") {
    for (double p : {1.7, 2.0, 2.5, 3.5}) {
        auto nf = NFunction::build(NFunctionSpec::power(p));
        const double c = (p - 1.0) * std::pow(p, -p / (p - 1.0));
        for (double s : log_spaced(1e-3, 1e3, 120)) {
            const double expect = c * std::pow(s, p / (p - 1.0));
            CHECK(conjugate_eval(nf, s) ==
                  doctest::Approx(expect).epsilon(1e-8));
        }
    }
}

TEST_CASE("conjugate agrees with brute-force maximization") {
    for (const auto& nf : builtin_families()) {
        auto f = [&](double t) { return nf.A(t); };
        for (double s : log_spaced(1e-2, 1e2, 25)) {
            const double brute = testutil::brute_conjugate(f, s);
            CHECK(conjugate_eval(nf, s) ==
                  doctest::Approx(brute).epsilon(1e-6));
        }
    }
}

TEST_CASE("Young inequality with equality on the tangency curve") {
    std::mt19937_64 rng(71);
    for (const auto& nf : builtin_families()) {
        for (int i = 0; i < 300; ++i) {
            const double t = testutil::log_uniform(rng, 1e-4, 1e4);
            const double s = testutil::log_uniform(rng, 1e-4, 1e4);
            const double lhs = s * t;
            const double rhs = nf.A(t) + conjugate_eval(nf, s);
            CHECK(lhs <= rhs * (1.0 + 1e-10) + 1e-12);

            const double se = nf.dA(t);
            const double gap = nf.A(t) + conjugate_eval(nf, se) - se * t;
            CHECK(std::abs(gap) <= 1e-8 * std::max(1.0, se * t));
        }
    }
}

TEST_CASE("Legendre round-trip recovers A") {
    for (const auto& nf : builtin_families()) {
        auto tilde = [&](double s) { return conjugate_eval(nf, s); };
        for (double t : log_spaced(1e-3, 1e3, 30)) {
            const double back = testutil::brute_conjugate(tilde, t, 1e-9, 1e12);
            CHECK(back == doctest::Approx(nf.A(t)).epsilon(1e-6));
        }
    }
}

TEST_CASE("conjugate of the density stays under A(2t)") {
    for (const auto& nf : builtin_families()) {
        CHECK(conjugate_eval(nf, nf.dA(0.0)) == 0.0);
        for (double t : log_spaced(1e-6, 1e6, 200)) {
            const double lhs = conjugate_eval(nf, nf.dA(t));
            const double rhs = nf.A(2.0 * t);
            CHECK(lhs <= rhs * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("inverse consistency") {
    auto p2 = NFunction::build(NFunctionSpec::power(2.0));
    CHECK(p2.inverse(9.0) == doctest::Approx(3.0));
    CHECK(p2.inverse(0.0) == 0.0);
    auto cv = NFunction::build(NFunctionSpec::curvature(2.0));
    CHECK(cv.inverse(3.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(p2.inverse(-1.0), std::domain_error);

    for (const auto& nf : builtin_families()) {
        double prev = 0.0;
        for (double y : log_spaced(1e-6, 1e6, 200)) {
            const double t = nf.inverse(y);
            CHECK(nf.A(t) == doctest::Approx(y).epsilon(1e-9));
            CHECK(t >= prev);  // monotone in y
            prev = t;
        }
    }
}

TEST_CASE("scaling envelopes") {
    auto p2 = NFunction::build(NFunctionSpec::power(2.0));
    CHECK(xi0(p2, 1.0) == 1.0);
    CHECK(xi1(p2, 1.0) == 1.0);
    CHECK(xi0(p2, 3.0) == doctest::Approx(9.0));

    auto ps = NFunction::build(NFunctionSpec::power_sum(2.0, 3.0));
    CHECK(xi0(ps, 0.5) == doctest::Approx(0.125));
    CHECK(xi1(ps, 0.5) == doctest::Approx(0.25));

    // xi0(rho) A(t) <= A(rho t) <= xi1(rho) A(t)
    std::mt19937_64 rng(12);
    for (const auto& nf : builtin_families()) {
        for (int i = 0; i < 300; ++i) {
            const double rho = testutil::log_uniform(rng, 1e-3, 1e3);
            const double t = testutil::log_uniform(rng, 1e-3, 1e3);
            const double mid = nf.A(rho * t);
            CHECK(xi0(nf, rho) * nf.A(t) <= mid * (1.0 + 1e-12));
            CHECK(mid <= xi1(nf, rho) * nf.A(t) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("power_log p0 threshold") {
    CHECK(power_log_p0(3) == doctest::Approx(0.5 * (-1.0 + std::sqrt(13.0))));
    CHECK(power_log_p0(4) == doctest::Approx(0.5 * (-1.0 + std::sqrt(17.0))));
}
