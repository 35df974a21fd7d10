#include "orlicz/checks.hpp"
#include "orlicz/detail/accumulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace orlicz {

using detail::Accumulator;

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

} // namespace

CheckReport young_check(const NFunction& nf, int sample_count,
                        std::uint64_t seed) {
    Accumulator acc("young:" + family_name(nf.spec().family));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < sample_count; ++i) {
        const double t = log_uniform(rng, 1e-4, 1e4);
        const double s = log_uniform(rng, 1e-4, 1e4);
        acc.add({s, t}, s * t, nf.A(t) + conjugate_eval(nf, s));

        // tangency: equality at s = a(t) t within 1e-8 relative
        const double se = nf.dA(t);
        const double gap = std::abs(nf.A(t) + conjugate_eval(nf, se) - se * t);
        acc.add({se, t}, gap, 1e-8 * std::max(1.0, se * t));
    }
    // boundary case t = 0: 0 <= Atilde(s)
    acc.add({1.0, 0.0}, 0.0, conjugate_eval(nf, 1.0));
    return acc.finish();
}

CheckReport lemma_f0_check(const NFunction& nf, int sample_count) {
    Accumulator acc("lemma_f0:" + family_name(nf.spec().family));
    acc.add({0.0}, conjugate_eval(nf, nf.dA(0.0)), nf.A(0.0));
    for (double t : log_spaced(1e-6, 1e6, sample_count))
        acc.add({t}, conjugate_eval(nf, nf.dA(t)), nf.A(2.0 * t));
    return acc.finish();
}

CheckReport sandwich_check(const NFunction& nf, int sample_count,
                           std::uint64_t seed) {
    Accumulator acc("sandwich_f1:" + family_name(nf.spec().family));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < sample_count; ++i) {
        const double rho = log_uniform(rng, 1e-3, 1e3);
        const double t = log_uniform(rng, 1e-3, 1e3);
        const double mid = nf.A(rho * t);
        acc.add({rho, t}, xi0(nf, rho) * nf.A(t), mid);
        acc.add({rho, t}, mid, xi1(nf, rho) * nf.A(t));
    }
    acc.add({1.0, 1.0}, xi0(nf, 1.0) * nf.A(1.0), nf.A(1.0));
    return acc.finish();
}

namespace {

// sampling box for A*-based checks: keep t and rho*t inside the table
std::pair<double, double> f2_sample_range(const SobolevConjugate& sc,
                                          double rho_max) {
    double lo = std::max(1e-2, sc.table_min() * rho_max * 1.05);
    double hi = std::min(1e2, sc.table_max() / (rho_max * 1.05));
    if (!(lo < hi)) { lo = sc.table_min() * rho_max; hi = sc.table_max() / rho_max; }
    return {lo, hi};
}

} // namespace

CheckReport sandwich_check(const SobolevConjugate& sc, int sample_count,
                           std::uint64_t seed) {
    Accumulator acc("sandwich_f2:" + family_name(sc.base().spec().family));
    std::mt19937_64 rng(seed);
    const double rho_max = 10.0;
    const auto [t_lo, t_hi] = f2_sample_range(sc, rho_max);
    for (int i = 0; i < sample_count; ++i) {
        // rho away from 1: the inequality is an equality there and the
        // tabulated A* carries ~1e-7 noise
        double rho = log_uniform(rng, 1.0 / rho_max, rho_max);
        if (std::abs(rho - 1.0) < 0.01) rho = rho < 1.0 ? 0.98 : 1.02;
        const double t = log_uniform(rng, t_lo, t_hi);
        const double mid = sc.eval(rho * t);
        acc.add({rho, t}, xi2(sc, rho) * sc.eval(t), mid);
        acc.add({rho, t}, mid, xi3(sc, rho) * sc.eval(t));
    }
    acc.add({1.0, 1.0}, xi2(sc, 1.0) * sc.eval(1.0), sc.eval(1.0));
    return acc.finish();
}

CheckReport f3_ratio_check(const SobolevConjugate& sc, int sample_count) {
    // slack covers the quadrature/interpolation error of the A* table
    const double tol = 1e-5 * (1.0 + sc.l_star());
    Accumulator acc("f3_ratio:" + family_name(sc.base().spec().family));
    const double t_lo = std::max(1e-2, sc.table_min() * 1.05);
    const double t_hi = std::min(1e2, sc.table_max() * 0.95);
    for (double t : log_spaced(t_lo, t_hi, sample_count)) {
        const double ratio = a_star_eval(sc, t) * t / sc.eval(t);
        acc.add({t}, sc.l_star() - tol, ratio);
        if (std::isfinite(sc.m_star()))
            acc.add({t}, ratio, sc.m_star() + tol);
    }
    // extrapolation probes: flagged, but the power-law tails keep the ratio
    // inside [l*, m*] by construction
    for (double t : {sc.table_min() * 0.5, sc.table_max() * 2.0}) {
        bool flagged = false;
        const double ratio = a_star_eval(sc, t, &flagged) * t / sc.eval(t);
        acc.add({t, flagged ? 1.0 : 0.0}, sc.l_star() - tol, ratio);
        if (std::isfinite(sc.m_star()))
            acc.add({t, flagged ? 1.0 : 0.0}, ratio, sc.m_star() + tol);
    }
    return acc.finish();
}

double StraussBound::bound(double r) const {
    return nf->inverse(C * E / std::pow(r, dim - 1));
}

StraussBound StraussBound::make(const NFunction& nf, const GridFunction& u) {
    StraussBound b;
    b.nf = &nf;
    b.dim = u.grid->dim();
    b.C = (nf.K() + 1.0) / u.grid->surface_area();
    b.E = modular(nf, u) + modular(nf, radial_gradient(u));
    return b;
}

CheckReport strauss_check(const NFunction& nf, const GridFunction& u,
                          double r_min) {
    const auto b = StraussBound::make(nf, u);
    if (truncation_tail_estimate(nf, u) > 1e-6 * std::max(1.0, b.E))
        throw std::invalid_argument(
            "strauss_check: profile has not decayed at R_max");
    Accumulator acc("strauss:" + family_name(nf.spec().family));
    const auto& r = u.grid->nodes();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (r[i] < r_min) continue;
        acc.add({r[i]}, std::abs(u.values[i]), b.bound(r[i]));
    }
    return acc.finish();
}

CheckReport embedding_conditions_check(const NFunction& B, const NFunction& A,
                                       const SobolevConjugate& sc) {
    Accumulator acc("embedding:" + family_name(B.spec().family) + "_vs_" +
                    family_name(A.spec().family));
    // (B1): B/A on t decreasing over four decades
    {
        auto ts = log_spaced(1e-4, 1.0, 41);
        std::reverse(ts.begin(), ts.end());  // decreasing toward 0
        std::vector<double> ratio;
        for (double t : ts) ratio.push_back(B.A(t) / A.A(t));
        for (std::size_t k = 1; k < ratio.size(); ++k)
            acc.add({ts[k]}, ratio[k], ratio[k - 1]);
        acc.add({ts.back()}, ratio.back(), 1e-3 * ratio.front());
    }
    // (B2): B/A* on t increasing over four decades
    {
        auto ts = log_spaced(1.0, 1e4, 41);
        std::vector<double> ratio;
        for (double t : ts) ratio.push_back(B.A(t) / sc.eval(t));
        for (std::size_t k = 1; k < ratio.size(); ++k)
            acc.add({ts[k]}, ratio[k], ratio[k - 1]);
        acc.add({ts.back()}, ratio.back(), 1e-3 * ratio.front());
    }
    return acc.finish();
}

double modular_window(const NFunction& nf, const GridFunction& u, double R) {
    const RadialGrid& g = *u.grid;
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size() && g.nodes()[i] <= R; ++i)
        sum += g.mass(i) * nf.A(std::abs(u.values[i]));
    return sum;
}

double interp_value(const GridFunction& u, double r) {
    const auto& nodes = u.grid->nodes();
    if (r <= nodes.front()) return u.values.front();
    if (r >= nodes.back()) return 0.0;  // zero extension
    const auto it = std::upper_bound(nodes.begin(), nodes.end(), r);
    const std::size_t k = static_cast<std::size_t>(it - nodes.begin()) - 1;
    const double w = (r - nodes[k]) / (nodes[k + 1] - nodes[k]);
    return (1.0 - w) * u.values[k] + w * u.values[k + 1];
}

LionsTable lions_vanishing_demo(const NFunction& A, const NFunction& B,
                                const GridFunction& phi, double beta,
                                const std::vector<double>& n_list, double R) {
    for (std::size_t i = 1; i < phi.size(); ++i)
        if (phi.values[i] > phi.values[i - 1] + 1e-12)
            throw std::invalid_argument(
                "lions_vanishing_demo: phi must be radially nonincreasing");
    const int N = phi.grid->dim();
    if (beta < static_cast<double>(N) / A.l() - 1e-12)
        throw std::invalid_argument("lions_vanishing_demo: beta below N/l");

    LionsTable out;
    for (double n : n_list) {
        GridFunction un(phi.grid);
        const double amp = std::pow(n, -beta);
        for (std::size_t i = 0; i < un.size(); ++i)
            un.values[i] = amp * interp_value(phi, phi.grid->nodes()[i] / n);
        LionsRow row;
        row.n = n;
        row.window = modular_window(A, un, R);
        row.modular_A = modular(A, un);
        row.norm_B = luxemburg_norm(B, un);
        row.sobolev_modular = row.modular_A + modular(A, radial_gradient(un));
        out.rows.push_back(row);
    }

    const auto& rows = out.rows;
    bool win_mono = true, nrm_mono = true;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        win_mono &= rows[k].window <= rows[k - 1].window * (1.0 + 1e-9);
        nrm_mono &= rows[k].norm_B <= rows[k - 1].norm_B * (1.0 + 1e-9);
    }
    double sob_max = 0.0;
    for (const auto& r : rows) sob_max = std::max(sob_max, r.sobolev_modular);
    out.window_decayed = win_mono && !rows.empty() &&
                         rows.back().window <= 0.1 * rows.front().window;
    out.norm_decayed = nrm_mono && !rows.empty() &&
                       rows.back().norm_B <= 0.1 * rows.front().norm_B;
    out.modular_bounded =
        !rows.empty() && sob_max <= 1.05 * rows.front().sobolev_modular;
    out.passed = out.window_decayed && out.norm_decayed && out.modular_bounded;
    return out;
}

} // namespace orlicz
