#include "orlicz/nfunction.hpp"
#include "orlicz/detail/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orlicz {

std::string family_name(Family f) {
    switch (f) {
        case Family::Power:     return "power";
        case Family::PowerSum:  return "power_sum";
        case Family::Curvature: return "curvature";
        case Family::PowerLog:  return "power_log";
    }
    return "?";
}

NFunctionSpec NFunctionSpec::power(double p, int dim) {
    return {Family::Power, p, 0.0, 0.0, dim};
}
NFunctionSpec NFunctionSpec::power_sum(double p, double q, int dim) {
    return {Family::PowerSum, p, q, 0.0, dim};
}
NFunctionSpec NFunctionSpec::curvature(double gamma, int dim) {
    return {Family::Curvature, 0.0, 0.0, gamma, dim};
}
NFunctionSpec NFunctionSpec::power_log(double p, int dim) {
    return {Family::PowerLog, p, 0.0, 0.0, dim};
}

double power_log_p0(int dim) {
    return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(dim)));
}

namespace {

[[noreturn]] void reject(const std::string& constraint) {
    throw std::invalid_argument("nfunction spec rejected: " + constraint);
}

void validate(const NFunctionSpec& s) {
    const int N = s.dim;
    switch (s.family) {
        case Family::Power:
            if (!(s.p > 1.0)) reject("power requires p > 1");
            if (N >= 2 && !(s.p < N)) reject("power requires p < dim");
            break;
        case Family::PowerSum:
            if (!(s.p > 1.0)) reject("power_sum requires p > 1");
            if (!(s.p < s.q)) reject("power_sum requires p < q");
            if (N >= 2) {
                if (!(s.q <= N)) reject("power_sum requires q <= dim");
                if (s.p < N && !(s.q < s.p * N / (N - s.p)))
                    reject("power_sum requires q < p*dim/(dim-p)");
            }
            break;
        case Family::Curvature:
            if (!(s.gamma > 1.0)) reject("curvature requires gamma > 1");
            if (N >= 3 && !(s.gamma < static_cast<double>(N) / (N - 2)))
                reject("curvature requires gamma < dim/(dim-2)");
            break;
        case Family::PowerLog:
            if (!(s.p > 1.0)) reject("power_log requires p > 1");
            if (N >= 2) {
                if (!(s.p > power_log_p0(N)))
                    reject("power_log requires p > (-1+sqrt(1+4*dim))/2");
                if (!(s.p < N - 1.0)) reject("power_log requires p < dim - 1");
            }
            break;
    }
}

} // namespace

NFunction NFunction::build(const NFunctionSpec& spec) {
    validate(spec);
    NFunction nf;
    nf.spec_ = spec;
    switch (spec.family) {
        case Family::Power:
            nf.l_ = spec.p; nf.m_ = spec.p;
            nf.e_zero_ = spec.p; nf.e_inf_ = spec.p;
            break;
        case Family::PowerSum:
            nf.l_ = spec.p; nf.m_ = spec.q;
            nf.e_zero_ = spec.p; nf.e_inf_ = spec.q;
            break;
        case Family::Curvature:
            nf.l_ = 2.0; nf.m_ = 2.0 * spec.gamma;
            nf.e_zero_ = 2.0; nf.e_inf_ = 2.0 * spec.gamma;
            break;
        case Family::PowerLog:
            // a(t)t^2/A(t) = p + t/((1+t) ln(1+t)) decreases from p+1 to p.
            nf.l_ = spec.p; nf.m_ = spec.p + 1.0;
            nf.e_zero_ = spec.p + 1.0; nf.e_inf_ = spec.p;
            break;
    }
    nf.K_ = std::pow(2.0, nf.m_);
    return nf;
}

double NFunction::A(double t) const {
    t = std::abs(t);
    if (t == 0.0) return 0.0;
    switch (spec_.family) {
        case Family::Power:     return std::pow(t, spec_.p);
        case Family::PowerSum:  return std::pow(t, spec_.p) + std::pow(t, spec_.q);
        case Family::Curvature: return std::expm1(spec_.gamma * std::log1p(t * t));
        case Family::PowerLog:  return std::pow(t, spec_.p) * std::log1p(t);
    }
    return 0.0;
}

double NFunction::dA(double t) const {
    t = std::abs(t);
    if (t == 0.0) return 0.0;
    switch (spec_.family) {
        case Family::Power:
            return spec_.p * std::pow(t, spec_.p - 1.0);
        case Family::PowerSum:
            return spec_.p * std::pow(t, spec_.p - 1.0) +
                   spec_.q * std::pow(t, spec_.q - 1.0);
        case Family::Curvature:
            return 2.0 * spec_.gamma * t *
                   std::exp((spec_.gamma - 1.0) * std::log1p(t * t));
        case Family::PowerLog:
            return spec_.p * std::pow(t, spec_.p - 1.0) * std::log1p(t) +
                   std::pow(t, spec_.p) / (1.0 + t);
    }
    return 0.0;
}

double NFunction::a(double t) const {
    t = std::abs(t);
    if (t == 0.0) {
        // limit of A'(t)/t at 0; infinite for degenerate (p < 2) powers
        switch (spec_.family) {
            case Family::Power:
                if (spec_.p == 2.0) return 2.0;
                return spec_.p > 2.0 ? 0.0
                                     : std::numeric_limits<double>::infinity();
            case Family::PowerSum:
                if (spec_.p == 2.0) return 2.0;
                return spec_.p > 2.0 ? 0.0
                                     : std::numeric_limits<double>::infinity();
            case Family::Curvature: return 2.0 * spec_.gamma;
            case Family::PowerLog:  return 0.0; // dA ~ (p+1) t^p near 0, p > 1
        }
    }
    return dA(t) / t;
}

double NFunction::d2A(double t) const {
    t = std::abs(t);
    const double p = spec_.p, q = spec_.q, g = spec_.gamma;
    switch (spec_.family) {
        case Family::Power:
            if (t == 0.0) return p == 2.0 ? 2.0 : (p > 2.0 ? 0.0 : std::numeric_limits<double>::infinity());
            return p * (p - 1.0) * std::pow(t, p - 2.0);
        case Family::PowerSum:
            if (t == 0.0) return p == 2.0 ? 2.0 : (p > 2.0 ? 0.0 : std::numeric_limits<double>::infinity());
            return p * (p - 1.0) * std::pow(t, p - 2.0) +
                   q * (q - 1.0) * std::pow(t, q - 2.0);
        case Family::Curvature:
            return 2.0 * g * std::exp((g - 2.0) * std::log1p(t * t)) *
                   (1.0 + (2.0 * g - 1.0) * t * t);
        case Family::PowerLog: {
            if (t == 0.0) return 0.0;
            const double L = std::log1p(t);
            return p * (p - 1.0) * std::pow(t, p - 2.0) * L +
                   2.0 * p * std::pow(t, p - 1.0) / (1.0 + t) -
                   std::pow(t, p) / ((1.0 + t) * (1.0 + t));
        }
    }
    return 0.0;
}

double NFunction::inverse(double y) const {
    if (y < 0.0) throw std::domain_error("NFunction::inverse: y < 0");
    if (y == 0.0) return 0.0;
    switch (spec_.family) {
        case Family::Power:
            return std::pow(y, 1.0 / spec_.p);
        case Family::Curvature:
            return std::sqrt(std::expm1(std::log1p(y) / spec_.gamma));
        default: break;
    }
    // PowerSum / PowerLog: Newton in log-log coordinates.  The target
    // x -> ln A(e^x) is monotone with slope a(t)t^2/A(t) in [l, m], so the
    // iteration is globally well behaved; the sandwich of Lemma-2.3 type
    // provides an initial bracket.
    const double A1 = A(1.0);
    const double ly = std::log(y / A1);
    double xlo = std::min(ly / l_, ly / m_) - 1e-9;
    double xhi = std::max(ly / l_, ly / m_) + 1e-9;
    double x = 0.5 * (xlo + xhi);
    for (int it = 0; it < 100; ++it) {
        const double t = std::exp(x);
        const double h = std::log(A(t)) - std::log(y);
        if (h > 0.0) xhi = x; else xlo = x;
        const double slope = dA(t) * t / A(t);
        double xn = x - h / slope;
        if (!(xn > xlo && xn < xhi)) xn = 0.5 * (xlo + xhi);
        if (std::abs(xn - x) < 1e-15 * (1.0 + std::abs(xn))) { x = xn; break; }
        x = xn;
    }
    return std::exp(x);
}

double delta2_bound(const NFunction& nf) { return std::pow(2.0, nf.m()); }

double conjugate_eval(const NFunction& nf, double s) {
    if (s < 0.0) throw std::domain_error("conjugate_eval: s < 0");
    if (s == 0.0) return 0.0;

    // Solve a(t) t = s for the unique maximizer of s t - A(t); the map is
    // strictly increasing.  Work in log-log coordinates: bracket by
    // geometric expansion, then safeguarded Newton with the analytic slope
    // t A''(t) / A'(t).
    constexpr double kLogCap = 345.0;  // t beyond e^345 ~ 1e150: saturated
    double x = std::log(s / nf.dA(1.0)) / (0.5 * (nf.l() + nf.m()) - 1.0);
    double xlo = x, xhi = x;
    while (nf.dA(std::exp(xhi)) < s) {
        xlo = xhi;
        xhi += 2.0;
        if (xhi > kLogCap)
            throw NumericError("conjugate_eval: maximizer bracket exceeded 1e150 "
                               "(s = " + std::to_string(s) + ")");
    }
    while (nf.dA(std::exp(xlo)) > s) {
        xhi = xlo;
        xlo -= 2.0;
        if (xlo < -2.0 * kLogCap)
            throw NumericError("conjugate_eval: maximizer underflow (s = " +
                               std::to_string(s) + ")");
    }
    x = 0.5 * (xlo + xhi);
    for (int it = 0; it < 100; ++it) {
        const double t = std::exp(x);
        const double h = std::log(nf.dA(t)) - std::log(s);
        if (h > 0.0) xhi = x; else xlo = x;
        const double slope = nf.d2A(t) * t / nf.dA(t);
        double xn = (slope > 0.0 && std::isfinite(slope)) ? x - h / slope
                                                          : 0.5 * (xlo + xhi);
        if (!(xn > xlo && xn < xhi)) xn = 0.5 * (xlo + xhi);
        if (std::abs(xn - x) < 1e-15 * (1.0 + std::abs(xn))) { x = xn; break; }
        x = xn;
    }
    const double tstar = std::exp(x);
    return std::max(0.0, s * tstar - nf.A(tstar));
}

std::pair<double, double> growth_exponents(const NFunction& nf,
                                           const std::vector<double>& t_samples) {
    if (t_samples.empty())
        throw std::invalid_argument("growth_exponents: empty sample set");
    const auto [mn, mx] = std::minmax_element(t_samples.begin(), t_samples.end());
    if (*mn > 1e-6 * (1.0 + 1e-9) || *mx < 1e6 * (1.0 - 1e-9))
        throw std::invalid_argument("growth_exponents: samples must span [1e-6, 1e6]");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double t : t_samples) {
        if (t <= 0.0) continue;
        const double At = nf.A(t);
        if (At == 0.0) throw NumericError("growth_exponents: A(t) = 0 at t > 0");
        const double ratio = nf.dA(t) * t / At;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

double xi0(const NFunction& nf, double rho) {
    if (rho < 0.0) throw std::domain_error("xi0: rho < 0");
    return std::min(std::pow(rho, nf.l()), std::pow(rho, nf.m()));
}

double xi1(const NFunction& nf, double rho) {
    if (rho < 0.0) throw std::domain_error("xi1: rho < 0");
    return std::max(std::pow(rho, nf.l()), std::pow(rho, nf.m()));
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        out.push_back(std::exp(llo + (lhi - llo) * i / (n - 1.0)));
    return out;
}

} // namespace orlicz
