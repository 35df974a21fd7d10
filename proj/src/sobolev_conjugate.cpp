#include "orlicz/sobolev_conjugate.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace orlicz {

namespace {

constexpr double kTauFloor = 1e-290;  // lowest tabulated A* value
constexpr double kTauCap = 1e250;     // highest tabulated A* value
constexpr double kTargetTLo = 1e-4;   // desired table coverage in t
constexpr double kTargetTHi = 1e3;
constexpr int kPanelsPerDecade = 8;

// 8-point Gauss-Legendre abscissae/weights on [-1, 1]
constexpr double kGlX[8] = {-0.9602898564975363, -0.7966664774136267,
                            -0.5255324099163290, -0.1834346424956498,
                            0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975363};
constexpr double kGlW[8] = {0.1012285362903763, 0.2223810344533745,
                            0.3137066458778873, 0.3626837833783620,
                            0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

// local power exponent of A at A^{-1}(tau), i.e. a(t)t^2/A(t) there
double local_exponent(const NFunction& nf, double tau) {
    const double t = nf.inverse(tau);
    return nf.dA(t) * t / tau;
}

// analytic head  \int_0^tau A^{-1}(s) s^{-1-1/N} ds  assuming the local
// power law A^{-1}(s) ~ A^{-1}(tau) (s/tau)^{1/e} below tau
double head_integral(const NFunction& nf, int N, double tau) {
    const double e = local_exponent(nf, tau);
    const double beta = 1.0 / e - 1.0 / N;
    if (!(beta > 0.0))
        throw NumericError("sobolev_conjugate: integrand not integrable at 0");
    return nf.inverse(tau) * std::pow(tau, -1.0 / N) / beta;
}

} // namespace

SobolevConjugate SobolevConjugate::build(const NFunction& nf, int N) {
    if (N < 2) throw std::invalid_argument("sobolev_conjugate: dim must be >= 2");
    const double e0 = nf.growth_at_zero();
    const double einf = nf.growth_at_infinity();
    if (!(e0 < N))
        throw NumericError("sobolev_conjugate: defining integral diverges at 0 "
                           "(growth exponent at 0 is " + std::to_string(e0) +
                           " >= dim " + std::to_string(N) + ")");
    if (einf > N)
        throw NumericError("sobolev_conjugate: integral over [1,inf) converges "
                           "(growth exponent at infinity exceeds dim); A* degenerate");

    SobolevConjugate sc(nf, N);
    sc.l_star_ = nf.l() * N / (N - nf.l());
    sc.m_star_ = nf.m() < N ? nf.m() * N / (N - nf.m())
                            : std::numeric_limits<double>::infinity();
    if (nf.spec().family == Family::Power) {
        sc.power_closed_form_ = true;
        sc.pstar_ = sc.l_star_;
    }

    // lower end of the tau grid: far enough down that the analytic head is
    // essentially exact and the t-range target is covered
    double tau_lo = 1e-12;
    while (tau_lo > kTauFloor && head_integral(nf, N, tau_lo) > kTargetTLo)
        tau_lo *= 1e-3;

    std::vector<double> log_t, log_tau;
    double g = head_integral(nf, N, tau_lo);
    double tau = tau_lo;
    log_t.push_back(std::log(g));
    log_tau.push_back(std::log(tau));

    const double dx = std::log(10.0) / kPanelsPerDecade;
    double x = std::log(tau);
    while (g < kTargetTHi && tau < kTauCap) {
        // panel [x, x+dx] in s = e^x:  integrand A^{-1}(e^x) e^{-x/N}
        double sum = 0.0;
        for (int j = 0; j < 8; ++j) {
            const double xj = x + 0.5 * dx * (1.0 + kGlX[j]);
            const double s = std::exp(xj);
            sum += kGlW[j] * nf.inverse(s) * std::exp(-xj / N);
        }
        g += 0.5 * dx * sum;
        x += dx;
        tau = std::exp(x);
        log_t.push_back(std::log(g));
        log_tau.push_back(std::log(tau));
    }

    sc.t_min_ = std::exp(log_t.front());
    sc.t_max_ = std::exp(log_t.back());
    sc.v_min_ = std::exp(log_tau.front());
    sc.v_max_ = std::exp(log_tau.back());

    // asymptotic power exponents of A* at its range ends; the zero end is
    // governed by the growth of A at 0, the far end by the growth at
    // infinity (edge slope when that conjugate exponent is infinite)
    sc.exp_below_ = e0 * N / (N - e0);
    sc.exp_above_ = einf < N ? einf * N / (N - einf)
                             : (log_tau.back() - log_tau[log_tau.size() - 2]) /
                                   (log_t.back() - log_t[log_t.size() - 2]);

    sc.log_astar_ = MonotoneInterp(log_t, log_tau);
    std::vector<double> ls = log_tau, lt = log_t;
    sc.log_ginv_ = MonotoneInterp(std::move(ls), std::move(lt));
    return sc;
}

double SobolevConjugate::eval_tabulated(double t) const {
    t = std::abs(t);
    if (t == 0.0) return 0.0;
    if (t < t_min_) return v_min_ * std::pow(t / t_min_, exp_below_);
    if (t > t_max_) return v_max_ * std::pow(t / t_max_, exp_above_);
    return std::exp(log_astar_(std::log(t)));
}

double SobolevConjugate::eval(double t) const {
    if (power_closed_form_) {
        t = std::abs(t);
        return std::pow(t / pstar_, pstar_);
    }
    return eval_tabulated(t);
}

double SobolevConjugate::inverse(double s) const {
    if (s < 0.0) throw std::domain_error("SobolevConjugate::inverse: s < 0");
    if (s == 0.0) return 0.0;
    if (power_closed_form_) return pstar_ * std::pow(s, 1.0 / pstar_);
    if (s < v_min_) return t_min_ * std::pow(s / v_min_, 1.0 / exp_below_);
    if (s > v_max_) return t_max_ * std::pow(s / v_max_, 1.0 / exp_above_);
    return std::exp(log_ginv_(std::log(s)));
}

double SobolevConjugate::derivative(double t, bool* extrapolated) const {
    t = std::abs(t);
    if (extrapolated) *extrapolated = false;
    if (t == 0.0) return 0.0;
    if (!power_closed_form_ && !in_table(t)) {
        if (extrapolated) *extrapolated = true;
        const double e = t < t_min_ ? exp_below_ : exp_above_;
        return e * eval_tabulated(t) / t;
    }
    const double v = eval(t);
    if (v == 0.0) return 0.0;
    return std::pow(v, (dim_ + 1.0) / dim_) / base_.inverse(v);
}

double a_star_eval(const SobolevConjugate& sc, double t, bool* extrapolated) {
    return sc.derivative(t, extrapolated);
}

double xi2(const SobolevConjugate& sc, double rho) {
    if (rho < 0.0) throw std::domain_error("xi2: rho < 0");
    return std::min(std::pow(rho, sc.l_star()), std::pow(rho, sc.m_star()));
}

double xi3(const SobolevConjugate& sc, double rho) {
    if (rho < 0.0) throw std::domain_error("xi3: rho < 0");
    return std::max(std::pow(rho, sc.l_star()), std::pow(rho, sc.m_star()));
}

} // namespace orlicz
