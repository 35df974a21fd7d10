#include "orlicz/solver.hpp"
#include "orlicz/detail/accumulator.hpp"
#include "orlicz/detail/banded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orlicz {

double NonlinearitySpec::f(double t) const {
    if (t == 0.0) return 0.0;
    return std::pow(std::abs(t), q - 2.0) * t;
}

double NonlinearitySpec::F(double t) const {
    return std::pow(std::abs(t), q) / q;
}

double NonlinearitySpec::df(double t) const {
    if (t == 0.0) return q > 2.0 ? 0.0 : (q == 2.0 ? 1.0 : std::numeric_limits<double>::infinity());
    return (q - 1.0) * std::pow(std::abs(t), q - 2.0);
}

ProblemSpec ProblemSpec::make(NFunction nf, SobolevConjugate sc, PotentialSpec V,
                              NonlinearitySpec nonlin,
                              std::shared_ptr<const RadialGrid> grid) {
    if (!grid) throw std::invalid_argument("ProblemSpec: missing grid");
    if (sc.dim() != grid->dim())
        throw std::invalid_argument("ProblemSpec: conjugate/grid dimension mismatch");
    const double m = nf.m(), lstar = sc.l_star();
    if (!(nonlin.q > m && nonlin.q < lstar))
        throw std::invalid_argument(
            "ProblemSpec: nonlinearity exponent q = " + std::to_string(nonlin.q) +
            " outside the admissibility window (" + std::to_string(m) + ", " +
            std::to_string(lstar) + ")");
    if (!(nonlin.theta > m && nonlin.theta <= nonlin.q))
        throw std::invalid_argument(
            "ProblemSpec: theta must satisfy m < theta <= q");
    V.v0(*grid);  // throws unless inf V > 0
    ProblemSpec p{std::move(nf), std::move(sc), std::move(V), nonlin,
                  std::move(grid)};
    return p;
}

namespace {

// sign-odd derivative A'(|g|) sgn(g) with the degenerate-density
// regularization a(max(|g|, eps)) g
double aprime_reg(const NFunction& nf, double g, double eps) {
    const double ag = std::abs(g);
    if (ag >= eps) return std::copysign(nf.dA(ag), g);
    return nf.a(eps) * g;
}

double a2nd_reg(const NFunction& nf, double g, double eps) {
    return nf.d2A(std::max(std::abs(g), eps));
}

// first-derivative stencil of radial_gradient as sparse rows
struct DiffStencil {
    // row i: du_i = sum_k coeff[i][k] * u[index[i][k]]
    std::vector<std::array<int, 3>> index;
    std::vector<std::array<double, 3>> coeff;

    explicit DiffStencil(const RadialGrid& g) {
        const auto& r = g.nodes();
        const int n = static_cast<int>(g.size());
        index.resize(n);
        coeff.resize(n);
        index[0] = {0, 0, 0};
        coeff[0] = {0.0, 0.0, 0.0};  // u'(0) = 0
        for (int i = 1; i + 1 < n; ++i) {
            const double hm = r[i] - r[i - 1];
            const double hp = r[i + 1] - r[i];
            const double den = hm * hp * (hm + hp);
            index[i] = {i - 1, i, i + 1};
            coeff[i] = {-hp * hp / den, (hp * hp - hm * hm) / den,
                        hm * hm / den};
        }
        const double h1 = r[n - 2] - r[n - 3];
        const double h2 = r[n - 1] - r[n - 2];
        index[n - 1] = {n - 3, n - 2, n - 1};
        coeff[n - 1] = {h2 / (h1 * (h1 + h2)), -(h1 + h2) / (h1 * h2),
                        (h1 + 2.0 * h2) / (h2 * (h1 + h2))};
    }

    void apply(const std::vector<double>& u, std::vector<double>& du) const {
        du.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            const auto& ix = index[i];
            const auto& c = coeff[i];
            du[i] = c[0] * u[ix[0]] + c[1] * u[ix[1]] + c[2] * u[ix[2]];
        }
    }
};

} // namespace

double energy(const ProblemSpec& p, const GridFunction& u) {
    if (u.grid.get() != p.grid.get())
        throw std::invalid_argument("energy: function not on the problem grid");
    const RadialGrid& g = *p.grid;
    GridFunction du = radial_gradient(u);
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double Vi = p.V.eval(g.nodes()[i], i);
        sum += g.mass(i) * (p.nf.A(du.values[i]) + Vi * p.nf.A(u.values[i]) -
                            p.nonlin.F(u.values[i]));
    }
    if (!std::isfinite(sum)) throw NumericError("energy: non-finite value");
    return sum;
}

std::vector<double> energy_gradient(const ProblemSpec& p, const GridFunction& u) {
    const RadialGrid& g = *p.grid;
    const std::size_t n = u.size();
    const DiffStencil D(g);
    std::vector<double> du;
    D.apply(u.values, du);

    std::vector<double> grad(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double Vi = p.V.eval(g.nodes()[i], i);
        grad[i] = g.mass(i) * (Vi * aprime_reg(p.nf, u.values[i], p.eps_reg) -
                               p.nonlin.f(u.values[i]));
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double w = g.mass(i) * aprime_reg(p.nf, du[i], p.eps_reg);
        const auto& ix = D.index[i];
        const auto& c = D.coeff[i];
        grad[ix[0]] += w * c[0];
        grad[ix[1]] += w * c[1];
        grad[ix[2]] += w * c[2];
    }
    return grad;
}

double gradient_form(const std::vector<double>& grad, const GridFunction& phi) {
    if (grad.size() != phi.size())
        throw std::invalid_argument("gradient_form: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < grad.size(); ++i) s += grad[i] * phi.values[i];
    return s;
}

namespace {

// quadrature mass used to scale nodal gradient entries into strong-residual
// units; node 0 gets the measure of its half cell around the origin
double node_mass(const RadialGrid& g, std::size_t i) {
    if (i > 0) return g.mass(i);
    const int N = g.dim();
    return g.surface_area() * std::pow(g.weights()[0], N) / N;
}

} // namespace

GridFunction residual(const ProblemSpec& p, const GridFunction& u) {
    const auto grad = energy_gradient(p, u);
    GridFunction res(u.grid);
    for (std::size_t i = 0; i < grad.size(); ++i)
        res.values[i] = grad[i] / node_mass(*p.grid, i);
    return res;
}

double residual_norm(const ProblemSpec& p, const GridFunction& u) {
    const auto grad = energy_gradient(p, u);
    double nrm = 0.0;
    for (std::size_t i = 0; i + 1 < grad.size(); ++i)
        nrm = std::max(nrm, std::abs(grad[i] / node_mass(*p.grid, i)));
    return nrm;
}

std::pair<double, GridFunction> find_endpoint(const ProblemSpec& p,
                                              const GridFunction& phi) {
    double nonzero = 0.0;
    for (double v : phi.values) nonzero += std::abs(v);
    if (nonzero == 0.0)
        throw std::invalid_argument("find_endpoint: phi must be nonzero");
    double t = 1.0;
    for (int k = 0; k <= 60; ++k) {
        GridFunction e = t * phi;
        if (energy(p, e) < 0.0) return {t, std::move(e)};
        t *= 2.0;
    }
    throw NumericError(
        "find_endpoint: no sign change within 60 doublings; check the "
        "(f3)/theta superlinearity configuration");
}

GeometryProbe mp_geometry_probe(const ProblemSpec& p, const GridFunction& phi,
                                const std::vector<double>& t_grid) {
    GeometryProbe probe;
    for (double t : t_grid) {
        const double J = energy(p, t * phi);
        probe.samples.emplace_back(t, J);
        if (J > probe.peak) {
            probe.peak = J;
            probe.t_peak = t;
        }
    }
    bool crossed = false;
    for (const auto& [t, J] : probe.samples) {
        if (t <= 0.0) continue;
        if (J > 0.0 && !crossed) probe.rises_positive = true;
        if (J < 0.0 && t > probe.t_peak) crossed = true;
    }
    probe.crosses_negative = crossed;
    probe.passed = probe.rises_positive && probe.crosses_negative &&
                   probe.peak > 0.0;
    return probe;
}

GridFunction nehari_project(const ProblemSpec& p, const GridFunction& u,
                            bool* ok) {
    if (ok) *ok = false;
    double nonzero = 0.0;
    for (double v : u.values) nonzero += std::abs(v);
    if (nonzero == 0.0)
        throw std::invalid_argument("nehari_project: u must be nonzero");

    auto ray = [&](double t) {
        GridFunction tu = t * u;
        return gradient_form(energy_gradient(p, tu), tu);
    };

    // g(t) > 0 for small t (modular terms dominate), g < 0 past the
    // endpoint scale; expand a bracket geometrically in both directions
    double lo = 1.0, hi = 1.0;
    const double g1 = ray(1.0);
    if (g1 == 0.0) {
        if (ok) *ok = true;
        return u;
    }
    if (g1 > 0.0) {
        while (ray(hi) > 0.0) {
            hi *= 2.0;
            if (hi > 1e18) return u;  // no sign change: flagged
        }
        lo = hi * 0.5;
    } else {
        while (ray(lo) < 0.0) {
            lo *= 0.5;
            if (lo < 1e-18) return u;
        }
        hi = lo * 2.0;
    }
    double llo = std::log(lo), lhi = std::log(hi);
    for (int it = 0; it < 100 && lhi - llo > 1e-14; ++it) {
        const double mid = 0.5 * (llo + lhi);
        if (ray(std::exp(mid)) > 0.0) llo = mid; else lhi = mid;
    }
    if (ok) *ok = true;
    return std::exp(0.5 * (llo + lhi)) * u;
}

namespace {

// Hessian of the discrete energy: pentadiagonal band (the derivative
// stencil couples i-1..i+1, its square i-2..i+2)
void assemble_hessian(const ProblemSpec& p, const DiffStencil& D,
                      const GridFunction& u, detail::BandedLU& H) {
    const RadialGrid& g = *p.grid;
    const std::size_t n = u.size();
    std::vector<double> du;
    D.apply(u.values, du);
    H.clear();
    for (std::size_t i = 0; i < n; ++i) {
        const double Vi = p.V.eval(g.nodes()[i], i);
        H.at(i, i) += g.mass(i) * (Vi * a2nd_reg(p.nf, u.values[i], p.eps_reg) -
                                   p.nonlin.df(u.values[i]));
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double w = g.mass(i) * a2nd_reg(p.nf, du[i], p.eps_reg);
        const auto& ix = D.index[i];
        const auto& c = D.coeff[i];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (c[a] != 0.0 && c[b] != 0.0)
                    H.at(ix[a], ix[b]) += w * c[a] * c[b];
    }
    // Dirichlet constraint u(R_max) = 0
    for (std::size_t j = n - 3; j < n; ++j) {
        H.at(n - 1, j) = 0.0;
        H.at(j, n - 1) = 0.0;
    }
    H.at(n - 1, n - 1) = 1.0;
}

// SPD preconditioner: Hessian of int (|grad u|^2 + u^2), factored once
detail::BandedLU build_preconditioner(const RadialGrid& g, const DiffStencil& D) {
    const std::size_t n = g.size();
    detail::BandedLU M(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        M.at(i, i) += std::max(g.mass(i), 1e-300);
    for (std::size_t i = 1; i < n; ++i) {
        const auto& ix = D.index[i];
        const auto& c = D.coeff[i];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (c[a] != 0.0 && c[b] != 0.0)
                    M.at(ix[a], ix[b]) += g.mass(i) * c[a] * c[b];
    }
    for (std::size_t j = n - 3; j < n; ++j) {
        M.at(n - 1, j) = 0.0;
        M.at(j, n - 1) = 0.0;
    }
    M.at(n - 1, n - 1) = 1.0;
    if (!M.factor()) throw NumericError("preconditioner factorization failed");
    return M;
}

double scaled_sup(const ProblemSpec& p, const std::vector<double>& grad) {
    double nrm = 0.0;
    for (std::size_t i = 0; i + 1 < grad.size(); ++i)
        nrm = std::max(nrm, std::abs(grad[i] / node_mass(*p.grid, i)));
    return nrm;
}

} // namespace

MountainPassReport mountain_pass_solve(const ProblemSpec& p,
                                       const SolverConfig& cfg) {
    ProblemSpec prob = p;
    prob.eps_reg = cfg.eps_reg;
    const RadialGrid& g = *prob.grid;
    const std::size_t n = g.size();
    const DiffStencil D(g);

    MountainPassReport rep;
    rep.eps_reg = cfg.eps_reg;

    // unit-Sobolev-norm Gaussian bump
    GridFunction phi(prob.grid, [&](double r) {
        return std::exp(-(r / cfg.bump_width) * (r / cfg.bump_width));
    });
    phi.values[n - 1] = 0.0;
    phi = (1.0 / sobolev_norm(prob.nf, phi, prob.V)) * phi;

    auto [t_e, endpoint] = find_endpoint(prob, phi);
    rep.endpoint_scale = t_e;

    bool nehari_ok = false;
    GridFunction seed = nehari_project(prob, phi, &nehari_ok);
    if (!nehari_ok) seed = 0.5 * t_e * phi;

    // piecewise-linear path 0 -> seed -> endpoint
    const int P = std::max(4, cfg.path_points);
    std::vector<GridFunction> path;
    path.reserve(P + 1);
    const int half = P / 2;
    for (int k = 0; k <= half; ++k)
        path.push_back((static_cast<double>(k) / half) * seed);
    for (int k = half + 1; k <= P; ++k) {
        const double s = static_cast<double>(k - half) / (P - half);
        GridFunction q(prob.grid);
        for (std::size_t i = 0; i < n; ++i)
            q.values[i] = (1.0 - s) * seed.values[i] + s * endpoint.values[i];
        path.push_back(std::move(q));
    }
    std::vector<double> J(P + 1);
    for (int k = 0; k <= P; ++k) J[k] = energy(prob, path[k]);

    auto M = build_preconditioner(g, D);

    int iter = 0, deform_iters = 0;
    double sigma = 1.0;
    double rn = std::numeric_limits<double>::infinity();
    int kstar = 0;

    auto locate_max = [&]() {
        kstar = 0;
        for (int k = 1; k <= P; ++k)
            if (J[k] > J[kstar]) kstar = k;  // lowest index wins ties
    };

    // stage 1: path deformation
    for (; iter < cfg.max_iter; ++iter, ++deform_iters) {
        locate_max();
        if (kstar == 0 || kstar == P)
            throw NumericError("mountain_pass_solve: path collapsed onto an "
                               "endpoint (geometry failure)");
        auto grad = energy_gradient(prob, path[kstar]);
        grad[n - 1] = 0.0;
        rn = scaled_sup(prob, grad);
        if (rn < cfg.newton_switch) break;

        std::vector<double> dir = grad;
        M.solve(dir);
        dir[n - 1] = 0.0;
        double slope = 0.0;
        for (std::size_t i = 0; i < n; ++i) slope += grad[i] * dir[i];

        double step = std::min(2.0 * sigma, 1.0);
        const double J0 = J[kstar];
        GridFunction trial(prob.grid);
        bool accepted = false;
        for (int back = 0; back < 40; ++back) {
            for (std::size_t i = 0; i < n; ++i)
                trial.values[i] = path[kstar].values[i] - step * dir[i];
            const double Jt = energy(prob, trial);
            if (Jt <= J0 - 1e-4 * step * slope) {
                path[kstar] = trial;
                J[kstar] = Jt;
                sigma = step;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // descent stalled; hand off to Newton

        // local energy equalization around the moved point
        for (int nb : {kstar - 1, kstar + 1}) {
            if (nb <= 0 || nb >= P) continue;
            if (J[nb] > J[kstar]) {
                const int far = nb < kstar ? nb - 1 : nb + 1;
                for (std::size_t i = 0; i < n; ++i)
                    path[nb].values[i] =
                        0.5 * (path[kstar].values[i] + path[far].values[i]);
                J[nb] = energy(prob, path[nb]);
            }
        }
    }

    // stage 2: Newton polish on the path maximizer
    locate_max();
    GridFunction u = path[kstar];
    auto grad = energy_gradient(prob, u);
    grad[n - 1] = 0.0;
    rn = scaled_sup(prob, grad);
    int newton_iters = 0;
    detail::BandedLU H(n, 2);
    const double newton_target = 0.01 * cfg.tol;
    for (; newton_iters < 80 && rn > newton_target; ++newton_iters) {
        if (iter + newton_iters >= cfg.max_iter) break;
        assemble_hessian(prob, D, u, H);
        if (!H.factor()) break;
        std::vector<double> delta = grad;
        delta[n - 1] = 0.0;
        H.solve(delta);
        delta[n - 1] = 0.0;

        double damp = 1.0;
        bool improved = false;
        for (int back = 0; back < 12; ++back) {
            GridFunction trial = u;
            for (std::size_t i = 0; i < n; ++i)
                trial.values[i] -= damp * delta[i];
            auto gt = energy_gradient(prob, trial);
            gt[n - 1] = 0.0;
            const double rt = scaled_sup(prob, gt);
            if (rt < rn) {
                u = std::move(trial);
                grad = std::move(gt);
                rn = rt;
                improved = true;
                break;
            }
            damp *= 0.5;
        }
        if (!improved) break;
    }

    rep.iterations = iter + newton_iters;
    rep.stages = "deform(" + std::to_string(deform_iters) + ") newton(" +
                 std::to_string(newton_iters) + ")";
    rep.u = u;
    rep.c = energy(prob, u);
    rep.residual_norm = rn;
    path[kstar] = u;
    rep.path_energies.resize(P + 1);
    for (int k = 0; k <= P; ++k) rep.path_energies[k] = energy(prob, path[k]);

    double unorm = 0.0;
    for (double v : u.values) unorm = std::max(unorm, std::abs(v));
    rep.converged = rn <= cfg.tol && rep.c > 0.0 && unorm > 1e-8;
    return rep;
}

GridFunction shooting_oracle(const ProblemSpec& p, const ShootingConfig& cfg) {
    if (p.nf.spec().family != Family::Power)
        throw std::invalid_argument("shooting_oracle: pure-power family only");
    if (p.V.kind() != PotentialSpec::Kind::Constant)
        throw std::invalid_argument("shooting_oracle: constant potential only");

    const double P = p.nf.spec().p;
    const double Vc = p.V.eval(0.0, 0);
    const int N = p.grid->dim();
    const auto& nodes = p.grid->nodes();
    const double rmax = p.grid->r_max();

    // flux variable w = r^{N-1} a(|u'|) u'; phi_inv recovers u'
    auto phi_inv = [&](double z) {
        if (z == 0.0) return 0.0;
        return std::copysign(std::pow(std::abs(z) / P, 1.0 / (P - 1.0)), z);
    };
    auto source = [&](double u) {
        return P * Vc * std::pow(std::abs(u), P - 2.0) * u - p.nonlin.f(u);
    };

    struct State { double u, w; };
    auto rhs = [&](double r, const State& y) {
        State d;
        if (r <= 1e-300) {
            d.u = 0.0;
            d.w = 0.0;
        } else {
            d.u = phi_inv(y.w / std::pow(r, N - 1));
            d.w = std::pow(r, N - 1) * source(y.u);
        }
        return d;
    };

    // integrate with |shots| classification:
    //   +1 crossed zero (initial height too large)
    //   -1 turned back upward while still high (too small)
    auto integrate = [&](double s, std::vector<double>* record) {
        State y{s, 0.0};
        if (record) (*record)[0] = y.u;
        int verdict = 0;
        for (std::size_t cell = 0; cell + 1 < nodes.size() && verdict == 0; ++cell) {
            const double r0 = nodes[cell], r1 = nodes[cell + 1];
            const double h = (r1 - r0) / cfg.substeps;
            double r = r0;
            for (int st = 0; st < cfg.substeps; ++st) {
                const State k1 = rhs(r, y);
                const State k2 = rhs(r + 0.5 * h, {y.u + 0.5 * h * k1.u, y.w + 0.5 * h * k1.w});
                const State k3 = rhs(r + 0.5 * h, {y.u + 0.5 * h * k2.u, y.w + 0.5 * h * k2.w});
                const State k4 = rhs(r + h, {y.u + h * k3.u, y.w + h * k3.w});
                y.u += h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u);
                y.w += h / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w);
                r += h;
                if (y.u < 0.0) { verdict = +1; break; }
                if (y.w > 0.0 && y.u > 0.05 * s) { verdict = -1; break; }
            }
            if (record && verdict == 0) (*record)[cell + 1] = y.u;
        }
        if (verdict == 0) verdict = y.u > 0.0 ? -1 : +1;
        return verdict;
    };

    // bracket scan on u(0)
    double lo = 0.0, hi = 0.0, s = cfg.s_min;
    while (s <= cfg.s_max) {
        const int v = integrate(s, nullptr);
        if (v < 0) lo = s;
        if (v > 0 && lo > 0.0) { hi = s; break; }
        s *= 1.25;
    }
    if (hi == 0.0)
        throw NumericError("shooting_oracle: no crossing bracket found in [" +
                           std::to_string(cfg.s_min) + ", " +
                           std::to_string(cfg.s_max) + "]");
    for (int it = 0; it < 200 && (hi - lo) > 1e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (integrate(mid, nullptr) < 0) lo = mid; else hi = mid;
    }

    GridFunction out(p.grid);
    std::vector<double> record(nodes.size(), 0.0);
    integrate(0.5 * (lo + hi), &record);
    out.values = record;

    // zero out the trailing garbage branch once the profile stops decaying
    std::size_t cut = nodes.size();
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i] > 0.5 * rmax &&
            (out.values[i] <= 0.0 || out.values[i] > out.values[i - 1])) {
            cut = i;
            break;
        }
    }
    for (std::size_t i = cut; i < nodes.size(); ++i) out.values[i] = 0.0;
    return out;
}

CheckReport ps_inequality_check(const ProblemSpec& p, const GridFunction& u) {
    detail::Accumulator acc("ps_inequality:" + family_name(p.nf.spec().family));
    const double theta = p.nonlin.theta, m = p.nf.m();
    const double factor = (theta - m) / theta;

    const double J = energy(p, u);
    const double form = gradient_form(energy_gradient(p, u), u);
    const double lhs_value = J - form / theta;

    GridFunction du = radial_gradient(u);
    const double mod_grad = modular(p.nf, du);
    const double mod_u = modular(p.nf, u, &p.V);
    acc.add({0.0}, factor * (mod_grad + mod_u), lhs_value);

    // norm-side lower bound through xi0
    const double xterm = xi0(p.nf, luxemburg_norm(p.nf, du)) +
                         xi0(p.nf, luxemburg_norm(p.nf, u, &p.V));
    acc.add({1.0}, factor * xterm, lhs_value);
    return acc.finish();
}

} // namespace orlicz
