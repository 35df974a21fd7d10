#ifndef ORLICZ_SOLVER_HPP
#define ORLICZ_SOLVER_HPP

#include "orlicz/checks.hpp"
#include "orlicz/radial.hpp"
#include "orlicz/sobolev_conjugate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orlicz {

// Pure-power nonlinearity f(t) = |t|^{q-2} t with F(t) = |t|^q / q and
// Ambrosetti-Rabinowitz exponent theta (= q here, so theta F(t) = t f(t)).
struct NonlinearitySpec {
    double q = 0.0;
    double theta = 0.0;

    static NonlinearitySpec pure_power(double q) { return {q, q}; }

    double f(double t) const;
    double F(double t) const;
    double df(double t) const;
};

// The radial problem -div(a(|grad u|) grad u) + V(|x|) a(|u|) u = f(u),
// discretized on a RadialGrid with zero Dirichlet value at R_max.
struct ProblemSpec {
    NFunction nf;
    SobolevConjugate sc;
    PotentialSpec V;
    NonlinearitySpec nonlin;
    std::shared_ptr<const RadialGrid> grid;
    double eps_reg = 1e-12;  // gradient regularization for degenerate densities

    // validates the admissibility window m < theta <= q < l* and V0 > 0
    static ProblemSpec make(NFunction nf, SobolevConjugate sc, PotentialSpec V,
                            NonlinearitySpec nonlin,
                            std::shared_ptr<const RadialGrid> grid);
};

// J(u) = int A(|grad u|) + int V A(|u|) - int F(u)
double energy(const ProblemSpec& p, const GridFunction& u);

// exact partial derivatives of the discrete energy w.r.t. nodal values
std::vector<double> energy_gradient(const ProblemSpec& p, const GridFunction& u);

// <J'(u), phi> = gradient . phi
double gradient_form(const std::vector<double>& grad, const GridFunction& phi);

// gradient scaled by inverse quadrature mass: approximates the strong
// residual -r^{1-N}(r^{N-1} a(|u'|)u')' + V a(|u|)u - f(u)
GridFunction residual(const ProblemSpec& p, const GridFunction& u);

// sup-norm of the scaled residual over the free nodes (all but r = R_max)
double residual_norm(const ProblemSpec& p, const GridFunction& u);

// first t = 2^k with J(t phi) < 0, and e = t phi (Lemma-4.1(ii) endpoint)
std::pair<double, GridFunction> find_endpoint(const ProblemSpec& p,
                                              const GridFunction& phi);

struct GeometryProbe {
    std::vector<std::pair<double, double>> samples;  // (t, J(t phi))
    double peak = 0.0;        // max J over the probed ray
    double t_peak = 0.0;
    bool rises_positive = false;
    bool crosses_negative = false;
    bool passed = false;
};
GeometryProbe mp_geometry_probe(const ProblemSpec& p, const GridFunction& phi,
                                const std::vector<double>& t_grid);

// scales u onto the Nehari set: t with <J'(t u), t u> = 0 by bisection.
// Returns u unchanged with *ok = false when no sign change is found.
GridFunction nehari_project(const ProblemSpec& p, const GridFunction& u,
                            bool* ok = nullptr);

struct SolverConfig {
    double tol = 1e-6;           // residual sup-norm target
    int max_iter = 50000;
    int path_points = 32;        // path has path_points+1 states
    std::uint64_t seed = 12345;
    double eps_reg = 1e-12;
    double newton_switch = 1e-3; // deformation-to-Newton handoff level
    double bump_width = 2.0;     // initial Gaussian bump profile
};

struct MountainPassReport {
    GridFunction u;
    double c = 0.0;
    double residual_norm = 0.0;
    std::vector<double> path_energies;
    int iterations = 0;
    double endpoint_scale = 0.0;
    bool converged = false;
    std::string stages;
    double eps_reg = 0.0;
};

// Path-deformation mountain-pass solver: discrete path from 0 through the
// Nehari-projected seed to the negative-energy endpoint; the path maximizer
// takes preconditioned Armijo descent steps with local energy equalization
// of its neighbors, then a Newton polish drives the residual to tolerance.
MountainPassReport mountain_pass_solve(const ProblemSpec& p,
                                       const SolverConfig& cfg = {});

struct ShootingConfig {
    double s_min = 0.05;   // initial-value scan start
    double s_max = 80.0;
    int substeps = 4;      // RK4 steps per grid cell
};

// Independent oracle for the pure-power family with constant V: integrates
// the radial ODE from r = 0 shooting on u(0), bisecting between rebound and
// sign-crossing trajectories toward the decaying ground state.
GridFunction shooting_oracle(const ProblemSpec& p, const ShootingConfig& cfg = {});

// J(u) - (1/theta) <J'(u), u> >= ((theta-m)/theta) [int A(|grad u|) + V A(|u|)]
// plus the xi0 norm-side lower bound
CheckReport ps_inequality_check(const ProblemSpec& p, const GridFunction& u);

} // namespace orlicz

#endif
