#include "orlicz/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace orlicz {

double sphere_area(int dim) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(0.5 * dim);
}

std::shared_ptr<const RadialGrid> RadialGrid::make(int dim, double r_max,
                                                   int cells, Spacing spacing) {
    if (dim < 2) throw std::invalid_argument("RadialGrid: dim must be >= 2");
    if (!(r_max > 0.0)) throw std::invalid_argument("RadialGrid: r_max must be > 0");
    if (cells < 16) throw std::invalid_argument("RadialGrid: need at least 16 cells");

    auto grid = std::make_shared<RadialGrid>();
    grid->dim_ = dim;
    grid->r_max_ = r_max;
    grid->surface_area_ = sphere_area(dim);

    const std::size_t n = static_cast<std::size_t>(cells) + 1;
    grid->nodes_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / cells;
        grid->nodes_[i] = spacing == Spacing::Uniform ? r_max * s : r_max * s * s;
    }

    grid->weights_.resize(n);
    grid->weights_[0] = 0.5 * (grid->nodes_[1] - grid->nodes_[0]);
    for (std::size_t i = 1; i + 1 < n; ++i)
        grid->weights_[i] = 0.5 * (grid->nodes_[i + 1] - grid->nodes_[i - 1]);
    grid->weights_[n - 1] = 0.5 * (grid->nodes_[n - 1] - grid->nodes_[n - 2]);

    grid->mass_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        grid->mass_[i] = grid->surface_area_ * grid->weights_[i] *
                         std::pow(grid->nodes_[i], dim - 1);
    return grid;
}

double RadialGrid::integrate(const std::vector<double>& g) const {
    if (g.size() != nodes_.size())
        throw std::invalid_argument("RadialGrid::integrate: size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) sum += mass_[i] * g[i];
    return sum;
}

GridFunction::GridFunction(std::shared_ptr<const RadialGrid> g,
                           const std::function<double(double)>& f)
    : grid(std::move(g)), values(grid->size()) {
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = f(grid->nodes()[i]);
}

namespace {
void require_same_grid(const GridFunction& a, const GridFunction& b) {
    if (a.grid.get() != b.grid.get())
        throw std::invalid_argument("GridFunction: operands on different grids");
}
} // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out(a.grid);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.values[i] = a.values[i] + b.values[i];
    return out;
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out(a.grid);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.values[i] = a.values[i] - b.values[i];
    return out;
}

GridFunction operator*(double s, const GridFunction& a) {
    GridFunction out(a.grid);
    for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = s * a.values[i];
    return out;
}

PotentialSpec PotentialSpec::constant(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("PotentialSpec: V0 must be > 0");
    PotentialSpec v;
    v.kind_ = Kind::Constant;
    v.c_ = c;
    return v;
}

PotentialSpec PotentialSpec::radial_table(std::vector<double> values) {
    PotentialSpec v;
    v.kind_ = Kind::RadialTable;
    v.table_ = std::move(values);
    for (double x : v.table_)
        if (!(x > 0.0))
            throw std::invalid_argument("PotentialSpec: table values must be > 0");
    return v;
}

PotentialSpec PotentialSpec::formula(const std::string& id,
                                     std::vector<double> params) {
    PotentialSpec v;
    v.kind_ = Kind::Formula;
    v.id_ = id;
    v.params_ = std::move(params);
    if (id == "gauss_bump") {
        if (v.params_.size() != 3)
            throw std::invalid_argument("PotentialSpec: gauss_bump needs 3 params");
        if (!(v.params_[0] > 0.0))
            throw std::invalid_argument("PotentialSpec: gauss_bump base must be > 0");
    } else {
        throw std::invalid_argument("PotentialSpec: unknown formula '" + id + "'");
    }
    return v;
}

double PotentialSpec::eval(double r, std::size_t node) const {
    switch (kind_) {
        case Kind::Constant: return c_;
        case Kind::RadialTable:
            if (node >= table_.size())
                throw std::out_of_range("PotentialSpec: node outside table");
            return table_[node];
        case Kind::Formula:
            return params_[0] +
                   params_[1] * std::exp(-(r / params_[2]) * (r / params_[2]));
    }
    return c_;
}

double PotentialSpec::v0(const RadialGrid& grid) const {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i)
        lo = std::min(lo, eval(grid.nodes()[i], i));
    if (!(lo > 0.0)) throw std::invalid_argument("PotentialSpec: inf V <= 0");
    return lo;
}

namespace {

double modular_scaled(const std::function<double(double)>& phi,
                      const GridFunction& u, const PotentialSpec* V,
                      double inv_alpha) {
    const RadialGrid& g = *u.grid;
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double w = V ? V->eval(g.nodes()[i], i) : 1.0;
        sum += g.mass(i) * w * phi(std::abs(u.values[i]) * inv_alpha);
    }
    if (!std::isfinite(sum)) throw NumericError("modular: non-finite value");
    return sum;
}

} // namespace

double modular_phi(const std::function<double(double)>& phi, const GridFunction& u,
                   const PotentialSpec* V) {
    return modular_scaled(phi, u, V, 1.0);
}

double modular(const NFunction& nf, const GridFunction& u, const PotentialSpec* V) {
    return modular_phi([&](double t) { return nf.A(t); }, u, V);
}

GridFunction radial_gradient(const GridFunction& u) {
    const auto& r = u.grid->nodes();
    const std::size_t n = u.size();
    if (n < 3) throw std::invalid_argument("radial_gradient: need >= 3 nodes");
    GridFunction du(u.grid);
    du.values[0] = 0.0;  // radial smoothness
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hm = r[i] - r[i - 1];
        const double hp = r[i + 1] - r[i];
        du.values[i] = (hm * hm * u.values[i + 1] - hp * hp * u.values[i - 1] -
                        (hm * hm - hp * hp) * u.values[i]) /
                       (hm * hp * (hm + hp));
    }
    const double h1 = r[n - 2] - r[n - 3];
    const double h2 = r[n - 1] - r[n - 2];
    du.values[n - 1] = u.values[n - 3] * h2 / (h1 * (h1 + h2)) -
                       u.values[n - 2] * (h1 + h2) / (h1 * h2) +
                       u.values[n - 1] * (h1 + 2.0 * h2) / (h2 * (h1 + h2));
    return du;
}

namespace {

// bisection on log(alpha) for modular(u/alpha) = 1 given a bracket with
// modular(u/lo) >= 1 >= modular(u/hi)
double luxemburg_bisect(const std::function<double(double)>& mod_at, double lo,
                        double hi) {
    double llo = std::log(lo), lhi = std::log(hi);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (llo + lhi);
        if (lhi - llo < 1e-12) return std::exp(mid);
        if (mod_at(std::exp(mid)) > 1.0) llo = mid; else lhi = mid;
    }
    return std::exp(0.5 * (llo + lhi));
}

} // namespace

double luxemburg_norm(const NFunction& nf, const GridFunction& u,
                      const PotentialSpec* V) {
    const double mu = modular(nf, u, V);
    if (mu == 0.0) return 0.0;
    // xi sandwich: modular(u/alpha) <= xi1(1/alpha) mu and >= xi0(1/alpha) mu
    double lo = std::min(std::pow(mu, 1.0 / nf.l()), std::pow(mu, 1.0 / nf.m()));
    double hi = std::max(std::pow(mu, 1.0 / nf.l()), std::pow(mu, 1.0 / nf.m()));
    lo *= 1.0 - 1e-14;
    hi *= 1.0 + 1e-14;
    auto phi = [&](double t) { return nf.A(t); };
    auto mod_at = [&](double alpha) {
        return modular_scaled(phi, u, V, 1.0 / alpha);
    };
    if (lo == hi) return lo;
    return luxemburg_bisect(mod_at, lo, hi);
}

double luxemburg_norm_phi(const std::function<double(double)>& phi,
                          const GridFunction& u, const PotentialSpec* V) {
    const double mu = modular_phi(phi, u, V);
    if (mu == 0.0) return 0.0;
    auto mod_at = [&](double alpha) {
        return modular_scaled(phi, u, V, 1.0 / alpha);
    };
    double lo = 1.0, hi = 1.0;
    if (mu > 1.0) {
        while (mod_at(hi) > 1.0) {
            hi *= 2.0;
            if (hi > 1e150) throw NumericError("luxemburg_norm: bracket overflow");
        }
        lo = hi * 0.5;
    } else {
        while (mod_at(lo) < 1.0) {
            lo *= 0.5;
            if (lo < 1e-150) return 0.0;
        }
        hi = lo * 2.0;
    }
    return luxemburg_bisect(mod_at, lo, hi);
}

double sobolev_norm(const NFunction& nf, const GridFunction& u,
                    const PotentialSpec& V) {
    return luxemburg_norm(nf, radial_gradient(u)) + luxemburg_norm(nf, u, &V);
}

HolderPair holder_pairing(const NFunction& nf, const GridFunction& u,
                          const GridFunction& v) {
    require_same_grid(u, v);
    double pairing = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        pairing += u.grid->mass(i) * u.values[i] * v.values[i];
    const double nu = luxemburg_norm(nf, u);
    const double nv = luxemburg_norm_phi(
        [&](double s) { return conjugate_eval(nf, s); }, v);
    return {pairing, 2.0 * nu * nv};
}

bool modular_convergence_check(const NFunction& nf,
                               const std::vector<GridFunction>& seq,
                               const GridFunction& u, double tol) {
    if (seq.empty()) return false;
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& un : seq) {
        const double d = modular(nf, un - u);
        if (d > prev * (1.0 + 1e-9) + 1e-300) return false;
        prev = d;
    }
    return prev <= tol;
}

double truncation_tail_estimate(const NFunction& nf, const GridFunction& u) {
    const RadialGrid& g = *u.grid;
    const std::size_t n = g.size();
    return nf.A(std::abs(u.values[n - 1])) * g.mass(n - 1);
}

} // namespace orlicz
