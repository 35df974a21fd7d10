#ifndef ORLICZ_RADIAL_HPP
#define ORLICZ_RADIAL_HPP

#include "orlicz/nfunction.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace orlicz {

enum class Spacing { Uniform, Graded };

// Discretization of [0, R_max] for radial functions on R^N with quadrature
// against the measure r^{N-1} dr.  Nodes r_0 = 0 < ... < r_M = R_max carry
// composite trapezoid weights; `Graded` clusters nodes quadratically near
// the origin.  Functions are extended by zero beyond R_max.
class RadialGrid {
public:
    static std::shared_ptr<const RadialGrid> make(int dim, double r_max,
                                                  int cells,
                                                  Spacing spacing = Spacing::Uniform);

    int dim() const { return dim_; }
    double r_max() const { return r_max_; }
    double surface_area() const { return surface_area_; }  // |S^{N-1}|
    std::size_t size() const { return nodes_.size(); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    // omega * w_i * r_i^{N-1}: the full quadrature mass of node i
    double mass(std::size_t i) const { return mass_[i]; }

    // integral of nodal samples against r^{N-1} dr times the sphere area
    double integrate(const std::vector<double>& g) const;

private:
    int dim_ = 0;
    double r_max_ = 0.0, surface_area_ = 0.0;
    std::vector<double> nodes_, weights_, mass_;
};

double sphere_area(int dim);  // 2 pi^{N/2} / Gamma(N/2)

struct GridFunction {
    std::shared_ptr<const RadialGrid> grid;
    std::vector<double> values;

    GridFunction() = default;
    explicit GridFunction(std::shared_ptr<const RadialGrid> g)
        : grid(std::move(g)), values(grid->size(), 0.0) {}
    GridFunction(std::shared_ptr<const RadialGrid> g,
                 const std::function<double(double)>& f);

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double s, const GridFunction& a);

// Radial potential V(r) with positive infimum (V0 > 0).
class PotentialSpec {
public:
    enum class Kind { Constant, RadialTable, Formula };

    static PotentialSpec constant(double c);
    // one value per grid node
    static PotentialSpec radial_table(std::vector<double> values);
    // "gauss_bump": V(r) = p0 + p1 exp(-(r/p2)^2)
    static PotentialSpec formula(const std::string& id, std::vector<double> params);

    double eval(double r, std::size_t node) const;
    double v0(const RadialGrid& grid) const;  // infimum over nodes
    Kind kind() const { return kind_; }
    const std::string& formula_id() const { return id_; }
    const std::vector<double>& params() const { return params_; }
    const std::vector<double>& table() const { return table_; }

private:
    Kind kind_ = Kind::Constant;
    double c_ = 1.0;
    std::vector<double> table_;
    std::string id_;
    std::vector<double> params_;
};

// \int V(x) Phi(|u|) dx over R^N, truncated at R_max.  V omitted means 1.
double modular(const NFunction& nf, const GridFunction& u,
               const PotentialSpec* V = nullptr);

// same with an arbitrary even scalar convex function
double modular_phi(const std::function<double(double)>& phi, const GridFunction& u,
                   const PotentialSpec* V = nullptr);

// second-order finite-difference radial derivative; u'(0) = 0 by radial
// smoothness, one-sided stencil at R_max
GridFunction radial_gradient(const GridFunction& u);

// Luxemburg norm inf{alpha > 0 : modular(u/alpha) <= 1}.  The bracket comes
// from the xi sandwich; bisection on log(alpha) to 1e-12 relative.
double luxemburg_norm(const NFunction& nf, const GridFunction& u,
                      const PotentialSpec* V = nullptr);

// Luxemburg norm for an arbitrary scalar N-function (conjugates, A*, B);
// bracket by doubling/halving
double luxemburg_norm_phi(const std::function<double(double)>& phi,
                          const GridFunction& u,
                          const PotentialSpec* V = nullptr);

// ||u|| = ||grad u||_A + ||u||_{V,A}
double sobolev_norm(const NFunction& nf, const GridFunction& u,
                    const PotentialSpec& V);

struct HolderPair {
    double pairing;  // \int u v
    double bound;    // 2 ||u||_A ||v||_Atilde
};
HolderPair holder_pairing(const NFunction& nf, const GridFunction& u,
                          const GridFunction& v);

// true iff modular(u_n - u) is nonincreasing along the sequence and ends
// below tol
bool modular_convergence_check(const NFunction& nf,
                               const std::vector<GridFunction>& seq,
                               const GridFunction& u, double tol = 1e-10);

// A(|u(R_max)|) times the volume of the outermost cell: the reported
// truncation-tail estimate for profiles that have not fully decayed
double truncation_tail_estimate(const NFunction& nf, const GridFunction& u);

} // namespace orlicz

#endif
