#ifndef ORLICZ_CHECKS_HPP
#define ORLICZ_CHECKS_HPP

#include "orlicz/radial.hpp"
#include "orlicz/sobolev_conjugate.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orlicz {

struct Violation {
    std::vector<double> input;
    double lhs = 0.0;
    double rhs = 0.0;
};

// Result of one inequality check over a sample set.  Each sample records
// margin = rhs - lhs and a scale max(1, |lhs|, |rhs|); the check passes
// when every normalized margin stays above -tolerance_rel.
struct CheckReport {
    std::string name;
    int samples = 0;
    double worst_margin = 0.0;      // rhs - lhs at the worst sample
    double worst_margin_rel = 0.0;  // (rhs - lhs) / scale at the worst sample
    double tolerance_rel = 1e-9;
    bool passed = false;
    std::vector<Violation> violations;
};

// Young's inequality s t <= A(t) + Atilde(s) on random log-uniform pairs,
// with the tangency case s = a(t) t audited at 1e-8 relative.
CheckReport young_check(const NFunction& nf, int sample_count,
                        std::uint64_t seed = 2024);

// Atilde(a(t) t) <= A(2 t) on log-spaced t
CheckReport lemma_f0_check(const NFunction& nf, int sample_count);

enum class SandwichKind { F1, F2 };

// xi0(rho) A(t) <= A(rho t) <= xi1(rho) A(t) (F1) and the A* analogue with
// xi2/xi3 (F2); random (rho, t) pairs.  F2 sampling keeps rho t inside the
// tabulated range.
CheckReport sandwich_check(const NFunction& nf, int sample_count,
                           std::uint64_t seed = 77);
CheckReport sandwich_check(const SobolevConjugate& sc, int sample_count,
                           std::uint64_t seed = 78);

// l* <= a*(t) t^2 / A*(t) <= m* on the tabulated range plus flagged
// extrapolation probes at both edges
CheckReport f3_ratio_check(const SobolevConjugate& sc, int sample_count);

// Pointwise radial decay bound with the explicit constant C = (K+1)/omega:
//   |u(r)| <= A^{-1}( C E / r^{N-1} ),  E = int A(|u|) + A(|grad u|).
struct StraussBound {
    const NFunction* nf = nullptr;
    int dim = 0;
    double C = 0.0;
    double E = 0.0;
    double bound(double r) const;
    static StraussBound make(const NFunction& nf, const GridFunction& u);
};

CheckReport strauss_check(const NFunction& nf, const GridFunction& u,
                          double r_min);

// B(t)/A(t) -> 0 at 0 and B(t)/A*(t) -> 0 at infinity, operationalized as
// monotone ratio decay by >= 1e3 over four decades
CheckReport embedding_conditions_check(const NFunction& B, const NFunction& A,
                                       const SobolevConjugate& sc);

struct LionsRow {
    double n = 0.0;
    double window = 0.0;           // int_{B_R(0)} A(|u_n|)
    double modular_A = 0.0;        // int A(|u_n|)
    double norm_B = 0.0;           // ||u_n||_B
    double sobolev_modular = 0.0;  // int A(|u_n|) + A(|grad u_n|)
};

struct LionsTable {
    std::vector<LionsRow> rows;
    bool window_decayed = false;    // last <= first / 10, monotone
    bool norm_decayed = false;      // same for ||u_n||_B
    bool modular_bounded = false;   // Sobolev modular <= 1.05 x initial
    bool passed = false;
};

// Spreading sequence u_n(x) = n^{-beta} phi(x/n) for radially nonincreasing
// phi; the origin window maximizes the ball integral among all centers, so
// only it is reported.
LionsTable lions_vanishing_demo(const NFunction& A, const NFunction& B,
                                const GridFunction& phi, double beta,
                                const std::vector<double>& n_list, double R);

// integral of A(|u|) restricted to r <= R
double modular_window(const NFunction& nf, const GridFunction& u, double R);

// linear interpolation of nodal values (zero beyond R_max)
double interp_value(const GridFunction& u, double r);

} // namespace orlicz

#endif
