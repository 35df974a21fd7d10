#ifndef ORLICZ_SOBOLEV_CONJUGATE_HPP
#define ORLICZ_SOBOLEV_CONJUGATE_HPP

#include "orlicz/monotone_interp.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {

// Sobolev conjugate A* of an N-function in dimension N, defined through its
// inverse G(t) = \int_0^t A^{-1}(s) / s^{(N+1)/N} ds.  The integral is
// tabulated once (graded geometric panels, Gauss-Legendre in the log
// variable, analytic power-law head for the integrable singularity at 0)
// and A* is recovered by monotone cubic interpolation of the inverse table
// in log-log coordinates.
//
// Existence requires the local growth exponent of A at 0 to be < N.  When
// the growth at infinity equals N the conjugate is of exponential type and
// m* = +infinity; the tabulated range still covers every finite argument
// reachable in double precision.
class SobolevConjugate {
public:
    static SobolevConjugate build(const NFunction& nf, int N);

    double eval(double t) const;            // A*(t); closed form for pure powers
    double eval_tabulated(double t) const;  // always through the table
    double inverse(double s) const;         // G(s) = A*^{-1}(s)

    // (A*)'(t) = a*(t) t, computed from the inverse relation
    // G(A*(t)) = t as A*(t)^{(N+1)/N} / A^{-1}(A*(t)).  Outside the table
    // the power-law extrapolant's own derivative is returned and
    // *extrapolated (if given) is set.
    double derivative(double t, bool* extrapolated = nullptr) const;

    bool in_table(double t) const { return t >= t_min_ && t <= t_max_; }
    double table_min() const { return t_min_; }
    double table_max() const { return t_max_; }

    double l_star() const { return l_star_; }
    double m_star() const { return m_star_; }  // +inf when m == N
    int dim() const { return dim_; }
    const NFunction& base() const { return base_; }

private:
    SobolevConjugate(NFunction base, int N) : base_(std::move(base)), dim_(N) {}

    NFunction base_;
    int dim_;
    double l_star_ = 0.0, m_star_ = 0.0;
    double t_min_ = 0.0, t_max_ = 0.0;     // tabulated argument range of A*
    double v_min_ = 0.0, v_max_ = 0.0;     // A* values at the range ends
    double exp_below_ = 0.0, exp_above_ = 0.0;  // extrapolation exponents
    bool power_closed_form_ = false;
    double pstar_ = 0.0;
    MonotoneInterp log_astar_;   // ln A*  as a function of  ln t
    MonotoneInterp log_ginv_;    // ln G   as a function of  ln s
};

double a_star_eval(const SobolevConjugate& sc, double t,
                   bool* extrapolated = nullptr);

// Scaling envelopes of Lemma-2.5 type:
//   xi2(r) = min(r^{l*}, r^{m*}),  xi3(r) = max(r^{l*}, r^{m*}).
double xi2(const SobolevConjugate& sc, double rho);
double xi3(const SobolevConjugate& sc, double rho);

} // namespace orlicz

#endif
