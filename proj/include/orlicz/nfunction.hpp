#ifndef ORLICZ_NFUNCTION_HPP
#define ORLICZ_NFUNCTION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

// Thrown when a computation leaves the representable/convergent regime
// (bracket overflow, divergent integral, non-finite modular, ...).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

enum class Family { Power, PowerSum, Curvature, PowerLog };

std::string family_name(Family f);

// Parameters of one of the four builtin N-function families:
//   Power:     A(t) = |t|^p
//   PowerSum:  A(t) = |t|^p + |t|^q
//   Curvature: A(t) = (1 + t^2)^gamma - 1
//   PowerLog:  A(t) = |t|^p ln(1 + |t|)
// `dim` is optional (0 = unset). When set, construction additionally
// enforces the dimension-coupled admissibility ranges used by the
// Sobolev-conjugate and solver layers.
struct NFunctionSpec {
    Family family = Family::Power;
    double p = 0.0;
    double q = 0.0;
    double gamma = 0.0;
    int dim = 0;

    static NFunctionSpec power(double p, int dim = 0);
    static NFunctionSpec power_sum(double p, double q, int dim = 0);
    static NFunctionSpec curvature(double gamma, int dim = 0);
    static NFunctionSpec power_log(double p, int dim = 0);
};

// Smallest admissible exponent for the PowerLog family in dimension N;
// p > p0 is equivalent to m = p + 1 < l* = pN/(N - p).
double power_log_p0(int dim);

// An N-function A with density a, A(t) = \int_0^{|t|} a(s) s ds, together
// with its growth exponents l <= a(t) t^2 / A(t) <= m and the doubling
// constant K with A(2t) <= K A(t).  Immutable after construction; all
// evaluations are pure and thread-safe.
class NFunction {
public:
    static NFunction build(const NFunctionSpec& spec);

    double A(double t) const;        // even: A(|t|)
    double a(double t) const;        // density at |t|
    double dA(double t) const;       // A'(t) = a(t) t for t >= 0
    double d2A(double t) const;      // A''(|t|)
    double inverse(double y) const;  // A^{-1} on [0, inf), y >= 0

    double l() const { return l_; }
    double m() const { return m_; }
    double K() const { return K_; }

    // Local power exponents of A at 0 and at infinity (both lie in [l, m]).
    // They control the behavior of the Sobolev-conjugate integral.
    double growth_at_zero() const { return e_zero_; }
    double growth_at_infinity() const { return e_inf_; }

    const NFunctionSpec& spec() const { return spec_; }

private:
    NFunction() = default;
    NFunctionSpec spec_;
    double l_ = 0.0, m_ = 0.0, K_ = 0.0;
    double e_zero_ = 0.0, e_inf_ = 0.0;
};

// Doubling constant K = xi1(2) = 2^m (sharp for pure powers).
double delta2_bound(const NFunction& nf);

// Legendre conjugate  Atilde(s) = max_{t >= 0} { s t - A(t) },  s >= 0.
// The maximizer solves a(t) t = s; uniqueness from the strict monotonicity
// of a(t) t.
double conjugate_eval(const NFunction& nf, double s);

// Infimum/supremum of a(t) t^2 / A(t) over a log-spaced sample set.
// Cross-check against the stored analytic (l, m); samples must span at
// least [1e-6, 1e6].
std::pair<double, double> growth_exponents(const NFunction& nf,
                                           const std::vector<double>& t_samples);

// Scaling envelopes from the doubling lemma:
//   xi0(r) = min(r^l, r^m),  xi1(r) = max(r^l, r^m).
double xi0(const NFunction& nf, double rho);
double xi1(const NFunction& nf, double rho);

std::vector<double> log_spaced(double lo, double hi, int n);

} // namespace orlicz

#endif
