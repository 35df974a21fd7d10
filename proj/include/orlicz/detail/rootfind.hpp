#ifndef ORLICZ_DETAIL_ROOTFIND_HPP
#define ORLICZ_DETAIL_ROOTFIND_HPP

#include <cmath>
#include <functional>

namespace orlicz::detail {

struct RootTol {
    double abs = 1e-12;
    double rel = 1e-10;
};

// Safeguarded Newton on a bracketed monotone function: Newton steps are
// accepted while they stay inside the bracket, otherwise bisect.  g must
// satisfy g(lo) <= 0 <= g(hi).
template <class G, class DG>
double newton_bracketed(G&& g, DG&& dg, double lo, double hi,
                        RootTol tol = {}) {
    double x = 0.5 * (lo + hi);
    double gx = g(x);
    for (int it = 0; it < 200; ++it) {
        if (gx > 0.0) hi = x; else lo = x;
        double width = hi - lo;
        if (width <= tol.abs + tol.rel * std::abs(x)) break;
        double d = dg(x);
        double step = (d != 0.0 && std::isfinite(d)) ? gx / d : 0.0;
        double xn = x - step;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (std::abs(xn - x) <= tol.abs + tol.rel * std::abs(xn)) {
            x = xn;
            break;
        }
        x = xn;
        gx = g(x);
        if (gx == 0.0) break;
    }
    return x;
}

// Plain bisection for when no cheap derivative is available.
template <class G>
double bisect(G&& g, double lo, double hi, RootTol tol = {}) {
    for (int it = 0; it < 400; ++it) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol.abs + tol.rel * std::abs(mid)) return mid;
        if (g(mid) > 0.0) hi = mid; else lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace orlicz::detail

#endif
