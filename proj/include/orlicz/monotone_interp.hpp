#ifndef ORLICZ_MONOTONE_INTERP_HPP
#define ORLICZ_MONOTONE_INTERP_HPP

#include <cstddef>
#include <vector>

namespace orlicz {

// Monotone piecewise-cubic interpolation after Steffen (1990): C^1,
// overshoot-free, preserves strict monotonicity of the data.  Outside the
// abscissa range it extends linearly with the boundary slope.
class MonotoneInterp {
public:
    MonotoneInterp() = default;
    MonotoneInterp(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool inside(double x) const { return x >= x_.front() && x <= x_.back(); }
    std::size_t size() const { return x_.size(); }

private:
    std::size_t cell(double x) const;
    std::vector<double> x_, y_, slope_;
};

} // namespace orlicz

#endif
