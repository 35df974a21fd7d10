#include "orlicz/monotone_interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orlicz {

MonotoneInterp::MonotoneInterp(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw std::invalid_argument("MonotoneInterp: need >= 2 matching nodes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("MonotoneInterp: abscissae not increasing");

    slope_.resize(n);
    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        d[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double pi = (d[i - 1] * h[i] + d[i] * h[i - 1]) / (h[i - 1] + h[i]);
        if (d[i - 1] * d[i] <= 0.0) {
            slope_[i] = 0.0;
        } else {
            const double cap = 2.0 * std::min(std::abs(d[i - 1]), std::abs(d[i]));
            slope_[i] = (std::copysign(1.0, d[i - 1])) * std::min(std::abs(pi), cap);
        }
    }
    // one-sided boundary slopes, clipped to keep the end cells monotone
    auto end_slope = [](double d0, double d1, double h0, double h1) {
        double s = d0 * (1.0 + h0 / (h0 + h1)) - d1 * (h0 / (h0 + h1));
        if (s * d0 <= 0.0) return 0.0;
        if (std::abs(s) > 2.0 * std::abs(d0)) return 2.0 * d0;
        return s;
    };
    if (n == 2) {
        slope_[0] = slope_[1] = d[0];
    } else {
        slope_[0] = end_slope(d[0], d[1], h[0], h[1]);
        slope_[n - 1] = end_slope(d[n - 2], d[n - 3], h[n - 2], h[n - 3]);
    }
}

std::size_t MonotoneInterp::cell(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t k = static_cast<std::size_t>(it - x_.begin());
    if (k == 0) return 0;
    if (k >= x_.size()) return x_.size() - 2;
    return k - 1;
}

double MonotoneInterp::operator()(double x) const {
    if (x <= x_.front())
        return y_.front() + slope_.front() * (x - x_.front());
    if (x >= x_.back())
        return y_.back() + slope_.back() * (x - x_.back());
    const std::size_t k = cell(x);
    const double h = x_[k + 1] - x_[k];
    const double d = (y_[k + 1] - y_[k]) / h;
    const double a = (slope_[k] + slope_[k + 1] - 2.0 * d) / (h * h);
    const double b = (3.0 * d - 2.0 * slope_[k] - slope_[k + 1]) / h;
    const double dx = x - x_[k];
    return y_[k] + dx * (slope_[k] + dx * (b + dx * a));
}

double MonotoneInterp::derivative(double x) const {
    if (x <= x_.front()) return slope_.front();
    if (x >= x_.back()) return slope_.back();
    const std::size_t k = cell(x);
    const double h = x_[k + 1] - x_[k];
    const double d = (y_[k + 1] - y_[k]) / h;
    const double a = (slope_[k] + slope_[k + 1] - 2.0 * d) / (h * h);
    const double b = (3.0 * d - 2.0 * slope_[k] - slope_[k + 1]) / h;
    const double dx = x - x_[k];
    return slope_[k] + dx * (2.0 * b + 3.0 * a * dx);
}

} // namespace orlicz
