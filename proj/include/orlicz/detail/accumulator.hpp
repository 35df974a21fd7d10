#ifndef ORLICZ_DETAIL_ACCUMULATOR_HPP
#define ORLICZ_DETAIL_ACCUMULATOR_HPP

#include "orlicz/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace orlicz::detail {

inline constexpr std::size_t kMaxViolations = 32;

// Collects (lhs <= rhs) samples into a CheckReport; margins are normalized
// by max(1, |lhs|, |rhs|) per sample.
class Accumulator {
public:
    explicit Accumulator(std::string name, double tol_rel = 1e-9) {
        rep_.name = std::move(name);
        rep_.tolerance_rel = tol_rel;
        rep_.worst_margin = std::numeric_limits<double>::infinity();
        rep_.worst_margin_rel = std::numeric_limits<double>::infinity();
    }

    void add(std::vector<double> input, double lhs, double rhs) {
        ++rep_.samples;
        const double margin = rhs - lhs;
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        const double rel = margin / scale;
        if (rel < rep_.worst_margin_rel) {
            rep_.worst_margin_rel = rel;
            rep_.worst_margin = margin;
        }
        if (rel < -rep_.tolerance_rel && rep_.violations.size() < kMaxViolations)
            rep_.violations.push_back({std::move(input), lhs, rhs});
    }

    CheckReport finish() {
        rep_.passed = rep_.samples > 0 &&
                      rep_.worst_margin_rel >= -rep_.tolerance_rel;
        return std::move(rep_);
    }

private:
    CheckReport rep_;
};

} // namespace orlicz::detail

#endif
