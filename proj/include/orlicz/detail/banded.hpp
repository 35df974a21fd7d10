#ifndef ORLICZ_DETAIL_BANDED_HPP
#define ORLICZ_DETAIL_BANDED_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace orlicz::detail {

// Small banded LU without pivoting (bandwidth kb each side).  The solver
// Hessians are Schroedinger-like band matrices for which this is stable;
// a vanishing pivot gets a tiny diagonal shift and one refactor attempt.
class BandedLU {
public:
    BandedLU(std::size_t n, std::size_t kb)
        : n_(n), kb_(kb), a_((2 * kb + 1) * n, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a_[idx(i, j)]; }
    double get(std::size_t i, std::size_t j) const { return a_[idx(i, j)]; }

    void clear() { std::fill(a_.begin(), a_.end(), 0.0); }

    // returns false if a pivot collapsed even after the diagonal shift
    bool factor() {
        factored_ = a_;
        if (eliminate()) return true;
        factored_ = a_;
        double scale = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            scale = std::max(scale, std::abs(get(i, i)));
        for (std::size_t i = 0; i < n_; ++i)
            factored_[idx(i, i)] += 1e-12 * (scale > 0.0 ? scale : 1.0);
        return eliminate();
    }

    void solve(std::vector<double>& b) const {
        for (std::size_t k = 0; k < n_; ++k) {
            const std::size_t iend = std::min(n_ - 1, k + kb_);
            for (std::size_t i = k + 1; i <= iend; ++i)
                b[i] -= factored_[idx(i, k)] * b[k];
        }
        for (std::size_t k = n_; k-- > 0;) {
            const std::size_t jend = std::min(n_ - 1, k + kb_);
            double s = b[k];
            for (std::size_t j = k + 1; j <= jend; ++j)
                s -= factored_[idx(k, j)] * b[j];
            b[k] = s / factored_[idx(k, k)];
        }
    }

private:
    std::size_t idx(std::size_t i, std::size_t j) const {
        const std::ptrdiff_t band =
            static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j) +
            static_cast<std::ptrdiff_t>(kb_);
        return static_cast<std::size_t>(band) * n_ + j;
    }

    bool eliminate() {
        for (std::size_t k = 0; k < n_; ++k) {
            const double piv = factored_[idx(k, k)];
            if (!(std::abs(piv) > 1e-300)) return false;
            const std::size_t iend = std::min(n_ - 1, k + kb_);
            for (std::size_t i = k + 1; i <= iend; ++i) {
                const double m = factored_[idx(i, k)] / piv;
                factored_[idx(i, k)] = m;
                for (std::size_t j = k + 1; j <= iend; ++j)
                    factored_[idx(i, j)] -= m * factored_[idx(k, j)];
            }
        }
        return true;
    }

    std::size_t n_, kb_;
    std::vector<double> a_, factored_;
};

} // namespace orlicz::detail

#endif
