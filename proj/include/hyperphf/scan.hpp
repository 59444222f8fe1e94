#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hyperphf/phf.hpp"

namespace hyperphf::scan {

struct SampleRow {
    double alpha;
    std::vector<double> values;
    double sum_residual;  // |sum e_s - exp(alpha)| / exp(|alpha|)
};

// Number of grid points for alpha_i = from + i*step, from <= alpha_i <= to
// (with a half-ulp-ish slack on the right edge).
std::size_t grid_size(double from, double to, double step);

// PHF table over a uniform alpha grid. The parallel version fills rows with
// an OpenMP loop; each row is an independent pure evaluation, so serial and
// parallel outputs are bit-identical.
std::vector<SampleRow> sample_grid(int order, double from, double to, double step);
std::vector<SampleRow> sample_grid_serial(int order, double from, double to, double step);

// Serial reference for the residual-scan reduction.
template <class F>
double max_over_serial(std::size_t n, F&& f) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, f(i));
    }
    return worst;
}

// OpenMP max-reduction over i -> residual(i). max is exactly associative, so
// the result matches the serial reference bitwise.
template <class F>
double max_over(std::size_t n, F&& f) {
#ifdef _OPENMP
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        worst = std::max(worst, f(static_cast<std::size_t>(i)));
    }
    return worst;
#else
    return max_over_serial(n, std::forward<F>(f));
#endif
}

}  // namespace hyperphf::scan
