#include "hyperphf/scan.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperphf::scan {

namespace {

double sum_residual_of(const double* values, int order, double alpha) {
    double s = 0.0;
    for (int j = 0; j < order; ++j) s += values[j];
    return std::abs(s - std::exp(alpha)) / std::exp(std::abs(alpha));
}

}  // namespace

std::size_t grid_size(double from, double to, double step) {
    if (!(step > 0.0)) {
        throw std::domain_error("grid_size: step must be positive");
    }
    if (from > to) {
        throw std::domain_error("grid_size: from must not exceed to");
    }
    return 1 + static_cast<std::size_t>(std::floor((to - from) / step + 1e-9));
}

std::vector<SampleRow> sample_grid_serial(int order, double from, double to, double step) {
    const std::size_t n = grid_size(from, to, step);
    std::vector<SampleRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha = from + static_cast<double>(i) * step;
        const PhfVector e = phf_eval(PhfOrder(order), alpha);
        rows[i] = {alpha, e.values(), sum_residual_of(e.values().data(), order, alpha)};
    }
    return rows;
}

std::vector<SampleRow> sample_grid(int order, double from, double to, double step) {
    const std::size_t n = grid_size(from, to, step);
    const auto m = static_cast<std::size_t>(order);

    // Evaluate into one flat buffer so the parallel loop does not touch the
    // allocator; rows are assembled afterwards.
    std::vector<double> flat(n * m);
    std::vector<double> residuals(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const auto u = static_cast<std::size_t>(i);
        const double alpha = from + static_cast<double>(i) * step;
        double* out = flat.data() + u * m;
        phf_eval_into(PhfOrder(order), alpha, {out, m});
        residuals[u] = sum_residual_of(out, order, alpha);
    }

    std::vector<SampleRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* out = flat.data() + i * m;
        rows[i] = {from + static_cast<double>(i) * step,
                   std::vector<double>(out, out + m), residuals[i]};
    }
    return rows;
}

}  // namespace hyperphf::scan
