// Benchmark: serial reference vs OpenMP path for the two scan kernels
// (grid sampling and identity-residual reduction). Checks agreement before
// timing, since the parallel path must match the serial one bitwise.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "hyperphf/phf.hpp"
#include "hyperphf/rng.hpp"
#include "hyperphf/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hyperphf;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double residual_at(std::size_t i) {
    SplitMix64 g(mix_seed(0, i));
    const double a = g.uniform(-20.0, 20.0);
    return cubic_identities(phf_eval(PhfOrder(3), a), a).cubic_residual;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t points = 500000;
    if (argc > 1) points = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available, both paths run serially\n");
#endif
    std::printf("points: %zu\n\n", points);

    {
        auto t0 = std::chrono::steady_clock::now();
        const double serial = scan::max_over_serial(points, residual_at);
        const double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const double parallel = scan::max_over(points, residual_at);
        const double tp = seconds_since(t0);

        if (serial != parallel) {
            std::printf("MISMATCH: serial %.17g vs parallel %.17g\n", serial, parallel);
            return 1;
        }
        std::printf("identity residual scan : serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                    ts * 1e3, tp * 1e3, ts / tp);
    }

    {
        const double from = -10.0, to = 10.0;
        const double step = (to - from) / static_cast<double>(points - 1);

        auto t0 = std::chrono::steady_clock::now();
        const auto serial = scan::sample_grid_serial(3, from, to, step);
        const double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const auto parallel = scan::sample_grid(3, from, to, step);
        const double tp = seconds_since(t0);

        if (serial.size() != parallel.size()) {
            std::printf("MISMATCH: row counts differ\n");
            return 1;
        }
        for (std::size_t i = 0; i < serial.size(); ++i) {
            if (serial[i].values != parallel[i].values ||
                serial[i].sum_residual != parallel[i].sum_residual) {
                std::printf("MISMATCH at row %zu\n", i);
                return 1;
            }
        }
        std::printf("grid sampler           : serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                    ts * 1e3, tp * 1e3, ts / tp);
    }
    return 0;
}
