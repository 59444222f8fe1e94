#include "hyperphf/hermite.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperphf {

namespace {

// Largest n with n! representable in double.
constexpr int kDegreeCap = 170;
constexpr int kSeriesTermCap = 400;

void require_finite(double v, const char* who) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(who) + ": argument must be finite");
    }
}

void check_degree(int n, const char* who) {
    if (n < 0) {
        throw std::domain_error(std::string(who) + ": degree must be >= 0");
    }
    if (n > kDegreeCap) {
        throw std::domain_error(std::string(who) +
                                ": degree exceeds the double-precision factorial range (170)");
    }
}

}  // namespace

double hermite2(int n, double x, double y) {
    check_degree(n, "hermite2");
    // coeff_r = n! / ((n-2r)! r!), accumulated multiplicatively.
    double coeff = 1.0;
    double sum = 0.0;
    for (int r = 0; r <= n / 2; ++r) {
        sum += coeff * std::pow(x, n - 2 * r) * std::pow(y, r);
        coeff *= static_cast<double>(n - 2 * r) * static_cast<double>(n - 2 * r - 1) /
                 static_cast<double>(r + 1);
    }
    return sum;
}

double hermite3(int n, double x, double y, double z) {
    check_degree(n, "hermite3");
    // coeff_r = n! / (r! (n-3r)!)
    double coeff = 1.0;
    double sum = 0.0;
    for (int r = 0; r <= n / 3; ++r) {
        sum += coeff * std::pow(z, r) * hermite2(n - 3 * r, x, y);
        coeff *= static_cast<double>(n - 3 * r) * static_cast<double>(n - 3 * r - 1) *
                 static_cast<double>(n - 3 * r - 2) / static_cast<double>(r + 1);
    }
    return sum;
}

PhfVector hphf3(double alpha, double eta) {
    require_finite(alpha, "hphf3");
    require_finite(eta, "hphf3");
    const PhfVector ea = phf_eval(PhfOrder(3), alpha);
    const PhfVector eh = phf_eval(PhfOrder(3), eta);
    std::vector<double> out(3, 0.0);
    for (int s = 0; s < 3; ++s) {
        for (int c = 0; c < 3; ++c) {
            out[static_cast<std::size_t>(s)] +=
                eh[static_cast<std::size_t>(c)] * ea[static_cast<std::size_t>((s + c) % 3)];
        }
    }
    return PhfVector(PhfOrder(3), std::move(out));
}

PhfSeriesResult hphf3_series(double alpha, double eta, int max_terms) {
    require_finite(alpha, "hphf3_series");
    require_finite(eta, "hphf3_series");
    if (max_terms < 1) {
        throw std::domain_error("hphf3_series: max_terms must be >= 1");
    }
    const int cap = std::min(max_terms, kSeriesTermCap);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    // h_n = H_n(alpha, eta) / n!, via n h_n = alpha h_{n-1} + 2 eta h_{n-2}.
    std::vector<double> sum(3, 0.0);
    std::vector<double> comp(3, 0.0);
    double hm1 = 1.0, hm2 = 0.0;
    double total = 1.0;
    sum[0] = 1.0;
    int small_run = 0;
    bool converged = false;

    for (int n = 1; n < cap; ++n) {
        const double hn = (alpha * hm1 + 2.0 * eta * hm2) / n;
        const auto s = static_cast<std::size_t>(n % 3);
        const double y = hn - comp[s];
        const double t = sum[s] + y;
        comp[s] = (t - sum[s]) - y;
        sum[s] = t;
        total += hn;
        hm2 = hm1;
        hm1 = hn;

        if (std::abs(hn) <= eps * std::abs(total)) {
            if (++small_run >= 3) {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    return {PhfVector(PhfOrder(3), std::move(sum)), converged};
}

PhfVector hphf4(double alpha, double eta, double delta) {
    require_finite(alpha, "hphf4");
    require_finite(eta, "hphf4");
    require_finite(delta, "hphf4");
    const PhfVector ea = phf_eval(PhfOrder(4), alpha);
    const PhfVector eh = phf_eval(PhfOrder(4), eta);
    const PhfVector ed = phf_eval(PhfOrder(4), delta);
    std::vector<double> out(4, 0.0);
    for (int s = 0; s < 4; ++s) {
        for (int c = 0; c < 4; ++c) {
            for (int d = 0; d < 4; ++d) {
                // exp(a h) exp(e h^2) exp(d h^3): index i + 2c + 3d == s (mod 4)
                out[static_cast<std::size_t>(s)] += ea[static_cast<std::size_t>((s + 2 * c + d) % 4)] *
                                                    eh[static_cast<std::size_t>(c)] *
                                                    ed[static_cast<std::size_t>(d)];
            }
        }
    }
    return PhfVector(PhfOrder(4), std::move(out));
}

PhfSeriesResult hphf4_series(double alpha, double eta, double delta, int max_terms) {
    require_finite(alpha, "hphf4_series");
    require_finite(eta, "hphf4_series");
    require_finite(delta, "hphf4_series");
    if (max_terms < 1) {
        throw std::domain_error("hphf4_series: max_terms must be >= 1");
    }
    const int cap = std::min(max_terms, kSeriesTermCap);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    // h_n = H^(3)_n / n!, via n h_n = x h_{n-1} + 2 y h_{n-2} + 3 z h_{n-3}.
    std::vector<double> sum(4, 0.0);
    std::vector<double> comp(4, 0.0);
    double hm1 = 1.0, hm2 = 0.0, hm3 = 0.0;
    double total = 1.0;
    sum[0] = 1.0;
    int small_run = 0;
    bool converged = false;

    for (int n = 1; n < cap; ++n) {
        const double hn = (alpha * hm1 + 2.0 * eta * hm2 + 3.0 * delta * hm3) / n;
        const auto s = static_cast<std::size_t>(n % 4);
        const double y = hn - comp[s];
        const double t = sum[s] + y;
        comp[s] = (t - sum[s]) - y;
        sum[s] = t;
        total += hn;
        hm3 = hm2;
        hm2 = hm1;
        hm1 = hn;

        if (std::abs(hn) <= eps * std::abs(total)) {
            if (++small_run >= 3) {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    return {PhfVector(PhfOrder(4), std::move(sum)), converged};
}

TriComplex hermite_rotate(const TriComplex& zeta, double alpha, double eta) {
    const PhfVector he = hphf3(alpha, eta);
    const Circulant r = circ_mul(Circulant(3, he.values()), to_circulant(zeta));
    return from_circulant(r);
}

}  // namespace hyperphf
