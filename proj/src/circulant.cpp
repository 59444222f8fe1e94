#include "hyperphf/circulant.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hyperphf {

namespace {

constexpr int kExpmTaylorCap = 200;

std::vector<std::complex<double>> unit_roots(int m) {
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / m;
        roots[static_cast<std::size_t>(k)] = {std::cos(theta), std::sin(theta)};
    }
    return roots;
}

// Inverse transform of eigenvalues back to (real) coefficients.
std::vector<double> coeffs_from_eigenvalues(int m, const std::vector<std::complex<double>>& mu) {
    const auto roots = unit_roots(m);
    std::vector<double> c(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < m; ++j) {
            const int idx = ((-j * k) % m + m) % m;
            acc += mu[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>(idx)];
        }
        c[static_cast<std::size_t>(k)] = acc.real() / m;
    }
    return c;
}

}  // namespace

Circulant::Circulant(int order, std::vector<double> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 2) {
        throw std::domain_error("Circulant: order must be >= 2");
    }
    if (coeffs_.size() != static_cast<std::size_t>(order_)) {
        throw std::domain_error("Circulant: coefficient count must equal the order");
    }
    for (double c : coeffs_) {
        if (!std::isfinite(c)) {
            throw std::domain_error("Circulant: coefficients must be finite");
        }
    }
}

Circulant Circulant::identity(int m) {
    std::vector<double> c(static_cast<std::size_t>(m), 0.0);
    c[0] = 1.0;
    return Circulant(m, std::move(c));
}

Circulant Circulant::zero(int m) {
    return Circulant(m, std::vector<double>(static_cast<std::size_t>(m), 0.0));
}

double Circulant::norm1() const noexcept {
    double s = 0.0;
    for (double c : coeffs_) s += std::abs(c);
    return s;
}

double Circulant::max_abs_coeff() const noexcept {
    double s = 0.0;
    for (double c : coeffs_) s = std::max(s, std::abs(c));
    return s;
}

Circulant shift_power(int m, int p) {
    if (m < 2) {
        throw std::domain_error("shift_power: order must be >= 2");
    }
    std::vector<double> c(static_cast<std::size_t>(m), 0.0);
    c[static_cast<std::size_t>((p % m + m) % m)] = 1.0;
    return Circulant(m, std::move(c));
}

Circulant circ_mul(const Circulant& a, const Circulant& b) {
    if (a.order() != b.order()) {
        throw std::domain_error("circ_mul: order mismatch");
    }
    const int m = a.order();
    std::vector<double> c(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            c[static_cast<std::size_t>((i + j) % m)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return Circulant(m, std::move(c));
}

std::vector<std::complex<double>> circ_eigenvalues(const Circulant& a) {
    const int m = a.order();
    const auto roots = unit_roots(m);
    std::vector<std::complex<double>> lambda(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < m; ++k) {
            const int idx = (j * k) % m;
            acc += a[static_cast<std::size_t>(k)] * roots[static_cast<std::size_t>(idx)];
        }
        lambda[static_cast<std::size_t>(j)] = acc;
    }
    return lambda;
}

double circ_det(const Circulant& a) {
    std::complex<double> det{1.0, 0.0};
    for (const auto& lambda : circ_eigenvalues(a)) {
        det *= lambda;
    }
    return det.real();
}

Circulant circ_expm(const Circulant& a) {
    const int m = a.order();
    auto mu = circ_eigenvalues(a);
    for (auto& v : mu) v = std::exp(v);
    return Circulant(m, coeffs_from_eigenvalues(m, mu));
}

Circulant circ_expm_series(const Circulant& a, double tol) {
    if (!(tol > 0.0)) {
        throw std::domain_error("circ_expm_series: tol must be positive");
    }
    const int m = a.order();
    constexpr double eps = std::numeric_limits<double>::epsilon();

    // Scale down until norm1 <= 0.5, Taylor to convergence, square back.
    int squarings = 0;
    double scale = 1.0;
    double norm = a.norm1();
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    std::vector<double> scaled = a.coeffs();
    for (double& c : scaled) c *= scale;
    const Circulant b(m, std::move(scaled));

    Circulant sum = Circulant::identity(m);
    Circulant term = Circulant::identity(m);
    const double stop = std::max(eps, std::min(tol, 1.0) * 0.125);
    int small_run = 0;
    for (int k = 1; k <= kExpmTaylorCap; ++k) {
        Circulant next = circ_mul(term, b);
        std::vector<double> tc = next.coeffs();
        for (double& c : tc) c /= k;
        term = Circulant(m, std::move(tc));

        std::vector<double> sc = sum.coeffs();
        for (int i = 0; i < m; ++i) sc[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
        sum = Circulant(m, std::move(sc));

        if (term.max_abs_coeff() <= stop * sum.max_abs_coeff()) {
            if (++small_run >= 3) break;
        } else {
            small_run = 0;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        sum = circ_mul(sum, sum);
    }
    return sum;
}

std::vector<std::vector<double>> to_dense(const Circulant& a) {
    const int m = a.order();
    std::vector<std::vector<double>> d(static_cast<std::size_t>(m),
                                       std::vector<double>(static_cast<std::size_t>(m)));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                a[static_cast<std::size_t>(((c - r) % m + m) % m)];
        }
    }
    return d;
}

}  // namespace hyperphf
