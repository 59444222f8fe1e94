#include "hyperphf/phf.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <numbers>

namespace hyperphf {

namespace {

constexpr int kSeriesTermCap = 400;
// Orders up to this bound run without heap allocation (cached roots, stack
// scratch); larger orders fall back to local buffers.
constexpr int kMaxCachedOrder = 32;

void require_finite(double alpha, const char* who) {
    if (!std::isfinite(alpha)) {
        throw std::domain_error(std::string(who) + ": alpha must be finite");
    }
}

std::vector<std::complex<double>> make_roots(int m) {
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / m;
        roots[static_cast<std::size_t>(k)] = {std::cos(theta), std::sin(theta)};
    }
    return roots;
}

// w^k for w = exp(2*pi*i/m), cached per order.
const std::complex<double>* cached_roots(int m) {
    static std::array<std::vector<std::complex<double>>, kMaxCachedOrder + 1> cache;
    static std::once_flag flags[kMaxCachedOrder + 1];
    std::call_once(flags[m], [m] { cache[static_cast<std::size_t>(m)] = make_roots(m); });
    return cache[static_cast<std::size_t>(m)].data();
}

// Taylor series with Kahan accumulation into caller buffers of length m.
// Returns true when three consecutive terms fell below machine epsilon
// times the running partial sum of exp(alpha).
bool series_into(int m, double alpha, int max_terms, double* sum, double* comp) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const int cap = std::min(max_terms, kSeriesTermCap);
    for (int s = 0; s < m; ++s) {
        sum[s] = 0.0;
        comp[s] = 0.0;
    }
    double total = 0.0;
    double term = 1.0;  // alpha^k / k!
    int small_run = 0;
    for (int k = 0; k < cap; ++k) {
        const int s = k % m;
        const double y = term - comp[s];
        const double t = sum[s] + y;
        comp[s] = (t - sum[s]) - y;
        sum[s] = t;
        total += term;

        if (std::abs(term) <= eps * std::abs(total)) {
            if (++small_run >= 3) return true;
        } else {
            small_run = 0;
        }
        term = term * alpha / (k + 1);
    }
    return false;
}

// Root-of-unity resolution into a caller buffer of length m.
void closed_form_into(int m, double alpha, double* out) {
    const std::complex<double>* roots;
    std::vector<std::complex<double>> local_roots;
    if (m <= kMaxCachedOrder) {
        roots = cached_roots(m);
    } else {
        local_roots = make_roots(m);
        roots = local_roots.data();
    }

    std::array<std::complex<double>, kMaxCachedOrder> mu_stack;
    std::vector<std::complex<double>> mu_heap;
    std::complex<double>* mu = mu_stack.data();
    if (m > kMaxCachedOrder) {
        mu_heap.resize(static_cast<std::size_t>(m));
        mu = mu_heap.data();
    }
    for (int j = 0; j < m; ++j) {
        mu[j] = std::exp(roots[j] * alpha);
    }

    for (int s = 0; s < m; ++s) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < m; ++j) {
            // w^{-js} = roots[(-js) mod m]
            const int idx = ((-j * s) % m + m) % m;
            acc += mu[j] * roots[idx];
        }
        out[s] = acc.real() / m;
    }
}

void eval_into(int m, double alpha, double* out) {
    // For |alpha| <= 1 the Taylor series has no cancellation, converges in a
    // couple dozen terms, and is exact at alpha = 0; the closed form there
    // carries ~1e-16 trig-representation noise into the zero components.
    // Beyond that the roles reverse and the closed form takes over.
    if (std::abs(alpha) <= 1.0) {
        std::array<double, kMaxCachedOrder> comp_stack;
        std::vector<double> comp_heap;
        double* comp = comp_stack.data();
        if (m > kMaxCachedOrder) {
            comp_heap.resize(static_cast<std::size_t>(m));
            comp = comp_heap.data();
        }
        series_into(m, alpha, kSeriesTermCap, out, comp);
        return;
    }
    closed_form_into(m, alpha, out);
}

}  // namespace

PhfVector::PhfVector(PhfOrder order, std::vector<double> values)
    : order_(order), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(order_.value())) {
        throw std::domain_error("PhfVector: value count must equal the order");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::domain_error("PhfVector: values must be finite");
        }
    }
}

double PhfVector::sum() const noexcept {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
}

void phf_eval_into(PhfOrder order, double alpha, std::span<double> out) {
    require_finite(alpha, "phf_eval_into");
    const int m = order.value();
    if (out.size() != static_cast<std::size_t>(m)) {
        throw std::domain_error("phf_eval_into: output span must have length equal to the order");
    }
    eval_into(m, alpha, out.data());
}

PhfVector phf_eval(PhfOrder order, double alpha) {
    require_finite(alpha, "phf_eval");
    const int m = order.value();
    std::vector<double> vals(static_cast<std::size_t>(m));
    eval_into(m, alpha, vals.data());
    return PhfVector(order, std::move(vals));
}

PhfVector phf_closed_form(PhfOrder order, double alpha) {
    require_finite(alpha, "phf_closed_form");
    const int m = order.value();
    std::vector<double> vals(static_cast<std::size_t>(m));
    closed_form_into(m, alpha, vals.data());
    return PhfVector(order, std::move(vals));
}

PhfSeriesResult phf_eval_series(PhfOrder order, double alpha, int max_terms) {
    require_finite(alpha, "phf_eval_series");
    if (max_terms < 1) {
        throw std::domain_error("phf_eval_series: max_terms must be >= 1");
    }
    const int m = order.value();
    std::vector<double> sum(static_cast<std::size_t>(m));
    std::vector<double> comp(static_cast<std::size_t>(m));
    const bool converged = series_into(m, alpha, max_terms, sum.data(), comp.data());
    return {PhfVector(order, std::move(sum)), converged};
}

PhfVector phf_add(const PhfVector& u, const PhfVector& v) {
    if (u.order() != v.order()) {
        throw std::domain_error("phf_add: order mismatch");
    }
    const int m = u.order();
    std::vector<double> w(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            w[static_cast<std::size_t>((i + j) % m)] +=
                u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
        }
    }
    return PhfVector(PhfOrder(m), std::move(w));
}

PhfVector phf_derivative(const PhfVector& v, int k) {
    if (k < 0) {
        throw std::domain_error("phf_derivative: k must be >= 0");
    }
    const int m = v.order();
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) {
        const int src = ((s - k) % m + m) % m;
        out[static_cast<std::size_t>(s)] = v[static_cast<std::size_t>(src)];
    }
    return PhfVector(PhfOrder(m), std::move(out));
}

CubicIdentityValues cubic_identities(const PhfVector& v, double alpha) {
    if (v.order() != 3) {
        throw std::domain_error("cubic_identities: order must be 3");
    }
    const double e0 = v[0];
    const double e1 = v[1];
    const double e2 = v[2];

    const double c0 = e0 * e0 * e0;
    const double c1 = e1 * e1 * e1;
    const double c2 = e2 * e2 * e2;
    const double c3 = 3.0 * e0 * e1 * e2;
    const double cubic = c0 + c1 + c2 - c3;

    const double q0 = e0 * e0;
    const double q1 = e1 * e1;
    const double q2 = e2 * e2;
    const double q01 = e0 * e1;
    const double q12 = e1 * e2;
    const double q02 = e0 * e2;
    const double quadratic = q0 + q1 + q2 - q01 - q12 - q02;

    const double cubic_scale = 1.0 + std::abs(c0) + std::abs(c1) + std::abs(c2) + std::abs(c3);
    const double quad_scale =
        1.0 + q0 + q1 + q2 + std::abs(q01) + std::abs(q12) + std::abs(q02);

    return {cubic, quadratic, std::abs(cubic - 1.0) / cubic_scale,
            std::abs(quadratic - std::exp(-alpha)) / quad_scale};
}

}  // namespace hyperphf
