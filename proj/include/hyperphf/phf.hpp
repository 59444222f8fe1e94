#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace hyperphf {

// Order m >= 2 of a pseudo-hyperbolic family: the exponential Taylor series
// split by residue class mod m. m = 2 degenerates to (cosh, sinh).
class PhfOrder {
public:
    explicit PhfOrder(int m) : m_(m) {
        if (m < 2) throw std::domain_error("PhfOrder: order must be >= 2");
    }
    int value() const noexcept { return m_; }
    friend bool operator==(PhfOrder a, PhfOrder b) noexcept { return a.m_ == b.m_; }

private:
    int m_;
};

// One evaluation (e_0(alpha), ..., e_{m-1}(alpha)). Values are validated to
// be finite and of length m at construction.
class PhfVector {
public:
    PhfVector(PhfOrder order, std::vector<double> values);

    int order() const noexcept { return order_.value(); }
    double operator[](std::size_t s) const { return values_[s]; }
    const std::vector<double>& values() const noexcept { return values_; }
    double sum() const noexcept;

private:
    PhfOrder order_;
    std::vector<double> values_;
};

struct PhfSeriesResult {
    PhfVector values;
    bool converged;
};

// Production evaluation. For |alpha| > 1 this is the root-of-unity
// resolution
//   e_s(alpha) = (1/m) sum_j w^{-js} exp(w^j alpha),  w = exp(2*pi*i/m),
// whose addends stay at comparable magnitude, so there is no catastrophic
// cancellation for large negative alpha (the Taylor series has it badly).
// For |alpha| <= 1 the series is used instead: it is exact at alpha = 0 and
// free of the closed form's trig-representation noise.
PhfVector phf_eval(PhfOrder order, double alpha);

// Allocation-free variant for hot loops; out.size() must equal the order.
// Same arithmetic as phf_eval, so results are bit-identical.
void phf_eval_into(PhfOrder order, double alpha, std::span<double> out);

// Direct Taylor summation with Kahan accumulation; reference oracle path.
// Stops once three consecutive terms fall below machine epsilon times the
// running partial sum of exp(alpha); `converged` is false if the cap
// (min(max_terms, 400)) is reached first.
PhfSeriesResult phf_eval_series(PhfOrder order, double alpha, int max_terms);

// Discrete-Fourier closed form, spelled out as its own entry point so tests
// can triangulate it against phf_eval and the series.
PhfVector phf_closed_form(PhfOrder order, double alpha);

// Addition theorem as cyclic convolution: w_k = sum_{i+j == k (mod m)} u_i v_j.
// For u = phf(m, a), v = phf(m, b) this equals phf(m, a + b).
PhfVector phf_add(const PhfVector& u, const PhfVector& v);

// k-th derivative as an index shift: component s of d^k/dalpha^k maps to
// the source component (s - k) mod m.
PhfVector phf_derivative(const PhfVector& v, int k);

struct CubicIdentityValues {
    double cubic;      // e0^3 + e1^3 + e2^3 - 3 e0 e1 e2, identically 1
    double quadratic;  // e0^2 + e1^2 + e2^2 - e0 e1 - e1 e2 - e0 e2, equals exp(-alpha)
    double cubic_residual;      // |cubic - 1| / (1 + sum |cubic terms|)
    double quadratic_residual;  // |quadratic - exp(-alpha)| / (1 + sum |quadratic terms|)
};

// The two order-3 identities evaluated on v = phf(3, alpha), together with
// their scaled residuals against the exact right-hand sides.
CubicIdentityValues cubic_identities(const PhfVector& v, double alpha);

}  // namespace hyperphf
