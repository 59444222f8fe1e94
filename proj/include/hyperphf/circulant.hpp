#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace hyperphf {

// An m x m circulant stored as its m first-row coefficients: c_j multiplies
// the j-th power of the cyclic shift matrix h (h^m = 1). Dense entry (r, c)
// is coeffs[(c - r) mod m], so row 0 reads (c_0, c_1, ..., c_{m-1}).
class Circulant {
public:
    Circulant(int order, std::vector<double> coeffs);

    static Circulant identity(int m);
    static Circulant zero(int m);

    int order() const noexcept { return order_; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    double operator[](std::size_t j) const { return coeffs_[j]; }

    double trace() const noexcept { return order_ * coeffs_[0]; }
    // Operator 1-norm of the dense realization (every column holds each
    // coefficient exactly once).
    double norm1() const noexcept;
    double max_abs_coeff() const noexcept;

private:
    int order_;
    std::vector<double> coeffs_;
};

// h^(p mod m): all coefficients zero except a 1 at index p mod m.
Circulant shift_power(int m, int p);

// Cyclic convolution of coefficient vectors; equals the dense matrix product.
Circulant circ_mul(const Circulant& a, const Circulant& b);

// Eigenvalues in the shared Fourier basis: lambda_j = sum_k c_k w^(jk).
std::vector<std::complex<double>> circ_eigenvalues(const Circulant& a);

// Determinant as the product of eigenvalues; the imaginary residue is pure
// round-off for real coefficients and the real part is returned.
double circ_det(const Circulant& a);

// Matrix exponential via the eigenbasis: exponentiate each eigenvalue and
// transform back. circ_expm(alpha * h) carries the PHF coefficient vector.
Circulant circ_expm(const Circulant& a);

// Scaling-and-squaring Taylor exponential, kept as an independent oracle for
// circ_expm. Guarantees ||result - exp(a)||_inf <= tol * exp(norm1(a)).
Circulant circ_expm_series(const Circulant& a, double tol);

std::vector<std::vector<double>> to_dense(const Circulant& a);

}  // namespace hyperphf
