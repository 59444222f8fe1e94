#pragma once

#include "hyperphf/phf.hpp"
#include "hyperphf/tricomplex.hpp"

namespace hyperphf {

// Two-variable Hermite polynomial H_n(x, y): the t^n coefficient (times n!)
// of exp(x t + y t^2). Degrees above 170 exceed the double factorial range
// and are a domain error.
double hermite2(int n, double x, double y);

// Three-variable Hermite polynomial, the t^n coefficient (times n!) of
// exp(x t + y t^2 + z t^3):  n! sum_r z^r H_{n-3r}(x, y) / (r! (n-3r)!).
double hermite3(int n, double x, double y, double z);

// Hermite-extended PHF of order 3: the coefficient vector of
// exp(alpha h + eta k). Production path is the exact resummed form
//   he_s(alpha, eta) = sum_{c=0..2} e_c(eta) e_{(s+c) mod 3}(alpha),
// which has no cancellation.
PhfVector hphf3(double alpha, double eta);

// Series oracle: sum_r H_{3r+s}(alpha, eta) / (3r+s)! accumulated through
// the scaled recurrence n h_n = x h_{n-1} + 2 y h_{n-2}, h_n = H_n / n!.
PhfSeriesResult hphf3_series(double alpha, double eta, int max_terms);

// Order-4 analogue: coefficients of exp(alpha h + eta h^2 + delta h^3),
// resummed over the three commuting one-parameter factors.
PhfVector hphf4(double alpha, double eta, double delta);

PhfSeriesResult hphf4_series(double alpha, double eta, double delta, int max_terms);

// Combined-generator action on a tri-complex number. The planar image picks
// up the factor exp(-eta) * exp(w (alpha - eta)), i.e. the modulus scales by
// exp(-(alpha + eta)/2).
TriComplex hermite_rotate(const TriComplex& zeta, double alpha, double eta);

}  // namespace hyperphf
