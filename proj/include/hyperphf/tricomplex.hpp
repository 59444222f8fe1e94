#pragma once

#include "hyperphf/circulant.hpp"

namespace hyperphf {

// The tri-complex number x*1 + y*h + z*k in the commutative order-3
// circulant algebra. The planar (Eisenstein) image fixes the unit as
// w = exp(+2*pi*i/3) = (-1 + i*sqrt(3))/2, so the image of (x, y, z) is
// x + y*w + z*w^2 with imaginary part +(sqrt(3)/2)(y - z).
struct TriComplex {
    double x;
    double y;
    double z;
};

struct PlanePoint {
    double re;
    double im;
};

struct PolarForm {
    double modulus;    // sqrt(x^2 + y^2 + z^2 - xy - xz - zy)
    double phase;      // quadrant-correct angle of the planar image
    double trace_sum;  // v = x + y + z
    bool degenerate;   // modulus == 0; phase reported as 0
};

// Exponential factorization zeta = exp(beta) * phf(3, gamma).
struct Decomposition {
    double beta;
    double gamma;
};

// a + w*b with the exact norm a^2 - ab + b^2.
struct EisensteinNumber {
    double a;
    double b;
};

struct OrthoCoords {
    double xi1;
    double xi2;
    double xi3;
};

Circulant to_circulant(const TriComplex& zeta);
TriComplex from_circulant(const Circulant& c);  // order must be 3

// x^3 + y^3 + z^3 - 3xyz, the determinant of the circulant view.
double det_norm(const TriComplex& zeta);

PolarForm polar(const TriComplex& zeta);

// Requires det_norm > 0 and trace_sum > 0 (the real-logarithm branch);
// otherwise throws a domain error naming the violated condition.
Decomposition decompose(const TriComplex& zeta);

TriComplex compose(double beta, double gamma);

// Planar image x + y*w + z*w^2 under the convention above.
PlanePoint to_plane(const TriComplex& zeta);

// Action of exp(alpha * h): multiplies the planar image by exp(w * alpha),
// scaling the modulus by exp(-alpha/2).
TriComplex rotate(const TriComplex& zeta, double alpha);

// exp(alpha/2) * rotate: the modulus-preserving transform (invariant circle).
TriComplex invariant_rotate(const TriComplex& zeta, double alpha);

// Orthonormal coordinates xi = (1/sqrt(6)) M (x,y,z) with M rows
// (2,-1,-1), (0,sqrt3,-sqrt3), (sqrt2,sqrt2,sqrt2). The pair (xi1, xi2) is
// sqrt(2/3) times the planar image; xi3 = trace_sum / sqrt(3).
OrthoCoords ortho_coords(const TriComplex& zeta);

double eisenstein_norm(const EisensteinNumber& rho);

// Shear (a, b) -> (a - b/2, (sqrt(3)/2) b); Euclidean norm^2 equals the
// Eisenstein norm.
PlanePoint eisenstein_to_cartesian(const EisensteinNumber& rho);

// Pseudo-rotation ((cos a, -sin(a+pi/6)), (sin a, cos(a+pi/6))) applied to
// (a, b); preserves the Eisenstein norm for every angle.
PlanePoint pseudo_rotation(const EisensteinNumber& rho, double alpha);

}  // namespace hyperphf
