#include "hyperphf/tricomplex.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperphf/phf.hpp"

namespace hyperphf {

namespace {

void require_finite(double v, const char* who) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(who) + ": argument must be finite");
    }
}

}  // namespace

Circulant to_circulant(const TriComplex& zeta) {
    return Circulant(3, {zeta.x, zeta.y, zeta.z});
}

TriComplex from_circulant(const Circulant& c) {
    if (c.order() != 3) {
        throw std::domain_error("from_circulant: order must be 3");
    }
    return {c[0], c[1], c[2]};
}

double det_norm(const TriComplex& zeta) {
    const double x = zeta.x, y = zeta.y, z = zeta.z;
    return x * x * x + y * y * y + z * z * z - 3.0 * x * y * z;
}

PolarForm polar(const TriComplex& zeta) {
    const double x = zeta.x, y = zeta.y, z = zeta.z;
    // Half-sum-of-squares form of x^2+y^2+z^2-xy-xz-zy: nonnegative by
    // construction, no cancellation under the square root.
    const double dxy = x - y, dyz = y - z, dxz = x - z;
    const double mod = std::sqrt(0.5 * (dxy * dxy + dyz * dyz + dxz * dxz));
    const double v = x + y + z;
    if (mod == 0.0) {
        return {0.0, 0.0, v, true};
    }
    const PlanePoint p = to_plane(zeta);
    return {mod, std::atan2(p.im, p.re), v, false};
}

Decomposition decompose(const TriComplex& zeta) {
    const double det = det_norm(zeta);
    if (!(det > 0.0)) {
        throw std::domain_error("non-decomposable: non-positive determinant");
    }
    const double v = zeta.x + zeta.y + zeta.z;
    if (!(v > 0.0)) {
        throw std::domain_error("non-decomposable: non-positive trace sum");
    }
    const double beta = std::log(det) / 3.0;
    return {beta, std::log(v) - beta};
}

TriComplex compose(double beta, double gamma) {
    require_finite(beta, "compose");
    require_finite(gamma, "compose");
    const PhfVector e = phf_eval(PhfOrder(3), gamma);
    const double s = std::exp(beta);
    return {s * e[0], s * e[1], s * e[2]};
}

PlanePoint to_plane(const TriComplex& zeta) {
    constexpr double half_sqrt3 = std::numbers::sqrt3 / 2.0;
    return {zeta.x - 0.5 * (zeta.y + zeta.z), half_sqrt3 * (zeta.y - zeta.z)};
}

TriComplex rotate(const TriComplex& zeta, double alpha) {
    require_finite(alpha, "rotate");
    const PhfVector e = phf_eval(PhfOrder(3), alpha);
    const Circulant r = circ_mul(Circulant(3, e.values()), to_circulant(zeta));
    return from_circulant(r);
}

TriComplex invariant_rotate(const TriComplex& zeta, double alpha) {
    const TriComplex r = rotate(zeta, alpha);
    const double s = std::exp(0.5 * alpha);
    return {s * r.x, s * r.y, s * r.z};
}

OrthoCoords ortho_coords(const TriComplex& zeta) {
    const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
    const double s3 = std::numbers::sqrt3;
    const double s2 = std::numbers::sqrt2;
    const double x = zeta.x, y = zeta.y, z = zeta.z;
    return {inv_sqrt6 * (2.0 * x - y - z),
            inv_sqrt6 * (s3 * y - s3 * z),
            inv_sqrt6 * (s2 * x + s2 * y + s2 * z)};
}

double eisenstein_norm(const EisensteinNumber& rho) {
    return rho.a * rho.a - rho.a * rho.b + rho.b * rho.b;
}

PlanePoint eisenstein_to_cartesian(const EisensteinNumber& rho) {
    constexpr double half_sqrt3 = std::numbers::sqrt3 / 2.0;
    return {rho.a - 0.5 * rho.b, half_sqrt3 * rho.b};
}

PlanePoint pseudo_rotation(const EisensteinNumber& rho, double alpha) {
    require_finite(alpha, "pseudo_rotation");
    constexpr double pi_over_6 = std::numbers::pi / 6.0;
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    const double cs = std::cos(alpha + pi_over_6);
    const double ss = std::sin(alpha + pi_over_6);
    return {c * rho.a - ss * rho.b, s * rho.a + cs * rho.b};
}

}  // namespace hyperphf
