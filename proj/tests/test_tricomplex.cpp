#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hyperphf/hermite.hpp"
#include "hyperphf/phf.hpp"
#include "hyperphf/rng.hpp"
#include "hyperphf/tricomplex.hpp"
#include "test_util.hpp"

using namespace hyperphf;

namespace {

const std::complex<double> kOmega{-0.5, std::numbers::sqrt3 / 2.0};

TriComplex random_tricomplex(SplitMix64& g, double lo, double hi) {
    return {g.uniform(lo, hi), g.uniform(lo, hi), g.uniform(lo, hi)};
}

double max_abs3(const TriComplex& z) {
    return std::max({std::abs(z.x), std::abs(z.y), std::abs(z.z)});
}

}  // namespace

TEST_CASE("det_norm") {
    CHECK(det_norm({1.0, 0.0, 0.0}) == 1.0);
    CHECK(det_norm({2.0, 1.0, 1.0}) == 4.0);
    CHECK(det_norm({1.0, 1.0, 1.0}) == 0.0);
    SUBCASE("agrees with the circulant determinant") {
        SplitMix64 g(41);
        for (int i = 0; i < 200; ++i) {
            const TriComplex z = random_tricomplex(g, -5.0, 5.0);
            const double direct = det_norm(z);
            const double via_circ = circ_det(to_circulant(z));
            CHECK(std::abs(direct - via_circ) <= 1e-12 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("polar form") {
    SUBCASE("unit element") {
        const PolarForm p = polar({1.0, 0.0, 0.0});
        CHECK(p.modulus == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(p.phase == 0.0);
        CHECK(p.trace_sum == 1.0);
        CHECK_FALSE(p.degenerate);
    }
    SUBCASE("y = z kills the phase") {
        const PolarForm p = polar({2.0, 1.0, 1.0});
        CHECK(p.modulus == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(p.phase == 0.0);
        CHECK(p.trace_sum == 4.0);
    }
    SUBCASE("fully symmetric point is degenerate") {
        const PolarForm p = polar({1.0, 1.0, 1.0});
        CHECK(p.modulus == 0.0);
        CHECK(p.phase == 0.0);
        CHECK(p.degenerate);
    }
    SUBCASE("modulus squared equals the quadratic form") {
        SplitMix64 g(43);
        for (int i = 0; i < 500; ++i) {
            const TriComplex z = random_tricomplex(g, -5.0, 5.0);
            const PolarForm p = polar(z);
            const double q = z.x * z.x + z.y * z.y + z.z * z.z - z.x * z.y - z.x * z.z -
                             z.z * z.y;
            CHECK(std::abs(p.modulus * p.modulus - q) <= 1e-12 * (1.0 + std::abs(q)));
        }
    }
    SUBCASE("tangent relation holds where defined") {
        SplitMix64 g(47);
        for (int i = 0; i < 200; ++i) {
            const TriComplex z = random_tricomplex(g, -5.0, 5.0);
            const double denom = 2.0 * z.x - (z.y + z.z);
            if (std::abs(denom) < 0.1) continue;
            const PolarForm p = polar(z);
            const double lhs = std::tan(p.phase);
            const double rhs = std::numbers::sqrt3 * (z.y - z.z) / denom;
            CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("factorization of the determinant") {
    SplitMix64 g(53);
    for (int i = 0; i < 2000; ++i) {
        const TriComplex z = random_tricomplex(g, -5.0, 5.0);
        const PolarForm p = polar(z);
        const double det = det_norm(z);
        CHECK(std::abs(det - p.trace_sum * p.modulus * p.modulus) <=
              1e-12 * (1.0 + std::abs(det)));
    }
}

TEST_CASE("decompose") {
    SUBCASE("identity decomposes to zero") {
        const Decomposition d = decompose({1.0, 0.0, 0.0});
        CHECK(d.beta == 0.0);
        CHECK(d.gamma == 0.0);
    }
    SUBCASE("worked example (2, 1, 1)") {
        const Decomposition d = decompose({2.0, 1.0, 1.0});
        CHECK(std::abs(d.beta - 0.46209812037329684) < 1e-13);
        CHECK(std::abs(d.gamma - 0.92419624074659379) < 1e-13);
    }
    SUBCASE("PHF values decompose to (0, alpha)") {
        const PhfVector e = phf_eval(PhfOrder(3), 1.0);
        const Decomposition d = decompose({e[0], e[1], e[2]});
        CHECK(std::abs(d.beta) < 1e-13);
        CHECK(std::abs(d.gamma - 1.0) < 1e-13);
    }
    SUBCASE("zero determinant rejected") {
        CHECK_THROWS_WITH_AS(decompose({1.0, 1.0, 1.0}),
                             "non-decomposable: non-positive determinant", std::domain_error);
    }
    SUBCASE("negative determinant rejected") {
        CHECK_THROWS_WITH_AS(decompose({-1.0, 0.0, 0.0}),
                             "non-decomposable: non-positive determinant", std::domain_error);
    }
}

TEST_CASE("compose") {
    SUBCASE("origin maps to the unit") {
        const TriComplex z = compose(0.0, 0.0);
        CHECK(z.x == 1.0);
        CHECK(z.y == 0.0);
        CHECK(z.z == 0.0);
    }
    SUBCASE("gamma = 1 reproduces the PHF values") {
        const TriComplex z = compose(0.0, 1.0);
        CHECK(std::abs(z.x - testutil::kPhf31[0]) < 1e-15);
        CHECK(std::abs(z.y - testutil::kPhf31[1]) < 1e-15);
        CHECK(std::abs(z.z - testutil::kPhf31[2]) < 1e-15);
    }
    SUBCASE("pure scaling") {
        const TriComplex z = compose(std::log(2.0), 0.0);
        CHECK(z.x == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(z.y == 0.0);
        CHECK(z.z == 0.0);
    }
    SUBCASE("roundtrip both directions") {
        SplitMix64 g(59);
        for (int i = 0; i < 500; ++i) {
            const double beta = g.uniform(-3.0, 3.0);
            const double gamma = g.uniform(-2.5, 2.5);
            const Decomposition d = decompose(compose(beta, gamma));
            CHECK(std::abs(d.beta - beta) < 1e-12);
            CHECK(std::abs(d.gamma - gamma) < 1e-12);

            const TriComplex z = compose(beta, gamma);
            const Decomposition d2 = decompose(z);
            const TriComplex back = compose(d2.beta, d2.gamma);
            const double scale = 1.0 + max_abs3(z);
            CHECK(std::abs(back.x - z.x) <= 1e-12 * scale);
            CHECK(std::abs(back.y - z.y) <= 1e-12 * scale);
            CHECK(std::abs(back.z - z.z) <= 1e-12 * scale);
        }
    }
    SUBCASE("both closed forms of the decomposition agree") {
        SplitMix64 g(61);
        for (int i = 0; i < 500; ++i) {
            const TriComplex z = compose(g.uniform(-3.0, 3.0), g.uniform(-2.5, 2.5));
            const Decomposition d = decompose(z);
            const PolarForm p = polar(z);
            const double beta2 = std::cbrt(p.modulus * p.modulus * p.trace_sum);
            const double gamma2 =
                std::cbrt(p.trace_sum * p.trace_sum / (p.modulus * p.modulus));
            CHECK(std::abs(std::exp(d.beta) - beta2) <= 1e-12 * (1.0 + beta2));
            CHECK(std::abs(std::exp(d.gamma) - gamma2) <= 1e-12 * (1.0 + gamma2));
        }
    }
}

TEST_CASE("planar image") {
    SUBCASE("unit and symmetric points") {
        const PlanePoint u = to_plane({1.0, 0.0, 0.0});
        CHECK(u.re == 1.0);
        CHECK(u.im == 0.0);
        const PlanePoint s = to_plane({1.0, 1.0, 1.0});
        CHECK(s.re == 0.0);
        CHECK(s.im == 0.0);
    }
    SUBCASE("the shift maps to the Eisenstein unit") {
        const PlanePoint w = to_plane({0.0, 1.0, 0.0});
        CHECK(w.re == doctest::Approx(-0.5).epsilon(1e-15));
        CHECK(w.im == doctest::Approx(0.8660254037844386).epsilon(1e-15));
    }
    SUBCASE("planar modulus equals the polar modulus") {
        SplitMix64 g(67);
        for (int i = 0; i < 500; ++i) {
            const TriComplex z = random_tricomplex(g, -5.0, 5.0);
            const PlanePoint p = to_plane(z);
            const double planar = std::hypot(p.re, p.im);
            CHECK(std::abs(planar - polar(z).modulus) <= 1e-13 * (1.0 + planar));
        }
    }
}

TEST_CASE("rotation") {
    SUBCASE("alpha = 0 is the identity") {
        const TriComplex z{2.0, -1.0, 0.5};
        const TriComplex r = rotate(z, 0.0);
        CHECK(r.x == doctest::Approx(z.x).epsilon(1e-15));
        CHECK(r.y == doctest::Approx(z.y).epsilon(1e-15));
        CHECK(r.z == doctest::Approx(z.z).epsilon(1e-15));
    }
    SUBCASE("acting on the unit produces the PHF vector") {
        const TriComplex r = rotate({1.0, 0.0, 0.0}, 1.0);
        CHECK(std::abs(r.x - testutil::kPhf31[0]) < 1e-14);
        CHECK(std::abs(r.y - testutil::kPhf31[1]) < 1e-14);
        CHECK(std::abs(r.z - testutil::kPhf31[2]) < 1e-14);
    }
    SUBCASE("modulus-1 input scales to exp(-1/2)") {
        const TriComplex r = rotate({2.0, 1.0, 1.0}, 1.0);
        CHECK(std::abs(polar(r).modulus - 0.60653065971263342) < 1e-13);
    }
    SUBCASE("modulus law over random inputs") {
        SplitMix64 g(71);
        for (int i = 0; i < 500; ++i) {
            const TriComplex z = random_tricomplex(g, -5.0, 5.0);
            const double alpha = g.uniform(-5.0, 5.0);
            const double mod_in = polar(z).modulus;
            const double mod_out = polar(rotate(z, alpha)).modulus;
            const double scale = (1.0 + mod_in) * std::exp(std::abs(alpha));
            CHECK(std::abs(mod_out - std::exp(-0.5 * alpha) * mod_in) <= 1e-12 * scale);
        }
    }
    SUBCASE("planar homomorphism") {
        SplitMix64 g(73);
        for (int i = 0; i < 500; ++i) {
            const TriComplex z = random_tricomplex(g, -5.0, 5.0);
            const double alpha = g.uniform(-5.0, 5.0);
            const PlanePoint lhs = to_plane(rotate(z, alpha));
            const PlanePoint p = to_plane(z);
            const std::complex<double> rhs =
                std::exp(kOmega * alpha) * std::complex<double>{p.re, p.im};
            const double scale = (1.0 + max_abs3(z)) * std::exp(std::abs(alpha));
            CHECK(std::abs(lhs.re - rhs.real()) <= 1e-12 * scale);
            CHECK(std::abs(lhs.im - rhs.imag()) <= 1e-12 * scale);
        }
    }
    SUBCASE("rotation shifts the decomposition argument") {
        // R(alpha) compose(beta, gamma) = compose(beta, alpha + gamma)
        SplitMix64 g(79);
        for (int i = 0; i < 200; ++i) {
            const double beta = g.uniform(-2.0, 2.0);
            const double gamma = g.uniform(-2.0, 2.0);
            const double alpha = g.uniform(-2.0, 2.0);
            const TriComplex lhs = rotate(compose(beta, gamma), alpha);
            const TriComplex rhs = compose(beta, alpha + gamma);
            const double scale = 1.0 + max_abs3(rhs);
            CHECK(std::abs(lhs.x - rhs.x) <= 1e-12 * scale);
            CHECK(std::abs(lhs.y - rhs.y) <= 1e-12 * scale);
            CHECK(std::abs(lhs.z - rhs.z) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("invariant rotation") {
    SUBCASE("alpha = 0 is the identity") {
        const TriComplex z{0.3, 1.0, -2.0};
        const TriComplex r = invariant_rotate(z, 0.0);
        CHECK(r.x == doctest::Approx(z.x).epsilon(1e-15));
    }
    SUBCASE("modulus is preserved") {
        const TriComplex r = invariant_rotate({2.0, 1.0, 1.0}, 1.7);
        CHECK(std::abs(polar(r).modulus - 1.0) < 1e-12);
    }
    SUBCASE("planar phase advances by sqrt(3)/2 per unit argument") {
        // A half turn at alpha = 2 pi / sqrt(3), a full turn at twice that.
        const double half_turn = 2.0 * std::numbers::pi / std::numbers::sqrt3;
        const PlanePoint h = to_plane(invariant_rotate({1.0, 0.0, 0.0}, half_turn));
        CHECK(std::abs(h.re + 1.0) < 1e-12);
        CHECK(std::abs(h.im) < 1e-12);
        const PlanePoint f = to_plane(invariant_rotate({1.0, 0.0, 0.0}, 2.0 * half_turn));
        CHECK(std::abs(f.re - 1.0) < 1e-12);
        CHECK(std::abs(f.im) < 1e-12);
    }
    SUBCASE("random modulus preservation") {
        SplitMix64 g(83);
        for (int i = 0; i < 500; ++i) {
            const TriComplex z = random_tricomplex(g, -5.0, 5.0);
            const double alpha = g.uniform(-5.0, 5.0);
            const double mod_in = polar(z).modulus;
            const double mod_out = polar(invariant_rotate(z, alpha)).modulus;
            const double scale = (1.0 + mod_in) * std::exp(1.5 * std::abs(alpha));
            CHECK(std::abs(mod_out - mod_in) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("orthonormal coordinates") {
    SUBCASE("worked points") {
        const OrthoCoords a = ortho_coords({1.0, 1.0, 1.0});
        CHECK(std::abs(a.xi1) < 1e-15);
        CHECK(std::abs(a.xi2) < 1e-15);
        CHECK(std::abs(a.xi3 - 1.7320508075688772) < 1e-15);
        const OrthoCoords b = ortho_coords({1.0, 0.0, 0.0});
        CHECK(std::abs(b.xi1 - 0.81649658092772615) < 1e-15);
        CHECK(b.xi2 == 0.0);
        CHECK(std::abs(b.xi3 - 0.57735026918962584) < 1e-15);
        const OrthoCoords c = ortho_coords({0.0, 0.0, 0.0});
        CHECK(c.xi1 == 0.0);
        CHECK(c.xi2 == 0.0);
        CHECK(c.xi3 == 0.0);
    }
    SUBCASE("the frame matrix is orthogonal to machine precision") {
        const double s = 1.0 / std::sqrt(6.0);
        const double m[3][3] = {{2.0 * s, -s, -s},
                                {0.0, std::numbers::sqrt3 * s, -std::numbers::sqrt3 * s},
                                {std::numbers::sqrt2 * s, std::numbers::sqrt2 * s,
                                 std::numbers::sqrt2 * s}};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                double dot = 0.0;
                for (int k = 0; k < 3; ++k) dot += m[i][k] * m[j][k];
                CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-15);
            }
        }
    }
    SUBCASE("length preservation and planar consistency") {
        SplitMix64 g(89);
        const double planar_scale = std::sqrt(2.0 / 3.0);
        for (int i = 0; i < 500; ++i) {
            const TriComplex z = random_tricomplex(g, -5.0, 5.0);
            const OrthoCoords xi = ortho_coords(z);
            const double len_in = z.x * z.x + z.y * z.y + z.z * z.z;
            const double len_out = xi.xi1 * xi.xi1 + xi.xi2 * xi.xi2 + xi.xi3 * xi.xi3;
            CHECK(std::abs(len_in - len_out) <= 1e-12 * (1.0 + len_in));
            const PlanePoint p = to_plane(z);
            const double scale = 1.0 + max_abs3(z);
            CHECK(std::abs(xi.xi1 - planar_scale * p.re) <= 1e-13 * scale);
            CHECK(std::abs(xi.xi2 - planar_scale * p.im) <= 1e-13 * scale);
            CHECK(std::abs(xi.xi3 - (z.x + z.y + z.z) / std::numbers::sqrt3) <=
                  1e-13 * scale);
        }
    }
}

TEST_CASE("Eisenstein numbers") {
    SUBCASE("norm values") {
        CHECK(eisenstein_norm({1.0, 1.0}) == 1.0);
        CHECK(eisenstein_norm({2.0, 1.0}) == 3.0);
        CHECK(eisenstein_norm({-3.0, 0.0}) == 9.0);
    }
    SUBCASE("cartesian image") {
        const PlanePoint a = eisenstein_to_cartesian({1.0, 0.0});
        CHECK(a.re == 1.0);
        CHECK(a.im == 0.0);
        const PlanePoint b = eisenstein_to_cartesian({0.0, 1.0});
        CHECK(b.re == -0.5);
        CHECK(std::abs(b.im - 0.8660254037844386) < 1e-16);
        const PlanePoint c = eisenstein_to_cartesian({1.0, 1.0});
        CHECK(c.re == 0.5);
        CHECK(std::abs(c.im - 0.8660254037844386) < 1e-16);
    }
    SUBCASE("norm agrees with complex arithmetic") {
        SplitMix64 g(97);
        for (int i = 0; i < 500; ++i) {
            const EisensteinNumber rho{g.uniform(-5.0, 5.0), g.uniform(-5.0, 5.0)};
            const double n = eisenstein_norm(rho);
            const std::complex<double> c = rho.a + kOmega * rho.b;
            CHECK(std::abs(std::norm(c) - n) <= 1e-14 * (1.0 + n));
            const PlanePoint p = eisenstein_to_cartesian(rho);
            CHECK(std::abs(p.re * p.re + p.im * p.im - n) <= 1e-13 * (1.0 + n));
        }
    }
    SUBCASE("norm is positive definite") {
        CHECK(eisenstein_norm({0.0, 0.0}) == 0.0);
        SplitMix64 g(99);
        for (int i = 0; i < 2000; ++i) {
            const double a = g.uniform(-1e3, 1e3);
            // include near-diagonal pairs, where the form is smallest
            const double b = (i % 2 == 0) ? g.uniform(-1e3, 1e3)
                                          : a * (1.0 + g.uniform(-1e-8, 1e-8));
            const double n = eisenstein_norm({a, b});
            CHECK(n >= 0.0);
            if (a != 0.0 || b != 0.0) CHECK(n > 0.0);
        }
    }
}

TEST_CASE("pseudo-rotation") {
    SUBCASE("alpha = 0 reduces to the shear") {
        const PlanePoint a = pseudo_rotation({1.0, 0.0}, 0.0);
        CHECK(a.re == 1.0);
        CHECK(a.im == 0.0);
        const PlanePoint b = pseudo_rotation({0.0, 1.0}, 0.0);
        CHECK(std::abs(b.re + 0.5) < 1e-16);
        CHECK(std::abs(b.im - 0.8660254037844386) < 1e-15);
    }
    SUBCASE("quarter turn of the real unit") {
        const PlanePoint p = pseudo_rotation({1.0, 0.0}, std::numbers::pi / 2.0);
        CHECK(std::abs(p.re) < 1e-16);
        CHECK(std::abs(p.im - 1.0) < 1e-15);
    }
    SUBCASE("norm preservation for random angles") {
        SplitMix64 g(101);
        for (int i = 0; i < 500; ++i) {
            const EisensteinNumber rho{g.uniform(-5.0, 5.0), g.uniform(-5.0, 5.0)};
            const double alpha = g.uniform(-10.0, 10.0);
            const PlanePoint out = pseudo_rotation(rho, alpha);
            const double n = eisenstein_norm(rho);
            CHECK(std::abs(out.re * out.re + out.im * out.im - n) <= 1e-12 * (1.0 + n));
        }
    }
}
