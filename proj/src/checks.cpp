#include "hyperphf/checks.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "hyperphf/circulant.hpp"
#include "hyperphf/crystallo.hpp"
#include "hyperphf/hermite.hpp"
#include "hyperphf/phf.hpp"
#include "hyperphf/rng.hpp"
#include "hyperphf/scan.hpp"
#include "hyperphf/tricomplex.hpp"

namespace hyperphf::checks {

namespace {

constexpr double kBaseTol = 1e-12;

// Fixed deterministic alpha grid shared by the suites.
constexpr std::array<double, 10> kGrid = {-10.0, -5.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0};

CheckResult make_result(std::string name, double residual, double ref_tol, double user_tol) {
    const double tol = ref_tol * (user_tol / kBaseTol);
    return {std::move(name), residual, tol, residual <= tol};
}

CheckResult make_exact(std::string name, int violations) {
    return {std::move(name), static_cast<double>(violations), 0.0, violations == 0};
}

double nat_scale(double alpha) { return std::exp(std::abs(alpha)); }

double max_abs3(const TriComplex& z) {
    return std::max({std::abs(z.x), std::abs(z.y), std::abs(z.z)});
}

TriComplex random_tricomplex(SplitMix64& g, double lo, double hi) {
    return {g.uniform(lo, hi), g.uniform(lo, hi), g.uniform(lo, hi)};
}

std::complex<double> eisenstein_unit() {
    return {-0.5, std::numbers::sqrt3 / 2.0};
}

// ---- phf suite ------------------------------------------------------------

double check_sum_rule(std::uint64_t seed) {
    double worst = 0.0;
    for (int m = 2; m <= 8; ++m) {
        for (double a : kGrid) {
            const PhfVector e = phf_eval(PhfOrder(m), a);
            worst = std::max(worst, std::abs(e.sum() - std::exp(a)) / nat_scale(a));
        }
        worst = std::max(worst, scan::max_over(1000, [&](std::size_t i) {
            SplitMix64 g(mix_seed(seed, i + 1000 * static_cast<std::size_t>(m)));
            const double a = g.uniform(-20.0, 20.0);
            const PhfVector e = phf_eval(PhfOrder(m), a);
            return std::abs(e.sum() - std::exp(a)) / nat_scale(a);
        }));
    }
    return worst;
}

double check_cubic_identity(std::uint64_t seed, bool quadratic) {
    auto residual = [&](double a) {
        const PhfVector e = phf_eval(PhfOrder(3), a);
        const CubicIdentityValues id = cubic_identities(e, a);
        return quadratic ? id.quadratic_residual : id.cubic_residual;
    };
    double worst = 0.0;
    for (double a : kGrid) worst = std::max(worst, residual(a));
    worst = std::max(worst, scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i));
        return residual(g.uniform(-20.0, 20.0));
    }));
    return worst;
}

double check_addition(std::uint64_t seed) {
    double worst = 0.0;
    for (int m : {2, 3, 4}) {
        worst = std::max(worst, scan::max_over(1000, [&](std::size_t i) {
            SplitMix64 g(mix_seed(seed, i + 7000 * static_cast<std::size_t>(m)));
            const double a = g.uniform(-5.0, 5.0);
            const double b = g.uniform(-5.0, 5.0);
            const PhfVector w = phf_add(phf_eval(PhfOrder(m), a), phf_eval(PhfOrder(m), b));
            const PhfVector d = phf_eval(PhfOrder(m), a + b);
            const double scale = std::exp(std::abs(a) + std::abs(b));
            double r = 0.0;
            for (int s = 0; s < m; ++s) {
                r = std::max(r, std::abs(w[static_cast<std::size_t>(s)] -
                                         d[static_cast<std::size_t>(s)]) / scale);
            }
            return r;
        }));
    }
    return worst;
}

double check_derivative(std::uint64_t /*seed*/) {
    constexpr double h = 1e-6;
    double worst = 0.0;
    for (int m : {2, 3, 5}) {
        for (double a : kGrid) {
            const PhfVector up = phf_eval(PhfOrder(m), a + h);
            const PhfVector dn = phf_eval(PhfOrder(m), a - h);
            const PhfVector d1 = phf_derivative(phf_eval(PhfOrder(m), a), 1);
            for (int s = 0; s < m; ++s) {
                const double fd = (up[static_cast<std::size_t>(s)] -
                                   dn[static_cast<std::size_t>(s)]) / (2.0 * h);
                worst = std::max(worst,
                                 std::abs(fd - d1[static_cast<std::size_t>(s)]) / nat_scale(a));
            }
        }
    }
    return worst;
}

double check_oracle_triangle(std::uint64_t seed) {
    auto triangle = [](int m, double a) {
        const PhfVector e1 = phf_eval(PhfOrder(m), a);
        const PhfVector e2 = phf_eval_series(PhfOrder(m), a, 400).values;
        const PhfVector e3 = phf_closed_form(PhfOrder(m), a);
        const double scale = nat_scale(a);
        double r = 0.0;
        for (int s = 0; s < m; ++s) {
            const auto u = static_cast<std::size_t>(s);
            r = std::max({r, std::abs(e1[u] - e2[u]) / scale, std::abs(e2[u] - e3[u]) / scale,
                          std::abs(e1[u] - e3[u]) / scale});
        }
        return r;
    };
    double worst = 0.0;
    for (int m : {2, 3, 4, 5, 7}) {
        for (double a : kGrid) worst = std::max(worst, triangle(m, a));
        worst = std::max(worst, scan::max_over(500, [&](std::size_t i) {
            SplitMix64 g(mix_seed(seed, i + 31000 * static_cast<std::size_t>(m)));
            return triangle(m, g.uniform(-10.0, 10.0));
        }));
    }
    return worst;
}

double check_cosh_sinh(std::uint64_t seed) {
    auto residual = [](double a) {
        const PhfVector e = phf_eval(PhfOrder(2), a);
        const double scale = nat_scale(a);
        return std::max(std::abs(e[0] - std::cosh(a)) / scale,
                        std::abs(e[1] - std::sinh(a)) / scale);
    };
    double worst = 0.0;
    for (double a : kGrid) worst = std::max(worst, residual(a));
    worst = std::max(worst, scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 777));
        return residual(g.uniform(-10.0, 10.0));
    }));
    return worst;
}

Circulant random_circulant(SplitMix64& g, int max_order) {
    const int m = g.uniform_int(2, max_order);
    std::vector<double> c(static_cast<std::size_t>(m));
    for (double& v : c) v = g.uniform(-2.0, 2.0);
    return Circulant(m, std::move(c));
}

double check_ring_homomorphism(std::uint64_t seed) {
    return scan::max_over(200, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 40000));
        const Circulant a = random_circulant(g, 6);
        std::vector<double> bc(static_cast<std::size_t>(a.order()));
        for (double& v : bc) v = g.uniform(-2.0, 2.0);
        const Circulant b(a.order(), std::move(bc));
        const auto prod = to_dense(circ_mul(a, b));
        const auto da = to_dense(a);
        const auto db = to_dense(b);
        const int m = a.order();
        double r = 0.0;
        for (int row = 0; row < m; ++row) {
            for (int col = 0; col < m; ++col) {
                double dense = 0.0;
                for (int k = 0; k < m; ++k) {
                    dense += da[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] *
                             db[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)];
                }
                r = std::max(r, std::abs(prod[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] - dense) /
                                    (1.0 + a.norm1() * b.norm1()));
            }
        }
        return r;
    });
}

double check_commutativity(std::uint64_t seed) {
    return scan::max_over(200, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 50000));
        const Circulant a = random_circulant(g, 6);
        std::vector<double> bc(static_cast<std::size_t>(a.order()));
        for (double& v : bc) v = g.uniform(-2.0, 2.0);
        const Circulant b(a.order(), std::move(bc));
        const Circulant ab = circ_mul(a, b);
        const Circulant ba = circ_mul(b, a);
        double r = 0.0;
        for (int k = 0; k < a.order(); ++k) {
            r = std::max(r, std::abs(ab[static_cast<std::size_t>(k)] - ba[static_cast<std::size_t>(k)]) /
                                (1.0 + a.norm1() * b.norm1()));
        }
        return r;
    });
}

double check_det_trace_law(std::uint64_t seed) {
    return scan::max_over(500, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 60000));
        const Circulant a = random_circulant(g, 6);
        const double det = circ_det(circ_expm(a));
        const double expected = std::exp(a.trace());
        return std::abs(det - expected) / expected;
    });
}

double check_exp_addition(std::uint64_t seed) {
    return scan::max_over(500, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 70000));
        const int m = g.uniform_int(2, 6);
        const double a = g.uniform(-3.0, 3.0);
        const double b = g.uniform(-3.0, 3.0);
        auto scaled_shift = [&](double t) {
            std::vector<double> c(static_cast<std::size_t>(m), 0.0);
            c[1] = t;
            return Circulant(m, std::move(c));
        };
        const Circulant lhs = circ_expm(scaled_shift(a + b));
        const Circulant rhs = circ_mul(circ_expm(scaled_shift(a)), circ_expm(scaled_shift(b)));
        const double scale = std::exp(std::abs(a) + std::abs(b));
        double r = 0.0;
        for (int k = 0; k < m; ++k) {
            r = std::max(r, std::abs(lhs[static_cast<std::size_t>(k)] - rhs[static_cast<std::size_t>(k)]) / scale);
        }
        return r;
    });
}

double check_exp_taylor_agreement(std::uint64_t seed) {
    return scan::max_over(500, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 80000));
        const Circulant a = random_circulant(g, 6);
        const Circulant eig = circ_expm(a);
        const Circulant tay = circ_expm_series(a, 1e-13);
        const double scale = std::exp(a.norm1());
        double r = 0.0;
        for (int k = 0; k < a.order(); ++k) {
            r = std::max(r, std::abs(eig[static_cast<std::size_t>(k)] - tay[static_cast<std::size_t>(k)]) / scale);
        }
        return r;
    });
}

// ---- tricomplex suite -----------------------------------------------------

double check_det_factorization(std::uint64_t seed) {
    return scan::max_over(10000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 100000));
        const TriComplex z = random_tricomplex(g, -5.0, 5.0);
        const double det = det_norm(z);
        const PolarForm p = polar(z);
        return std::abs(det - p.trace_sum * p.modulus * p.modulus) / (1.0 + std::abs(det));
    });
}

double check_cubic_sum_identity(std::uint64_t seed) {
    return scan::max_over(2000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 110000));
        const double a = g.uniform(-5.0, 5.0);
        const double b = g.uniform(-5.0, 5.0);
        const double c = g.uniform(-5.0, 5.0);
        const double lhs = a * a * a + b * b * b + c * c * c - 3.0 * a * b * c;
        const double rhs = (a + b + c) * (a * a + b * b + c * c - a * b - b * c - a * c);
        const double scale = 1.0 + std::abs(a * a * a) + std::abs(b * b * b) +
                             std::abs(c * c * c) + 3.0 * std::abs(a * b * c);
        return std::abs(lhs - rhs) / scale;
    });
}

double check_decompose_roundtrip(std::uint64_t seed) {
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 120000));
        const double beta = g.uniform(-3.0, 3.0);
        const double gamma = g.uniform(-2.5, 2.5);
        const Decomposition d = decompose(compose(beta, gamma));
        return std::max(std::abs(d.beta - beta), std::abs(d.gamma - gamma));
    });
}

double check_compose_roundtrip(std::uint64_t seed) {
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 130000));
        const TriComplex z = compose(g.uniform(-3.0, 3.0), g.uniform(-2.5, 2.5));
        const Decomposition d = decompose(z);
        const TriComplex back = compose(d.beta, d.gamma);
        const double scale = 1.0 + max_abs3(z);
        return std::max({std::abs(back.x - z.x), std::abs(back.y - z.y),
                         std::abs(back.z - z.z)}) / scale;
    });
}

double check_decomposition_routes(std::uint64_t seed) {
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 140000));
        const TriComplex z = compose(g.uniform(-3.0, 3.0), g.uniform(-2.5, 2.5));
        const Decomposition d = decompose(z);
        const PolarForm p = polar(z);
        // cube roots of |zeta|^2 |v| and |v|^2 / |zeta|^2
        const double beta29 = (2.0 * std::log(p.modulus) + std::log(p.trace_sum)) / 3.0;
        const double gamma29 = (2.0 * std::log(p.trace_sum) - 2.0 * std::log(p.modulus)) / 3.0;
        return std::max(std::abs(d.beta - beta29), std::abs(d.gamma - gamma29));
    });
}

double check_rotation_modulus(std::uint64_t seed, bool invariant) {
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + (invariant ? 160000 : 150000)));
        const TriComplex z = random_tricomplex(g, -5.0, 5.0);
        const double alpha = g.uniform(-5.0, 5.0);
        const double mod_in = polar(z).modulus;
        if (invariant) {
            const double mod_out = polar(invariant_rotate(z, alpha)).modulus;
            const double scale = (1.0 + mod_in) * std::exp(1.5 * std::abs(alpha));
            return std::abs(mod_out - mod_in) / scale;
        }
        const double mod_out = polar(rotate(z, alpha)).modulus;
        const double scale = (1.0 + mod_in) * nat_scale(alpha);
        return std::abs(mod_out - std::exp(-0.5 * alpha) * mod_in) / scale;
    });
}

double check_planar_homomorphism(std::uint64_t seed) {
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 170000));
        const TriComplex z = random_tricomplex(g, -5.0, 5.0);
        const double alpha = g.uniform(-5.0, 5.0);
        const PlanePoint lhs = to_plane(rotate(z, alpha));
        const PlanePoint p = to_plane(z);
        const std::complex<double> rhs =
            std::exp(eisenstein_unit() * alpha) * std::complex<double>{p.re, p.im};
        const double scale = (1.0 + max_abs3(z)) * nat_scale(alpha);
        return std::max(std::abs(lhs.re - rhs.real()), std::abs(lhs.im - rhs.imag())) / scale;
    });
}

double check_orthonormal_frame() {
    const double s = 1.0 / std::sqrt(6.0);
    const double s3 = std::numbers::sqrt3;
    const double s2 = std::numbers::sqrt2;
    const double M[3][3] = {{2.0 * s, -s, -s}, {0.0, s3 * s, -s3 * s}, {s2 * s, s2 * s, s2 * s}};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) dot += M[i][k] * M[j][k];
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double check_ortho_planar(std::uint64_t seed) {
    const double planar_scale = std::sqrt(2.0 / 3.0);
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 180000));
        const TriComplex z = random_tricomplex(g, -5.0, 5.0);
        const OrthoCoords xi = ortho_coords(z);
        const PlanePoint p = to_plane(z);
        const double scale = 1.0 + max_abs3(z);
        const double v = z.x + z.y + z.z;
        // Euclidean length preservation of the orthogonal map.
        const double len_in = z.x * z.x + z.y * z.y + z.z * z.z;
        const double len_out = xi.xi1 * xi.xi1 + xi.xi2 * xi.xi2 + xi.xi3 * xi.xi3;
        return std::max({std::abs(xi.xi1 - planar_scale * p.re) / scale,
                         std::abs(xi.xi2 - planar_scale * p.im) / scale,
                         std::abs(xi.xi3 - v / std::numbers::sqrt3) / scale,
                         std::abs(len_in - len_out) / (1.0 + len_in)});
    });
}

double check_eisenstein_norms(std::uint64_t seed) {
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 190000));
        const EisensteinNumber rho{g.uniform(-5.0, 5.0), g.uniform(-5.0, 5.0)};
        const double norm = eisenstein_norm(rho);
        const std::complex<double> c = rho.a + eisenstein_unit() * rho.b;
        const PlanePoint cart = eisenstein_to_cartesian(rho);
        const double cart2 = cart.re * cart.re + cart.im * cart.im;
        return std::max(std::abs(std::norm(c) - norm), std::abs(cart2 - norm)) / (1.0 + norm);
    });
}

double check_pseudo_rotation(std::uint64_t seed) {
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 200000));
        const EisensteinNumber rho{g.uniform(-5.0, 5.0), g.uniform(-5.0, 5.0)};
        const double alpha = g.uniform(-10.0, 10.0);
        const PlanePoint out = pseudo_rotation(rho, alpha);
        const double norm = eisenstein_norm(rho);
        return std::abs(out.re * out.re + out.im * out.im - norm) / (1.0 + norm);
    });
}

// ---- hermite suite ----------------------------------------------------------

double check_h2_generating_function() {
    double worst = 0.0;
    for (double t = -1.0; t <= 1.0; t += 0.25) {
        for (double x = -1.0; x <= 1.0; x += 0.25) {
            for (double y = -1.0; y <= 1.0; y += 0.25) {
                double sum = 0.0;
                double inv_fact = 1.0;
                double tn = 1.0;
                for (int n = 0; n <= 40; ++n) {
                    sum += tn * inv_fact * hermite2(n, x, y);
                    tn *= t;
                    inv_fact /= (n + 1);
                }
                worst = std::max(worst, std::abs(sum - std::exp(x * t + y * t * t)));
            }
        }
    }
    return worst;
}

double check_h3_generating_function() {
    // 60 terms: the cubic generator's tail at |t| = 1 is ~3e-8 after 40
    // terms and ~1e-15 after 60.
    double worst = 0.0;
    for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            for (double y : {-1.0, 0.0, 1.0}) {
                for (double z : {-1.0, 0.0, 1.0}) {
                    double sum = 0.0;
                    double inv_fact = 1.0;
                    double tn = 1.0;
                    for (int n = 0; n <= 60; ++n) {
                        sum += tn * inv_fact * hermite3(n, x, y, z);
                        tn *= t;
                        inv_fact /= (n + 1);
                    }
                    worst = std::max(worst,
                                     std::abs(sum - std::exp(x * t + y * t * t + z * t * t * t)));
                }
            }
        }
    }
    return worst;
}

int check_monomial_degeneration() {
    int violations = 0;
    for (int n = 0; n <= 12; ++n) {
        for (double x : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
            if (hermite2(n, x, 0.0) != std::pow(x, n)) ++violations;
            if (hermite3(n, x, 0.0, 0.0) != std::pow(x, n)) ++violations;
        }
    }
    return violations;
}

double check_resummed_vs_series(std::uint64_t seed) {
    double worst = scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 210000));
        const double a = g.uniform(-3.0, 3.0);
        const double e = g.uniform(-3.0, 3.0);
        const PhfVector prod = hphf3(a, e);
        const PhfSeriesResult ser = hphf3_series(a, e, 400);
        const double scale = std::exp(std::abs(a) + std::abs(e));
        double r = ser.converged ? 0.0 : 1.0;
        for (int s = 0; s < 3; ++s) {
            r = std::max(r, std::abs(prod[static_cast<std::size_t>(s)] -
                                     ser.values[static_cast<std::size_t>(s)]) / scale);
        }
        return r;
    });
    worst = std::max(worst, scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 220000));
        const double a = g.uniform(-2.0, 2.0);
        const double e = g.uniform(-2.0, 2.0);
        const double d = g.uniform(-2.0, 2.0);
        const PhfVector prod = hphf4(a, e, d);
        const PhfSeriesResult ser = hphf4_series(a, e, d, 400);
        const double scale = std::exp(std::abs(a) + std::abs(e) + std::abs(d));
        double r = ser.converged ? 0.0 : 1.0;
        for (int s = 0; s < 4; ++s) {
            r = std::max(r, std::abs(prod[static_cast<std::size_t>(s)] -
                                     ser.values[static_cast<std::size_t>(s)]) / scale);
        }
        return r;
    }));
    return worst;
}

double check_matrix_consistency(std::uint64_t seed) {
    double worst = scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 230000));
        const double a = g.uniform(-3.0, 3.0);
        const double e = g.uniform(-3.0, 3.0);
        const PhfVector he = hphf3(a, e);
        const Circulant m = circ_expm(Circulant(3, {0.0, a, e}));
        const double scale = std::exp(std::abs(a) + std::abs(e));
        double r = 0.0;
        for (int s = 0; s < 3; ++s) {
            r = std::max(r, std::abs(he[static_cast<std::size_t>(s)] - m[static_cast<std::size_t>(s)]) / scale);
        }
        return r;
    });
    worst = std::max(worst, scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 240000));
        const double a = g.uniform(-3.0, 3.0);
        const double e = g.uniform(-3.0, 3.0);
        const double d = g.uniform(-3.0, 3.0);
        const PhfVector he = hphf4(a, e, d);
        const Circulant m = circ_expm(Circulant(4, {0.0, a, e, d}));
        const double scale = std::exp(std::abs(a) + std::abs(e) + std::abs(d));
        double r = 0.0;
        for (int s = 0; s < 4; ++s) {
            r = std::max(r, std::abs(he[static_cast<std::size_t>(s)] - m[static_cast<std::size_t>(s)]) / scale);
        }
        return r;
    }));
    return worst;
}

double check_combined_rotation(std::uint64_t seed) {
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 250000));
        const TriComplex z = random_tricomplex(g, -3.0, 3.0);
        const double a = g.uniform(-3.0, 3.0);
        const double e = g.uniform(-3.0, 3.0);
        const PlanePoint lhs = to_plane(hermite_rotate(z, a, e));
        const PlanePoint rot = to_plane(rotate(z, a - e));
        const double f = std::exp(-e);
        const double scale = (1.0 + max_abs3(z)) *
                             std::max(std::exp(std::abs(a) + std::abs(e)),
                                      std::exp(std::abs(a - e) + std::abs(e)));
        return std::max(std::abs(lhs.re - f * rot.re), std::abs(lhs.im - f * rot.im)) / scale;
    });
}

double check_sum_rules(std::uint64_t seed) {
    return scan::max_over(1000, [&](std::size_t i) {
        SplitMix64 g(mix_seed(seed, i + 260000));
        const double a = g.uniform(-3.0, 3.0);
        const double e = g.uniform(-3.0, 3.0);
        const double d = g.uniform(-3.0, 3.0);
        const double r3 = std::abs(hphf3(a, e).sum() - std::exp(a + e)) /
                          std::exp(std::abs(a) + std::abs(e));
        const double r4 = std::abs(hphf4(a, e, d).sum() - std::exp(a + e + d)) /
                          std::exp(std::abs(a) + std::abs(e) + std::abs(d));
        return std::max(r3, r4);
    });
}

// ---- crystallo suite --------------------------------------------------------

int check_dets_and_orders() {
    int violations = 0;
    for (const PointOperator& op : table()) {
        if (op.det() != 1) ++violations;
        const int n = order_of(op);
        if (n != 1 && n != 2 && n != 3) ++violations;
    }
    return violations;
}

int check_cubic_root_products() {
    const auto& t = table();
    int violations = 0;
    const Mat3 r6sq = compose(t[5], t[5]);
    if (r6sq != t[10].entries()) ++violations;
    if (mat_mul(r6sq, t[5].entries()) != t[0].entries()) ++violations;
    const Mat3 r7sq = compose(t[6], t[6]);
    if (r7sq != t[11].entries()) ++violations;
    if (mat_mul(r7sq, t[6].entries()) != t[0].entries()) ++violations;
    return violations;
}

int check_shift_identification() {
    // As tabulated, R5 is the square of the cyclic shift and R9 the shift
    // itself; together they realize both nontrivial cubic roots of unity.
    const auto& t = table();
    const auto h = to_dense(shift_power(3, 1));
    const auto k = to_dense(shift_power(3, 2));
    int violations = 0;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            const auto rr = static_cast<std::size_t>(r);
            const auto cc = static_cast<std::size_t>(c);
            if (static_cast<double>(t[4].entries()[rr][cc]) != k[rr][cc]) ++violations;
            if (static_cast<double>(t[8].entries()[rr][cc]) != h[rr][cc]) ++violations;
        }
    }
    return violations;
}

int check_cubic_root_set() {
    const auto roots = cubic_roots();
    int violations = 0;
    for (const char* want : {"R5", "R6", "R7", "R9", "R11", "R12"}) {
        bool found = false;
        for (const auto& r : roots) {
            if (r == want) found = true;
        }
        if (!found) ++violations;
    }
    for (const char* reject : {"R1", "R2", "R3", "R4"}) {
        for (const auto& r : roots) {
            if (r == reject) ++violations;
        }
    }
    return violations;
}

int check_closure() {
    const ClosureReport report = closure_report();
    return (report.closed && report.product_count == 12) ? 0 : 1;
}

int check_diagonal_subgroup() {
    const auto& t = table();
    int violations = 0;
    const int ids[3] = {1, 2, 3};  // R2, R3, R4
    for (int i : ids) {
        for (int j : ids) {
            if (compose(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]) !=
                compose(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(i)])) {
                ++violations;
            }
        }
    }
    if (compose(t[1], t[2]) != t[3].entries()) ++violations;
    if (compose(t[1], t[3]) != t[2].entries()) ++violations;
    if (compose(t[2], t[3]) != t[1].entries()) ++violations;
    return violations;
}

int check_lagrange() {
    const ClosureReport report = closure_report();
    if (!report.closed) return 0;  // vacuous when not a group
    int violations = 0;
    for (const PointOperator& op : table()) {
        if (report.product_count % order_of(op) != 0) ++violations;
    }
    return violations;
}

}  // namespace

std::vector<CheckResult> run_phf_checks(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(make_result("sum-rule", check_sum_rule(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("cubic-identity", check_cubic_identity(opt.seed, false), 1e-12, opt.tol));
    out.push_back(make_result("quadratic-identity", check_cubic_identity(opt.seed, true), 1e-12, opt.tol));
    out.push_back(make_result("addition-theorem", check_addition(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("derivative-shift", check_derivative(opt.seed), 1e-8, opt.tol));
    out.push_back(make_result("oracle-triangle", check_oracle_triangle(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("cosh-sinh-degeneration", check_cosh_sinh(opt.seed), 1e-14, opt.tol));
    out.push_back(make_result("ring-homomorphism", check_ring_homomorphism(opt.seed), 1e-13, opt.tol));
    out.push_back(make_result("commutativity", check_commutativity(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("det-trace-law", check_det_trace_law(opt.seed), 1e-10, opt.tol));
    out.push_back(make_result("exp-addition", check_exp_addition(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("exp-taylor-agreement", check_exp_taylor_agreement(opt.seed), 1e-12, opt.tol));
    return out;
}

std::vector<CheckResult> run_tricomplex_checks(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(make_result("det-factorization", check_det_factorization(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("cubic-sum-identity", check_cubic_sum_identity(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("decompose-roundtrip", check_decompose_roundtrip(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("compose-roundtrip", check_compose_roundtrip(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("decomposition-routes", check_decomposition_routes(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("rotation-modulus-law", check_rotation_modulus(opt.seed, false), 1e-12, opt.tol));
    out.push_back(make_result("invariant-rotation", check_rotation_modulus(opt.seed, true), 1e-12, opt.tol));
    out.push_back(make_result("planar-homomorphism", check_planar_homomorphism(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("orthonormal-frame", check_orthonormal_frame(), 1e-15, opt.tol));
    out.push_back(make_result("ortho-planar-consistency", check_ortho_planar(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("eisenstein-norms", check_eisenstein_norms(opt.seed), 1e-13, opt.tol));
    out.push_back(make_result("pseudo-rotation-norm", check_pseudo_rotation(opt.seed), 1e-12, opt.tol));
    return out;
}

std::vector<CheckResult> run_hermite_checks(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(make_result("h2-generating-function", check_h2_generating_function(), 1e-10, opt.tol));
    out.push_back(make_result("h3-generating-function", check_h3_generating_function(), 1e-10, opt.tol));
    out.push_back(make_exact("monomial-degeneration", check_monomial_degeneration()));
    out.push_back(make_result("resummed-vs-series", check_resummed_vs_series(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("matrix-consistency", check_matrix_consistency(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("combined-rotation-planar", check_combined_rotation(opt.seed), 1e-12, opt.tol));
    out.push_back(make_result("sum-rules", check_sum_rules(opt.seed), 1e-12, opt.tol));
    return out;
}

std::vector<CheckResult> run_crystallo_checks(const SuiteOptions& /*opt*/) {
    std::vector<CheckResult> out;
    out.push_back(make_exact("determinants-and-orders", check_dets_and_orders()));
    out.push_back(make_exact("cubic-root-products", check_cubic_root_products()));
    out.push_back(make_exact("shift-identification", check_shift_identification()));
    out.push_back(make_exact("cubic-root-set", check_cubic_root_set()));
    out.push_back(make_exact("closure", check_closure()));
    out.push_back(make_exact("diagonal-subgroup", check_diagonal_subgroup()));
    out.push_back(make_exact("lagrange-divisibility", check_lagrange()));
    return out;
}

}  // namespace hyperphf::checks
