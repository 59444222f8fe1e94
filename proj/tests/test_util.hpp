#pragma once

#include <cmath>

namespace testutil {

// Residual of a against b, scaled by the natural magnitude of the
// computation that produced them (exp(|alpha|), 1 + norm, ...).
inline double scaled_err(double a, double b, double scale) {
    return std::abs(a - b) / scale;
}

// Frozen reference values, computed once with exact rational arithmetic
// (200-term factorial series summed over the rationals, then rounded).
inline constexpr double kPhf31[3] = {1.1680583133759186, 1.0418653550989099,
                                     0.50835815998421685};
inline constexpr double kPhf3m2[3] = {-0.24584685308637261, -1.3584492842102043,
                                      1.7396314205331895};
inline constexpr double kPhf32[3] = {2.4236417331853644, 2.6923469977058088,
                                     2.2730673680394768};
inline constexpr double kPhf41[4] = {1.0416914703416917, 1.0083360892258491,
                                     0.50138916447355208, 0.16686510441795246};
inline constexpr double kCosh1 = 1.5430806348152437;
inline constexpr double kSinh1 = 1.1752011936438014;
inline constexpr double kHphf311[3] = {2.7082716604245118, 2.3403922192530695,
                                       2.3403922192530695};

}  // namespace testutil
