#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperphf::checks {

struct CheckResult {
    std::string name;
    double max_residual;
    double tolerance;
    bool pass;
};

// tol rescales every check proportionally: a check whose reference tolerance
// is 1e-8 runs at 1e-8 * (tol / 1e-12). Residuals are scaled against the
// natural magnitude of each identity (exp(|alpha|) and friends).
struct SuiteOptions {
    double tol = 1e-12;
    std::uint64_t seed = 0;
};

std::vector<CheckResult> run_phf_checks(const SuiteOptions& opt);
std::vector<CheckResult> run_tricomplex_checks(const SuiteOptions& opt);
std::vector<CheckResult> run_hermite_checks(const SuiteOptions& opt);
std::vector<CheckResult> run_crystallo_checks(const SuiteOptions& opt);

}  // namespace hyperphf::checks
