#ifndef FIBOTOMIC_VERIFY_HPP
#define FIBOTOMIC_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fibotomic/families.hpp"

namespace fibotomic {

// Sweep options shared by every suite. jobs = 1 runs the serial reference
// loop; jobs > 1 runs the same instances under OpenMP. Results are merged by
// instance index, so output is byte-identical across job counts.
struct VerifyOptions {
  int jobs = 1;
  std::uint64_t seed = 0;
  // Test fixture: corrupts the fibotomic discriminant closed form by +1 so
  // the mismatch path (exit code 1) can be exercised end to end.
  bool fault_disc_formula = false;
};

struct CheckResult {
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  const CheckResult* first_failure() const;
};

// Serial-or-OpenMP map over instance indices; exceptions become failures.
std::vector<CheckResult> run_indexed(
    std::size_t count, int jobs,
    const std::function<CheckResult(std::size_t)>& fn);

// prod_{d|n} Psi_d = F_n, prod_{d|n} Phi_d = x^n - 1, plus degree = phi(n),
// monic, and opposite-parity coefficients zero; n up to max_n.
SuiteResult run_product_suite(int max_n, const VerifyOptions& opts,
                              FamilyCache& cache);

// Psi_n(0) and Phi_n(1) against their closed forms; n up to max_n.
SuiteResult run_constant_suite(int max_n, const VerifyOptions& opts,
                               FamilyCache& cache);

// The four Psi_{pm} identity cases for p*m <= psi_pm_max, plus the cyclotomic
// counterparts (Phi_{2m}(x) = Phi_m(-x); Phi_{pm} vs Phi_m(x^p)) for
// p <= 13, p*m <= phi_pm_max.
SuiteResult run_identities_suite(int psi_pm_max, int phi_pm_max,
                                 const VerifyOptions& opts, FamilyCache& cache);

// Discriminant engines (both) vs closed forms for Psi and Phi, 2..max_n, and
// the ratio theorem in multiplied form.
SuiteResult run_disc_suite(int max_n, const VerifyOptions& opts,
                           FamilyCache& cache);

// Resultants over all pairs 2 <= m < n <= max_n, subresultant engine vs the
// closed forms; Sylvester cross-agreement for pairs with n <= cross_max.
SuiteResult run_res_suite(int max_n, int cross_max, const VerifyOptions& opts,
                          FamilyCache& cache);

// Extension-ring identities: bridge for 2..bridge_max, Webb-Parberry for
// 1..wp_max, omega-power for odd primes <= omega_max_p.
SuiteResult run_bridge_suite(int bridge_max, int wp_max, int omega_max_p,
                             const VerifyOptions& opts, FamilyCache& cache);

// Mod-p reconciliation over n in 2..max_n and the given primes.
SuiteResult run_modp_suite(int max_n, const std::vector<std::uint32_t>& primes,
                           const VerifyOptions& opts, FamilyCache& cache);

// Homogenized theorems through y-specialization at y0 in {2, 3}.
SuiteResult run_homog_suite(int disc_max, int res_max,
                            const VerifyOptions& opts, FamilyCache& cache);

}  // namespace fibotomic

#endif
