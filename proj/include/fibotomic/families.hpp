#ifndef FIBOTOMIC_FAMILIES_HPP
#define FIBOTOMIC_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <string>

#include "fibotomic/poly.hpp"

namespace fibotomic {

// Memoized generators for the three polynomial families. Values are computed
// outside the lock and inserted if absent, so concurrent callers may duplicate
// work but always observe identical polynomials; references stay valid because
// entries are never erased.
class FamilyCache {
 public:
  // F_1 = 1, F_2 = x, F_n = x*F_{n-1} + F_{n-2}; degree n-1.
  const IntPoly& fibonacci(unsigned n);

  // Psi_1 = 1; for n >= 2 the Moebius quotient prod_{d|n} F_d^{mu(n/d)},
  // realized as one exact division of divisor products. Degree phi(n), monic.
  const IntPoly& fibotomic(unsigned n);

  // Phi_1 = x - 1; Moebius quotient of the x^d - 1 family. Degree phi(n).
  const IntPoly& cyclotomic(unsigned n);

 private:
  using Table = std::map<unsigned, IntPoly>;
  const IntPoly& store(Table& table, unsigned n, IntPoly value);
  const IntPoly* lookup(Table& table, unsigned n);

  std::mutex mu_;
  Table fib_, psi_, phi_;
};

// Psi_n(0) per the constant-term theorem: 0 for n = 2, p for n = 2*p^alpha,
// 1 otherwise.
std::uint64_t psi_constant_term(std::uint64_t n);

// Phi_n(1): p when n = p^alpha, else 1. Requires n >= 2.
std::uint64_t phi_at_one(std::uint64_t n);

// One fibotomic identity check Psi_{pm} vs its Psi_m expression; the case
// label records which of the four (p,m) dispatch arms applied:
//   a: p = 2, 2 | m   via i^phi(m) * Psi_m(i(x^2+2)) in ZZ[i], projected
//   b: p = 2, 2 ∤ m   via even substitution z^2 -> -(x^2+4)
//   c: p > 2, p | m   via Psi_m(x * Psi_{2p})
//   d: p > 2, p ∤ m   via exact division by Psi_m
struct PsiPmReport {
  std::uint32_t p = 0;
  unsigned m = 0;
  char case_label = '?';
  IntPoly lhs;  // Psi_{pm}
  IntPoly rhs;  // the identity's right-hand side
  bool equal = false;
  std::string note;  // set when the check failed with a reason
  bool ok() const { return equal && note.empty(); }
};

PsiPmReport verify_psi_pm(std::uint32_t p, unsigned m, FamilyCache& cache);

enum class Family { fibonacci, fibotomic };

// Bivariate view of the homogenized polynomial: the represented object is
// sum_j c_j x^j y^{total_degree - j}, reconstructed from the univariate base
// by the weight rule. total_degree always equals deg(base).
struct HomogeneousView {
  IntPoly base;
  unsigned total_degree = 0;
};

HomogeneousView homogenize(Family family, unsigned n, FamilyCache& cache);

IntPoly specialize_y(const HomogeneousView& view, long y0);

}  // namespace fibotomic

#endif
