#ifndef FIBOTOMIC_MODFACTOR_HPP
#define FIBOTOMIC_MODFACTOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibotomic/families.hpp"
#include "fibotomic/poly.hpp"

namespace fibotomic {

// ---- generic Z_p[x] helpers -------------------------------------------------

ModPoly mod_rem(const ModPoly& f, const ModPoly& g);
ModPoly make_monic(const ModPoly& f);
ModPoly mod_gcd(const ModPoly& f, const ModPoly& g);  // monic gcd
// base^e mod f, exponent an arbitrary-precision integer.
ModPoly mod_powmod(const ModPoly& base, const mpz_class& e, const ModPoly& f);

// ---- factorization ----------------------------------------------------------

// Pairwise-coprime squarefree parts whose weighted product is f. Handles the
// characteristic-p descent f(x) = u(x^p) = u(x)^p. Parts are sorted by
// (multiplicity, degree, coefficients).
std::vector<std::pair<ModPoly, unsigned>> squarefree_decompose(const ModPoly& f);

struct ModFactorization {
  ModPoly input;
  std::vector<std::pair<ModPoly, unsigned>> factors;  // (monic irreducible, mult)
};

// Complete factorization: squarefree split, then distinct-degree, then
// equal-degree (Cantor-Zassenhaus; trace splitting for p = 2). Deterministic
// for fixed (f, p, seed); factors sorted by degree then coefficient sequence.
ModFactorization factor_mod_p(const ModPoly& f, std::uint64_t seed);

// ---- shape predictions (n = p^k * m, gcd(p, m) = 1) -------------------------

struct ShapePart {
  unsigned degree = 0;
  unsigned count = 0;
  unsigned multiplicity = 0;
  bool operator==(const ShapePart&) const = default;
};

struct FactorShape {
  enum class Special {
    none,
    prime_power,  // m = 1: congruent to (x^2+4)^{phi(p^k)/2}
    m_equals_2,   // m = 2: congruent to x^{phi(p^k)}
  };
  Special special = Special::none;
  ModPoly congruence;            // the predicted polynomial, special cases only
  std::string display;           // unexpanded form of the congruence
  std::vector<ShapePart> parts;  // m >= 3: exactly one part
  std::string str() const;
};

// Minimal-degree search straight from the root-coincidence congruences:
// smallest delta >= 1 with  [p^delta = 1 (4) and s p^delta = +-s (2m)]  or
// [p^delta = 3 (4) and s p^delta = m +- s (2m)]  for odd p; for p = 2 the
// smallest delta with 2^delta = +-1 (m). Never builds an extension field,
// so it is independent of the factorization engine.
unsigned delta_oracle(std::uint64_t p, unsigned m, unsigned s);

struct DeltaResult {
  unsigned delta = 0;
  std::string case_label;
};

// The closed-form case table on (p mod 4, u mod 4, p^{u/2} mod 2m) for odd p,
// u the order of p mod 2m; for p = 2, on the order of 2 mod m.
DeltaResult delta_formula(std::uint64_t p, unsigned m);

FactorShape predict_shape(unsigned n, std::uint32_t p);

// ---- reconciliation ----------------------------------------------------------

struct ReconciliationReport {
  unsigned n = 0;
  std::uint32_t p = 0;
  unsigned k = 0;
  unsigned m = 1;
  FactorShape predicted;
  ModFactorization observed;
  std::vector<ShapePart> observed_parts;
  bool congruence_ok = false;  // m<=2: literal congruence; m>=3: Psi_m^{phi(p^k)}
  bool shape_ok = false;
  bool product_ok = false;
  std::optional<unsigned> formula_delta;
  std::optional<unsigned> oracle_delta;
  bool oracle_s_independent = true;
  bool delta_three_way_ok = true;  // vacuous for m <= 2
  std::string detail;              // first mismatch, empty when ok
  bool ok() const {
    return congruence_ok && shape_ok && product_ok && delta_three_way_ok;
  }
};

ReconciliationReport reconcile(unsigned n, std::uint32_t p, std::uint64_t seed,
                               FamilyCache& cache);

std::string shape_parts_str(const std::vector<ShapePart>& parts);

}  // namespace fibotomic

#endif
