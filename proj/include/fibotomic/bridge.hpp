#ifndef FIBOTOMIC_BRIDGE_HPP
#define FIBOTOMIC_BRIDGE_HPP

#include <string>

#include "fibotomic/families.hpp"
#include "fibotomic/poly.hpp"

namespace fibotomic {

// Element a(x) + b(x)*t of QQ[x][t]/(t^2 - (x^2+4)); t stands for
// sqrt(x^2+4), so omega = (x+t)/2 and omega^{-1} = (-x+t)/2 are exact units
// with omega * omega^{-1} = 1. Representation on (a, b) is unique, so
// equality is component-wise.
class OmegaElement {
 public:
  OmegaElement() = default;  // zero
  OmegaElement(RatPoly a, RatPoly b) : a_(std::move(a)), b_(std::move(b)) {}

  static OmegaElement omega();
  static OmegaElement omega_inv();
  static OmegaElement one();
  static OmegaElement from_int_poly(const IntPoly& f);

  const RatPoly& rational_part() const { return a_; }
  const RatPoly& radical_part() const { return b_; }

  bool operator==(const OmegaElement& o) const {
    return a_ == o.a_ && b_ == o.b_;
  }

  friend OmegaElement operator+(const OmegaElement& u, const OmegaElement& v);
  friend OmegaElement operator-(const OmegaElement& u, const OmegaElement& v);
  friend OmegaElement operator-(const OmegaElement& u);
  friend OmegaElement operator*(const OmegaElement& u, const OmegaElement& v);

  // Square-and-multiply; negative exponents only for the four canonical
  // units +-omega, +-omega^{-1} (not_invertible otherwise).
  OmegaElement pow(long e) const;

  // True when every denominator in both components is a power of two; the
  // only division these constructions introduce is the /2 in omega.
  bool denominators_are_powers_of_two() const;

  std::string str() const;

 private:
  RatPoly a_, b_;
};

struct BridgeReport {
  unsigned n = 0;
  bool equal = false;
  bool dyadic = false;  // both sides carry only power-of-two denominators
  std::string lhs, rhs;  // rendered sides, for failure reporting
  bool ok() const { return equal && dyadic; }
};

// Phi_n(-omega^2) == sign * omega^{phi(n)} * Psi_n(x), sign = -1 only at n=2.
BridgeReport verify_bridge(unsigned n, FamilyCache& cache);

// (omega + omega^{-1}) * F_n(x) == omega^n - (-omega)^{-n}.
BridgeReport verify_webb_parberry(unsigned n, FamilyCache& cache);

// omega^p - omega^{-p} == x * Psi_{2p}(x), p an odd prime.
BridgeReport verify_omega_power(std::uint32_t p, FamilyCache& cache);

}  // namespace fibotomic

#endif
