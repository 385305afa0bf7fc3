#ifndef FIBOTOMIC_RESDISC_HPP
#define FIBOTOMIC_RESDISC_HPP

#include <string>

#include "fibotomic/poly.hpp"

namespace fibotomic {

// Exact signed integer result of a resultant/discriminant computation.
// sign is 0 exactly when the magnitude is 0.
struct SignedMagnitude {
  int sign = 0;
  mpz_class magnitude;

  static SignedMagnitude of(mpz_class v) {
    SignedMagnitude s;
    s.sign = sgn(v);
    s.magnitude = abs(v);
    return s;
  }
  mpz_class value() const { return sign < 0 ? mpz_class(-magnitude) : magnitude; }
  bool operator==(const SignedMagnitude& o) const {
    return sign == o.sign && magnitude == o.magnitude;
  }
  std::string str() const { return value().get_str(); }
};

// Ratio in lowest terms with positive denominator.
struct ExactRatio {
  mpz_class num;
  mpz_class den = 1;
  bool operator==(const ExactRatio&) const = default;
  std::string str() const { return num.get_str() + "/" + den.get_str(); }
};

// Convention used throughout: res(f,g) = det Syl(f,g) = lc(f)^{deg g} *
// prod g(alpha) over the roots alpha of f. Both engines return the same
// value; they share no code path past the input checks.

// Fraction-free (Bareiss) elimination on the dense Sylvester matrix.
SignedMagnitude resultant_sylvester(const IntPoly& f, const IntPoly& g);

// Subresultant polynomial remainder sequence.
SignedMagnitude resultant_subresultant(const IntPoly& f, const IntPoly& g);

enum class ResultantEngine { sylvester, subresultant };

SignedMagnitude resultant(const IntPoly& f, const IntPoly& g,
                          ResultantEngine engine);

// Delta(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f); degree-1 inputs give 1.
SignedMagnitude discriminant(
    const IntPoly& f, ResultantEngine engine = ResultantEngine::subresultant);

// Closed forms. Every division below is asserted exact; an inexact division
// would falsify the theorem being evaluated and raises
// internal_invariant_violation instead of rounding.
SignedMagnitude disc_formula_psi(unsigned n);
SignedMagnitude disc_formula_phi(unsigned n);

// Delta(Psi_n)/Delta(Phi_n): 2^{phi(n)}/p for prime powers, else 2^{phi(n)}.
ExactRatio disc_ratio(unsigned n);

// p^{phi(m)} when n/m is a prime power p^alpha, else 1. Requires 2 <= m < n.
SignedMagnitude res_formula_psi(unsigned m, unsigned n);
SignedMagnitude res_formula_phi(unsigned m, unsigned n);

// Homogenized closed forms: value * y^{y_exponent}.
struct HomogValue {
  unsigned long y_exponent = 0;
  SignedMagnitude value;
};

HomogValue homog_disc_psi(unsigned n);
HomogValue homog_res_psi(unsigned m, unsigned n);

}  // namespace fibotomic

#endif
