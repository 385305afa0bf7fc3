#include "fibotomic/bridge.hpp"

#include "fibotomic/numth.hpp"

namespace fibotomic {

namespace {

RatPoly rat_half_x() {
  return RatPoly(RatRing{}, {mpq_class(0), mpq_class(1, 2)});
}

RatPoly rat_const(const mpq_class& v) {
  return RatPoly::constant(RatRing{}, v);
}

// x^2 + 4, the reduction of t^2.
const RatPoly& t_squared() {
  static const RatPoly r = rat_poly({4, 0, 1});
  return r;
}

}  // namespace

OmegaElement OmegaElement::omega() {
  return OmegaElement(rat_half_x(), rat_const(mpq_class(1, 2)));
}

OmegaElement OmegaElement::omega_inv() {
  return OmegaElement(-rat_half_x(), rat_const(mpq_class(1, 2)));
}

OmegaElement OmegaElement::one() {
  return OmegaElement(rat_const(1), RatPoly{});
}

OmegaElement OmegaElement::from_int_poly(const IntPoly& f) {
  return OmegaElement(to_rational(f), RatPoly{});
}

OmegaElement operator+(const OmegaElement& u, const OmegaElement& v) {
  return OmegaElement(u.a_ + v.a_, u.b_ + v.b_);
}

OmegaElement operator-(const OmegaElement& u, const OmegaElement& v) {
  return OmegaElement(u.a_ - v.a_, u.b_ - v.b_);
}

OmegaElement operator-(const OmegaElement& u) {
  return OmegaElement(-u.a_, -u.b_);
}

OmegaElement operator*(const OmegaElement& u, const OmegaElement& v) {
  // (a1 + b1 t)(a2 + b2 t) = a1 a2 + b1 b2 (x^2+4) + (a1 b2 + b1 a2) t
  return OmegaElement(u.a_ * v.a_ + u.b_ * v.b_ * t_squared(),
                      u.a_ * v.b_ + u.b_ * v.a_);
}

OmegaElement OmegaElement::pow(long e) const {
  OmegaElement base = *this;
  if (e < 0) {
    if (*this == omega()) {
      base = omega_inv();
    } else if (*this == omega_inv()) {
      base = omega();
    } else if (*this == -omega()) {
      base = -omega_inv();
    } else if (*this == -omega_inv()) {
      base = -omega();
    } else {
      fail(errc::not_invertible,
           "negative powers are supported only for the canonical units");
    }
    e = -e;
  }
  OmegaElement result = one();
  while (e > 0) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

namespace {

bool pow2_denominators(const RatPoly& f) {
  for (const mpq_class& c : f.coeffs()) {
    mpz_class den = c.get_den();
    while (mpz_even_p(den.get_mpz_t())) den /= 2;
    if (den != 1) return false;
  }
  return true;
}

}  // namespace

bool OmegaElement::denominators_are_powers_of_two() const {
  return pow2_denominators(a_) && pow2_denominators(b_);
}

std::string OmegaElement::str() const {
  return "(" + to_string(a_) + ") + (" + to_string(b_) + ")*t";
}

BridgeReport verify_bridge(unsigned n, FamilyCache& cache) {
  if (n < 2) fail(errc::domain_too_small, "verify_bridge requires n >= 2");
  BridgeReport rep;
  rep.n = n;
  const OmegaElement minus_omega_sq = -OmegaElement::omega().pow(2);
  // Horner evaluation of Phi_n at -omega^2 inside the extension ring.
  const IntPoly& phi_n = cache.cyclotomic(n);
  OmegaElement lhs;
  for (std::size_t j = phi_n.coeffs().size(); j-- > 0;) {
    lhs = lhs * minus_omega_sq +
          OmegaElement(RatPoly::constant(RatRing{}, mpq_class(phi_n.coeffs()[j])),
                       RatPoly{});
  }
  OmegaElement rhs = OmegaElement::omega().pow(static_cast<long>(totient(n))) *
                     OmegaElement::from_int_poly(cache.fibotomic(n));
  if (n == 2) rhs = -rhs;
  rep.equal = (lhs == rhs);
  rep.dyadic = lhs.denominators_are_powers_of_two() &&
               rhs.denominators_are_powers_of_two();
  if (!rep.ok()) {
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
  }
  return rep;
}

BridgeReport verify_webb_parberry(unsigned n, FamilyCache& cache) {
  if (n < 1) fail(errc::domain_too_small, "verify_webb_parberry requires n >= 1");
  BridgeReport rep;
  rep.n = n;
  const OmegaElement omega = OmegaElement::omega();
  OmegaElement lhs = (omega + OmegaElement::omega_inv()) *
                     OmegaElement::from_int_poly(cache.fibonacci(n));
  OmegaElement rhs = omega.pow(static_cast<long>(n)) -
                     (-omega).pow(-static_cast<long>(n));
  rep.equal = (lhs == rhs);
  rep.dyadic = lhs.denominators_are_powers_of_two() &&
               rhs.denominators_are_powers_of_two();
  if (!rep.ok()) {
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
  }
  return rep;
}

BridgeReport verify_omega_power(std::uint32_t p, FamilyCache& cache) {
  if (p < 3 || !is_prime(p))
    fail(errc::bad_input, "verify_omega_power requires an odd prime");
  BridgeReport rep;
  rep.n = p;
  const OmegaElement omega = OmegaElement::omega();
  OmegaElement lhs =
      omega.pow(static_cast<long>(p)) - omega.pow(-static_cast<long>(p));
  OmegaElement rhs =
      OmegaElement::from_int_poly(shifted_up(cache.fibotomic(2 * p), 1));
  rep.equal = (lhs == rhs);
  rep.dyadic = lhs.denominators_are_powers_of_two() &&
               rhs.denominators_are_powers_of_two();
  if (!rep.ok()) {
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
  }
  return rep;
}

}  // namespace fibotomic
