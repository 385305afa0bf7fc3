#ifndef FIBOTOMIC_POLY_HPP
#define FIBOTOMIC_POLY_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibotomic/errors.hpp"
#include "fibotomic/rings.hpp"

namespace fibotomic {

// Dense univariate polynomial over a coefficient ring R, coefficients stored
// ascending (coeffs()[j] multiplies x^j). Canonical form: the highest stored
// coefficient is nonzero; the zero polynomial stores nothing and reports
// degree() == nullopt rather than any integer sentinel.
template <class R>
class Poly {
 public:
  using Ring = R;
  using Elem = typename R::Elem;

  Poly()
    requires std::default_initializable<R>
  = default;
  explicit Poly(R ring) : ring_(std::move(ring)) {}
  Poly(R ring, std::vector<Elem> coeffs)
      : ring_(std::move(ring)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(R ring, Elem v) {
    return Poly(std::move(ring), std::vector<Elem>{std::move(v)});
  }

  static Poly monomial(R ring, Elem coeff, unsigned k) {
    std::vector<Elem> c(k + 1, ring.zero());
    c[k] = std::move(coeff);
    return Poly(std::move(ring), std::move(c));
  }

  const R& ring() const { return ring_; }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }

  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  Elem coeff(std::size_t j) const {
    return j < c_.size() ? c_[j] : ring_.zero();
  }

  const Elem& leading() const {
    if (c_.empty()) fail(errc::zero_polynomial, "leading() of zero polynomial");
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && ring_.is_one(c_.back()); }

  bool is_constant() const { return c_.size() <= 1; }

  // Mutable access for construction code; callers must re-trim.
  std::vector<Elem>& raw_coeffs() { return c_; }
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

 private:
  [[no_unique_address]] R ring_;
  std::vector<Elem> c_;
};

using IntPoly = Poly<IntRing>;
using RatPoly = Poly<RatRing>;
using GaussPoly = Poly<GaussRing>;
using ModPoly = Poly<ZpRing>;

// Nonzero degree or a loud failure; avoids sprinkling optional handling where
// the algebra guarantees nonzero input.
template <class R>
int degree_of(const Poly<R>& f) {
  auto d = f.degree();
  if (!d) fail(errc::zero_polynomial, "degree of zero polynomial requested");
  return *d;
}

template <class R>
const R& check_same_ring(const Poly<R>& f, const Poly<R>& g) {
  if (!f.ring().compatible(g.ring()))
    fail(errc::modulus_mismatch, "operands live in different rings");
  return f.ring();
}

template <class R>
bool operator==(const Poly<R>& f, const Poly<R>& g) {
  if (!f.ring().compatible(g.ring())) return false;
  if (f.coeffs().size() != g.coeffs().size()) return false;
  const R& ring = f.ring();
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    if (!ring.equal(f.coeffs()[j], g.coeffs()[j])) return false;
  }
  return true;
}

template <class R>
Poly<R> operator+(const Poly<R>& f, const Poly<R>& g) {
  const R& ring = check_same_ring(f, g);
  std::vector<typename R::Elem> c(std::max(f.coeffs().size(), g.coeffs().size()),
                                  ring.zero());
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) c[j] = f.coeffs()[j];
  for (std::size_t j = 0; j < g.coeffs().size(); ++j)
    c[j] = ring.add(c[j], g.coeffs()[j]);
  return Poly<R>(ring, std::move(c));
}

template <class R>
Poly<R> operator-(const Poly<R>& f) {
  const R& ring = f.ring();
  std::vector<typename R::Elem> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(ring.neg(a));
  return Poly<R>(ring, std::move(c));
}

template <class R>
Poly<R> operator-(const Poly<R>& f, const Poly<R>& g) {
  const R& ring = check_same_ring(f, g);
  std::vector<typename R::Elem> c(std::max(f.coeffs().size(), g.coeffs().size()),
                                  ring.zero());
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) c[j] = f.coeffs()[j];
  for (std::size_t j = 0; j < g.coeffs().size(); ++j)
    c[j] = ring.sub(c[j], g.coeffs()[j]);
  return Poly<R>(ring, std::move(c));
}

// Schoolbook product. Every polynomial in scope is dense and of desk-scale
// degree, so no subquadratic multiplication is attempted.
template <class R>
Poly<R> operator*(const Poly<R>& f, const Poly<R>& g) {
  const R& ring = check_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) return Poly<R>(ring);
  std::vector<typename R::Elem> c(f.coeffs().size() + g.coeffs().size() - 1,
                                  ring.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto& fi = f.coeffs()[i];
    if (ring.is_zero(fi)) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      ring.addmul(c[i + j], fi, g.coeffs()[j]);
    }
  }
  return Poly<R>(ring, std::move(c));
}

template <class R>
Poly<R> scaled(const Poly<R>& f, const typename R::Elem& s) {
  const R& ring = f.ring();
  std::vector<typename R::Elem> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(ring.mul(a, s));
  return Poly<R>(ring, std::move(c));
}

template <class R>
Poly<R> shifted_up(const Poly<R>& f, unsigned k) {
  if (f.is_zero() || k == 0) return f;
  std::vector<typename R::Elem> c(f.coeffs().size() + k, f.ring().zero());
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) c[j + k] = f.coeffs()[j];
  return Poly<R>(f.ring(), std::move(c));
}

// Quotient f / g with a zero remainder required. A nonzero remainder (or a
// leading-coefficient division that fails) raises inexact_division: in this
// artifact that always means a violated identity or a caller bug.
template <class R>
Poly<R> exact_div(const Poly<R>& f, const Poly<R>& g) {
  const R& ring = check_same_ring(f, g);
  if (g.is_zero()) fail(errc::zero_polynomial, "exact_div by zero polynomial");
  if (f.is_zero()) return Poly<R>(ring);
  const int df = degree_of(f);
  const int dg = degree_of(g);
  if (df < dg) fail(errc::inexact_division, "degree of dividend below divisor");
  const auto& lc_g = g.leading();
  std::vector<typename R::Elem> r(f.coeffs());
  std::vector<typename R::Elem> q(df - dg + 1, ring.zero());
  for (int k = df - dg; k >= 0; --k) {
    const auto& lead = r[k + dg];
    if (ring.is_zero(lead)) continue;
    typename R::Elem qk = ring.zero();
    if (!ring.try_div(qk, lead, lc_g))
      fail(errc::inexact_division, "leading coefficient does not divide");
    r[k + dg] = ring.zero();
    for (int j = 0; j < dg; ++j) ring.submul(r[k + j], qk, g.coeffs()[j]);
    q[k] = std::move(qk);
  }
  for (const auto& rem : r) {
    if (!ring.is_zero(rem))
      fail(errc::inexact_division, "nonzero remainder in exact_div");
  }
  return Poly<R>(ring, std::move(q));
}

// f(g(x)) by Horner over the polynomial ring.
template <class R>
Poly<R> compose(const Poly<R>& f, const Poly<R>& g) {
  const R& ring = check_same_ring(f, g);
  Poly<R> acc(ring);
  for (std::size_t j = f.coeffs().size(); j-- > 0;) {
    acc = acc * g + Poly<R>::constant(ring, f.coeffs()[j]);
  }
  return acc;
}

// For f with only even-degree terms, writes f(z) = h(z^2) and returns h(g).
template <class R>
Poly<R> even_substitute(const Poly<R>& f, const Poly<R>& g) {
  const R& ring = check_same_ring(f, g);
  std::vector<typename R::Elem> h;
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    if (j % 2 == 1) {
      if (!ring.is_zero(f.coeffs()[j]))
        fail(errc::odd_term_present,
             "even_substitute requires an even polynomial");
      continue;
    }
    h.push_back(f.coeffs()[j]);
  }
  return compose(Poly<R>(ring, std::move(h)), g);
}

template <class R>
Poly<R> derivative(const Poly<R>& f) {
  const R& ring = f.ring();
  if (f.coeffs().size() <= 1) return Poly<R>(ring);
  std::vector<typename R::Elem> c;
  c.reserve(f.coeffs().size() - 1);
  for (std::size_t j = 1; j < f.coeffs().size(); ++j) {
    c.push_back(ring.mul(f.coeffs()[j], ring.from_long(static_cast<long>(j))));
  }
  return Poly<R>(ring, std::move(c));
}

template <class R>
typename R::Elem evaluate(const Poly<R>& f, const typename R::Elem& at) {
  const R& ring = f.ring();
  typename R::Elem acc = ring.zero();
  for (std::size_t j = f.coeffs().size(); j-- > 0;) {
    acc = ring.add(ring.mul(acc, at), f.coeffs()[j]);
  }
  return acc;
}

template <class R>
Poly<R> poly_pow(const Poly<R>& f, unsigned long e) {
  const R& ring = f.ring();
  Poly<R> result = Poly<R>::constant(ring, ring.one());
  Poly<R> base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

// ---- domain maps ----------------------------------------------------------

ModPoly reduce_mod(const IntPoly& f, std::uint32_t p);
GaussPoly to_gaussian(const IntPoly& f);
IntPoly to_integer(const GaussPoly& f);  // not_real_result if any Im != 0
RatPoly to_rational(const IntPoly& f);
IntPoly to_integer(const RatPoly& f);  // not_integral if any denominator != 1

// ---- construction helpers and formatting ----------------------------------

IntPoly int_poly(std::initializer_list<long> ascending);
RatPoly rat_poly(std::initializer_list<long> ascending);
ModPoly mod_poly(std::uint32_t p, std::initializer_list<long> ascending);
GaussPoly gauss_poly(std::initializer_list<std::pair<long, long>> ascending);

std::string to_string(const IntPoly& f, const char* var = "x");
std::string to_string(const RatPoly& f, const char* var = "x");
std::string to_string(const GaussPoly& f, const char* var = "x");
std::string to_string(const ModPoly& f, const char* var = "x");

// Coefficients as decimal strings, ascending; arbitrary precision survives
// every consumer this way.
std::vector<std::string> coeff_strings(const IntPoly& f);
std::vector<std::string> coeff_strings(const ModPoly& f);

}  // namespace fibotomic

#endif
