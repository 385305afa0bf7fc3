#ifndef FIBOTOMIC_RINGS_HPP
#define FIBOTOMIC_RINGS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "fibotomic/errors.hpp"

namespace fibotomic {

// Coefficient rings used by Poly<R>. Each ring supplies exact element
// arithmetic plus try_div, which reports whether b divides a exactly.
// ZZ, QQ and ZZ[i] are stateless; Zp carries its modulus.

struct IntRing {
  using Elem = mpz_class;

  Elem zero() const { return Elem(); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  void addmul(Elem& acc, const Elem& a, const Elem& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void submul(Elem& acc, const Elem& a, const Elem& b) const {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  bool try_div(Elem& q, const Elem& a, const Elem& b) const {
    if (sgn(b) == 0) fail(errc::zero_polynomial, "integer division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
  }
  bool compatible(const IntRing&) const { return true; }
  std::string str(const Elem& a) const { return a.get_str(); }
  static constexpr const char* name() { return "ZZ"; }
};

struct RatRing {
  using Elem = mpq_class;

  Elem zero() const { return Elem(); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  void addmul(Elem& acc, const Elem& a, const Elem& b) const { acc += a * b; }
  void submul(Elem& acc, const Elem& a, const Elem& b) const { acc -= a * b; }
  bool try_div(Elem& q, const Elem& a, const Elem& b) const {
    if (sgn(b) == 0) fail(errc::zero_polynomial, "rational division by zero");
    q = a / b;
    return true;
  }
  bool compatible(const RatRing&) const { return true; }
  std::string str(const Elem& a) const { return a.get_str(); }
  static constexpr const char* name() { return "QQ"; }
};

struct GaussInt {
  mpz_class re, im;
  GaussInt() = default;
  GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
  bool operator==(const GaussInt&) const = default;
};

struct GaussRing {
  using Elem = GaussInt;

  Elem zero() const { return Elem(); }
  Elem one() const { return Elem(1, 0); }
  Elem imaginary_unit() const { return Elem(0, 1); }
  Elem from_long(long v) const { return Elem(v, 0); }
  bool is_zero(const Elem& a) const { return sgn(a.re) == 0 && sgn(a.im) == 0; }
  bool is_one(const Elem& a) const { return a.re == 1 && sgn(a.im) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const {
    return Elem(a.re + b.re, a.im + b.im);
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return Elem(a.re - b.re, a.im - b.im);
  }
  Elem neg(const Elem& a) const { return Elem(-a.re, -a.im); }
  Elem mul(const Elem& a, const Elem& b) const {
    return Elem(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  void addmul(Elem& acc, const Elem& a, const Elem& b) const {
    mpz_addmul(acc.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_submul(acc.re.get_mpz_t(), a.im.get_mpz_t(), b.im.get_mpz_t());
    mpz_addmul(acc.im.get_mpz_t(), a.re.get_mpz_t(), b.im.get_mpz_t());
    mpz_addmul(acc.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
  }
  void submul(Elem& acc, const Elem& a, const Elem& b) const {
    Elem p = mul(a, b);
    acc.re -= p.re;
    acc.im -= p.im;
  }
  // (a + bi) / (c + di) via the conjugate; exact only when the Gaussian norm
  // of the divisor divides both components of a * conj(b).
  bool try_div(Elem& q, const Elem& a, const Elem& b) const {
    if (is_zero(b)) fail(errc::zero_polynomial, "Gaussian division by zero");
    mpz_class norm = b.re * b.re + b.im * b.im;
    mpz_class nre = a.re * b.re + a.im * b.im;
    mpz_class nim = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(nre.get_mpz_t(), norm.get_mpz_t())) return false;
    if (!mpz_divisible_p(nim.get_mpz_t(), norm.get_mpz_t())) return false;
    mpz_divexact(q.re.get_mpz_t(), nre.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), nim.get_mpz_t(), norm.get_mpz_t());
    return true;
  }
  bool compatible(const GaussRing&) const { return true; }
  std::string str(const Elem& a) const {
    if (sgn(a.im) == 0) return a.re.get_str();
    return "(" + a.re.get_str() + (sgn(a.im) < 0 ? "" : "+") + a.im.get_str() +
           "i)";
  }
  static constexpr const char* name() { return "ZZ[i]"; }
};

// Prime field Z_p. The modulus bound keeps every product inside uint64.
struct ZpRing {
  using Elem = std::uint32_t;
  static constexpr std::uint32_t max_modulus = (1u << 31) - 1;

  std::uint32_t p = 2;  // default exists only so containers of ModPoly work

  ZpRing() = default;
  explicit ZpRing(std::uint32_t modulus) : p(modulus) {
    if (modulus < 2 || modulus > max_modulus)
      fail(errc::bad_input, "modulus out of range [2, 2^31)");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_long(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<Elem>(r);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == one(); }
  bool equal(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Elem>(s >= p ? s - p : s);
  }
  Elem sub(Elem a, Elem b) const {
    return a >= b ? a - b : static_cast<Elem>(a + p - b);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t(a) * b) % p);
  }
  void addmul(Elem& acc, Elem a, Elem b) const {
    acc = static_cast<Elem>((acc + std::uint64_t(a) * b) % p);
  }
  void submul(Elem& acc, Elem a, Elem b) const { acc = sub(acc, mul(a, b)); }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    Elem base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) fail(errc::zero_polynomial, "inverse of 0 mod p");
    return pow(a, p - 2);  // p prime
  }
  bool try_div(Elem& q, Elem a, Elem b) const {
    q = mul(a, inv(b));
    return true;
  }
  bool compatible(const ZpRing& o) const { return p == o.p; }
  std::string str(Elem a) const { return std::to_string(a); }
  static constexpr const char* name() { return "Zp"; }
};

}  // namespace fibotomic

#endif
