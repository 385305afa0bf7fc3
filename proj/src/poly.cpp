#include "fibotomic/poly.hpp"

#include <sstream>

namespace fibotomic {

ModPoly reduce_mod(const IntPoly& f, std::uint32_t p) {
  ZpRing ring(p);
  std::vector<std::uint32_t> c;
  c.reserve(f.coeffs().size());
  mpz_class r;
  for (const mpz_class& a : f.coeffs()) {
    mpz_mod_ui(r.get_mpz_t(), a.get_mpz_t(), p);  // nonnegative remainder
    c.push_back(static_cast<std::uint32_t>(r.get_ui()));
  }
  return ModPoly(ring, std::move(c));
}

GaussPoly to_gaussian(const IntPoly& f) {
  std::vector<GaussInt> c;
  c.reserve(f.coeffs().size());
  for (const mpz_class& a : f.coeffs()) c.emplace_back(a, 0);
  return GaussPoly(GaussRing{}, std::move(c));
}

IntPoly to_integer(const GaussPoly& f) {
  std::vector<mpz_class> c;
  c.reserve(f.coeffs().size());
  for (const GaussInt& a : f.coeffs()) {
    if (sgn(a.im) != 0)
      fail(errc::not_real_result, "nonzero imaginary part in projection to ZZ");
    c.push_back(a.re);
  }
  return IntPoly(IntRing{}, std::move(c));
}

RatPoly to_rational(const IntPoly& f) {
  std::vector<mpq_class> c;
  c.reserve(f.coeffs().size());
  for (const mpz_class& a : f.coeffs()) c.emplace_back(a);
  return RatPoly(RatRing{}, std::move(c));
}

IntPoly to_integer(const RatPoly& f) {
  std::vector<mpz_class> c;
  c.reserve(f.coeffs().size());
  for (const mpq_class& a : f.coeffs()) {
    if (a.get_den() != 1)
      fail(errc::not_integral, "non-integral coefficient in projection to ZZ");
    c.push_back(a.get_num());
  }
  return IntPoly(IntRing{}, std::move(c));
}

IntPoly int_poly(std::initializer_list<long> ascending) {
  std::vector<mpz_class> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return IntPoly(IntRing{}, std::move(c));
}

RatPoly rat_poly(std::initializer_list<long> ascending) {
  std::vector<mpq_class> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return RatPoly(RatRing{}, std::move(c));
}

ModPoly mod_poly(std::uint32_t p, std::initializer_list<long> ascending) {
  ZpRing ring(p);
  std::vector<std::uint32_t> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.push_back(ring.from_long(v));
  return ModPoly(ring, std::move(c));
}

GaussPoly gauss_poly(std::initializer_list<std::pair<long, long>> ascending) {
  std::vector<GaussInt> c;
  c.reserve(ascending.size());
  for (const auto& [re, im] : ascending)
    c.emplace_back(mpz_class(re), mpz_class(im));
  return GaussPoly(GaussRing{}, std::move(c));
}

namespace {

void append_power(std::ostringstream& os, const char* var, std::size_t j) {
  if (j == 0) return;
  os << var;
  if (j > 1) os << "^" << j;
}

// Signed formatting: terms descending, "x^4 + 4x^2 + 1", "x^2 - x + 1".
template <class P, class SignFn, class AbsFn>
std::string format_signed(const P& f, const char* var, SignFn sign_of,
                          AbsFn abs_str) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = f.coeffs().size(); j-- > 0;) {
    const auto& a = f.coeffs()[j];
    int s = sign_of(a);
    if (s == 0) continue;
    if (first) {
      if (s < 0) os << "-";
      first = false;
    } else {
      os << (s < 0 ? " - " : " + ");
    }
    std::string mag = abs_str(a);
    if (mag != "1" || j == 0) os << mag;
    append_power(os, var, j);
  }
  return os.str();
}

// Unsigned formatting for rings without a useful sign (Zp, ZZ[i]).
template <class P, class StrFn>
std::string format_plain(const P& f, const char* var, StrFn coeff_str) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = f.coeffs().size(); j-- > 0;) {
    const auto& a = f.coeffs()[j];
    std::string cs = coeff_str(a);
    if (cs == "0") continue;
    if (!first) os << " + ";
    first = false;
    if (cs != "1" || j == 0) os << cs;
    append_power(os, var, j);
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string to_string(const IntPoly& f, const char* var) {
  return format_signed(
      f, var, [](const mpz_class& a) { return sgn(a); },
      [](const mpz_class& a) { return mpz_class(abs(a)).get_str(); });
}

std::string to_string(const RatPoly& f, const char* var) {
  return format_signed(
      f, var, [](const mpq_class& a) { return sgn(a); },
      [](const mpq_class& a) { return mpq_class(abs(a)).get_str(); });
}

std::string to_string(const GaussPoly& f, const char* var) {
  GaussRing ring;
  return format_plain(f, var,
                      [&](const GaussInt& a) { return ring.str(a); });
}

std::string to_string(const ModPoly& f, const char* var) {
  return format_plain(
      f, var, [](std::uint32_t a) { return std::to_string(a); });
}

std::vector<std::string> coeff_strings(const IntPoly& f) {
  std::vector<std::string> out;
  out.reserve(f.coeffs().size());
  for (const mpz_class& a : f.coeffs()) out.push_back(a.get_str());
  return out;
}

std::vector<std::string> coeff_strings(const ModPoly& f) {
  std::vector<std::string> out;
  out.reserve(f.coeffs().size());
  for (std::uint32_t a : f.coeffs()) out.push_back(std::to_string(a));
  return out;
}

}  // namespace fibotomic
