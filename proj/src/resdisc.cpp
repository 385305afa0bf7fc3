#include "fibotomic/resdisc.hpp"

#include <algorithm>

#include "fibotomic/numth.hpp"

namespace fibotomic {

namespace {

SignedMagnitude constant_case(const IntPoly& f, const IntPoly& g, int df,
                              int dg) {
  // res(c, g) = c^{deg g}; res(f, c) = c^{deg f}; res of two constants is 1.
  mpz_class r;
  if (df == 0 && dg == 0) {
    r = 1;
  } else if (df == 0) {
    mpz_pow_ui(r.get_mpz_t(), f.coeffs()[0].get_mpz_t(),
               static_cast<unsigned long>(dg));
  } else {
    mpz_pow_ui(r.get_mpz_t(), g.coeffs()[0].get_mpz_t(),
               static_cast<unsigned long>(df));
  }
  return SignedMagnitude::of(std::move(r));
}

}  // namespace

SignedMagnitude resultant_sylvester(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero())
    fail(errc::zero_polynomial, "resultant of zero polynomial");
  const int df = degree_of(f);
  const int dg = degree_of(g);
  if (df == 0 || dg == 0) return constant_case(f, g, df, dg);

  const int n = df + dg;
  std::vector<mpz_class> m(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < dg; ++r)
    for (int j = 0; j <= df; ++j) m[r * n + r + j] = f.coeffs()[df - j];
  for (int r = 0; r < df; ++r)
    for (int j = 0; j <= dg; ++j) m[(dg + r) * n + r + j] = g.coeffs()[dg - j];

  // Bareiss fraction-free elimination; every division below is exact by the
  // minor identity, and intermediate entries are themselves minors, which
  // keeps growth controlled.
  int sign = 1;
  mpz_class prev(1);
  mpz_class t1;
  for (int k = 0; k + 1 < n; ++k) {
    if (sgn(m[k * n + k]) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (sgn(m[i * n + k]) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return SignedMagnitude::of(0);
      for (int j = k; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
      sign = -sign;
    }
    const mpz_class& akk = m[k * n + k];
    const bool first_step = (k == 0);
    for (int i = k + 1; i < n; ++i) {
      const mpz_class& aik = m[i * n + k];
      const bool zik = sgn(aik) == 0;
      for (int j = k + 1; j < n; ++j) {
        mpz_class& aij = m[i * n + j];
        const mpz_class& akj = m[k * n + j];
        const bool zkj = sgn(akj) == 0;
        if (sgn(aij) != 0) {
          mpz_mul(t1.get_mpz_t(), akk.get_mpz_t(), aij.get_mpz_t());
        } else if (zik || zkj) {
          continue;  // stays zero
        } else {
          t1 = 0;
        }
        if (!zik && !zkj)
          mpz_submul(t1.get_mpz_t(), aik.get_mpz_t(), akj.get_mpz_t());
        if (first_step || sgn(t1) == 0) {
          aij = t1;
        } else {
          mpz_divexact(aij.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
        }
      }
    }
    prev = akk;
  }
  mpz_class det = m[static_cast<std::size_t>(n - 1) * n + (n - 1)];
  if (sign < 0) det = -det;
  return SignedMagnitude::of(std::move(det));
}

namespace {

mpz_class content_of(const IntPoly& f) {
  mpz_class c;
  for (const mpz_class& a : f.coeffs())
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
  return c;
}

IntPoly divide_scalar_exact(const IntPoly& f, const mpz_class& s) {
  if (s == 1) return f;
  std::vector<mpz_class> c(f.coeffs().size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!mpz_divisible_p(f.coeffs()[j].get_mpz_t(), s.get_mpz_t()))
      fail(errc::internal_invariant_violation,
           "inexact scalar division in subresultant sequence");
    mpz_divexact(c[j].get_mpz_t(), f.coeffs()[j].get_mpz_t(), s.get_mpz_t());
  }
  return IntPoly(IntRing{}, std::move(c));
}

// lc(B)^{deg A - deg B + 1} * A mod B, with the multiplier applied in full
// even when fewer reduction steps are needed.
IntPoly pseudo_rem(const IntPoly& A, const IntPoly& B) {
  const mpz_class& d = B.leading();
  const int delta = degree_of(A) - degree_of(B);
  IntPoly r = A;
  int steps = 0;
  while (!r.is_zero() && degree_of(r) >= degree_of(B)) {
    const int shift = degree_of(r) - degree_of(B);
    IntPoly t = scaled(shifted_up(B, static_cast<unsigned>(shift)), r.leading());
    r = scaled(r, d) - t;
    ++steps;
  }
  for (; steps < delta + 1; ++steps) r = scaled(r, d);
  return r;
}

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class div_mpz_exact(const mpz_class& a, const mpz_class& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    fail(errc::internal_invariant_violation,
         "inexact division in subresultant bookkeeping");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SignedMagnitude resultant_subresultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero())
    fail(errc::zero_polynomial, "resultant of zero polynomial");
  const int df = degree_of(f);
  const int dg = degree_of(g);
  if (df == 0 || dg == 0) return constant_case(f, g, df, dg);

  IntPoly A = f, B = g;
  int s = 1;
  if (df < dg) {
    std::swap(A, B);
    if ((df & 1) && (dg & 1)) s = -s;
  }
  const mpz_class ca = content_of(A);
  const mpz_class cb = content_of(B);
  A = divide_scalar_exact(A, ca);
  B = divide_scalar_exact(B, cb);
  mpz_class t = pow_mpz(ca, static_cast<unsigned long>(degree_of(B))) *
                pow_mpz(cb, static_cast<unsigned long>(degree_of(A)));

  mpz_class gg(1), h(1);
  while (true) {
    const int dA = degree_of(A);
    const int dB = degree_of(B);
    const int delta = dA - dB;
    if ((dA & 1) && (dB & 1)) s = -s;
    IntPoly R = pseudo_rem(A, B);
    A = std::move(B);
    B = divide_scalar_exact(R, gg * pow_mpz(h, static_cast<unsigned long>(delta)));
    gg = A.leading();
    if (delta > 0)
      h = div_mpz_exact(pow_mpz(gg, static_cast<unsigned long>(delta)),
                        pow_mpz(h, static_cast<unsigned long>(delta - 1)));
    if (B.is_zero()) return SignedMagnitude::of(0);  // positive-degree gcd
    if (degree_of(B) == 0) {
      const unsigned long dA2 = static_cast<unsigned long>(degree_of(A));
      mpz_class res =
          div_mpz_exact(pow_mpz(B.coeffs()[0], dA2), pow_mpz(h, dA2 - 1));
      res *= t;
      if (s < 0) res = -res;
      return SignedMagnitude::of(std::move(res));
    }
  }
}

SignedMagnitude resultant(const IntPoly& f, const IntPoly& g,
                          ResultantEngine engine) {
  return engine == ResultantEngine::sylvester ? resultant_sylvester(f, g)
                                              : resultant_subresultant(f, g);
}

SignedMagnitude discriminant(const IntPoly& f, ResultantEngine engine) {
  if (f.is_zero() || degree_of(f) < 1)
    fail(errc::degree_too_small, "discriminant needs degree >= 1");
  const int d = degree_of(f);
  if (d == 1) return SignedMagnitude::of(1);
  mpz_class r = resultant(f, derivative(f), engine).value();
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) r = -r;
  return SignedMagnitude::of(div_mpz_exact(r, f.leading()));
}

namespace {

std::uint64_t ipow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

SignedMagnitude disc_formula_psi(unsigned n) {
  if (n < 2) fail(errc::domain_too_small, "disc_formula_psi requires n >= 2");
  const std::uint64_t phi = totient(n);
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), 2ul * n, static_cast<unsigned long>(phi));
  mpz_class den(1);
  if (auto pp = as_prime_power(n)) {
    const std::uint64_t e = ipow_u64(pp->prime, pp->exponent - 1) + 1;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(pp->prime),
                  static_cast<unsigned long>(e));
  } else {
    for (const PrimePower& pp : factorize(n).factors) {
      if (phi % (pp.prime - 1) != 0)
        fail(errc::internal_invariant_violation,
             "phi(n) not divisible by p-1 in discriminant formula");
      mpz_class term;
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(pp.prime),
                    static_cast<unsigned long>(phi / (pp.prime - 1)));
      den *= term;
    }
  }
  mpz_class q = div_mpz_exact(num, den);
  if ((phi / 2) % 2 == 1) q = -q;
  return SignedMagnitude::of(std::move(q));
}

SignedMagnitude disc_formula_phi(unsigned n) {
  if (n < 2) fail(errc::domain_too_small, "disc_formula_phi requires n >= 2");
  const std::uint64_t phi = totient(n);
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), n, static_cast<unsigned long>(phi));
  mpz_class den(1);
  for (const PrimePower& pp : factorize(n).factors) {
    if (phi % (pp.prime - 1) != 0)
      fail(errc::internal_invariant_violation,
           "phi(n) not divisible by p-1 in discriminant formula");
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(pp.prime),
                  static_cast<unsigned long>(phi / (pp.prime - 1)));
    den *= term;
  }
  mpz_class q = div_mpz_exact(num, den);
  if ((phi / 2) % 2 == 1) q = -q;
  return SignedMagnitude::of(std::move(q));
}

ExactRatio disc_ratio(unsigned n) {
  if (n < 2) fail(errc::domain_too_small, "disc_ratio requires n >= 2");
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), 2ul, static_cast<unsigned long>(totient(n)));
  mpq_class r(num);
  if (auto pp = as_prime_power(n)) r /= mpz_class(pp->prime);
  r.canonicalize();
  return ExactRatio{r.get_num(), r.get_den()};
}

namespace {

SignedMagnitude res_formula(unsigned m, unsigned n) {
  if (m < 2 || m >= n) fail(errc::bad_range, "resultant formula needs 2 <= m < n");
  if (n % m == 0) {
    if (auto pp = as_prime_power(n / m)) {
      mpz_class v;
      mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(pp->prime),
                    static_cast<unsigned long>(totient(m)));
      return SignedMagnitude::of(std::move(v));
    }
  }
  return SignedMagnitude::of(1);
}

}  // namespace

SignedMagnitude res_formula_psi(unsigned m, unsigned n) { return res_formula(m, n); }

SignedMagnitude res_formula_phi(unsigned m, unsigned n) { return res_formula(m, n); }

HomogValue homog_disc_psi(unsigned n) {
  if (n < 2) fail(errc::domain_too_small, "homog_disc_psi requires n >= 2");
  const unsigned long phi = static_cast<unsigned long>(totient(n));
  return HomogValue{phi * (phi - 1), disc_formula_psi(n)};
}

HomogValue homog_res_psi(unsigned m, unsigned n) {
  if (m < 2 || m >= n) fail(errc::bad_range, "homog_res_psi needs 2 <= m < n");
  const unsigned long em = static_cast<unsigned long>(totient(m));
  const unsigned long en = static_cast<unsigned long>(totient(n));
  return HomogValue{em * en, res_formula_psi(m, n)};
}

}  // namespace fibotomic
