#include "fibotomic/families.hpp"

#include "fibotomic/numth.hpp"

namespace fibotomic {

const IntPoly* FamilyCache::lookup(Table& table, unsigned n) {
  std::lock_guard lk(mu_);
  auto it = table.find(n);
  return it == table.end() ? nullptr : &it->second;
}

const IntPoly& FamilyCache::store(Table& table, unsigned n, IntPoly value) {
  std::lock_guard lk(mu_);
  auto [it, _] = table.try_emplace(n, std::move(value));
  return it->second;
}

const IntPoly& FamilyCache::fibonacci(unsigned n) {
  if (n < 1) fail(errc::domain_too_small, "fibonacci index must be >= 1");
  // Seed from the largest cached index; the fill loop below keeps the table
  // contiguous from 1, so ascending sweeps cost one recurrence step per call.
  unsigned next_index = 3;
  IntPoly prev = int_poly({1});    // F_1
  IntPoly cur = int_poly({0, 1});  // F_2
  {
    std::lock_guard lk(mu_);
    auto it = fib_.find(n);
    if (it != fib_.end()) return it->second;
    if (!fib_.empty() && fib_.rbegin()->first >= 2) {
      unsigned top = fib_.rbegin()->first;
      prev = fib_.at(top - 1);
      cur = fib_.at(top);
      next_index = top + 1;
    }
  }
  store(fib_, 1, int_poly({1}));
  if (n == 1) return *lookup(fib_, 1);
  store(fib_, 2, int_poly({0, 1}));
  for (unsigned i = next_index; i <= n; ++i) {
    IntPoly next = shifted_up(cur, 1) + prev;
    store(fib_, i, next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return *lookup(fib_, n);
}

const IntPoly& FamilyCache::fibotomic(unsigned n) {
  if (n < 1) fail(errc::domain_too_small, "fibotomic index must be >= 1");
  if (const IntPoly* hit = lookup(psi_, n)) return *hit;
  fibonacci(n);  // fill the chain once, divisors come for free
  IntPoly num = int_poly({1});
  IntPoly den = int_poly({1});
  for (std::uint64_t d : divisors(n)) {
    switch (mobius(n / d)) {
      case 1:
        num = num * fibonacci(static_cast<unsigned>(d));
        break;
      case -1:
        den = den * fibonacci(static_cast<unsigned>(d));
        break;
      default:
        break;
    }
  }
  try {
    return store(psi_, n, exact_div(num, den));
  } catch (const error& e) {
    if (e.code() == errc::inexact_division)
      fail(errc::internal_invariant_violation,
           "fibotomic Moebius quotient left a remainder at n=" +
               std::to_string(n));
    throw;
  }
}

const IntPoly& FamilyCache::cyclotomic(unsigned n) {
  if (n < 1) fail(errc::domain_too_small, "cyclotomic index must be >= 1");
  if (const IntPoly* hit = lookup(phi_, n)) return *hit;
  auto x_pow_minus_1 = [](unsigned d) {
    std::vector<mpz_class> c(d + 1);
    c[0] = -1;
    c[d] = 1;
    return IntPoly(IntRing{}, std::move(c));
  };
  IntPoly num = int_poly({1});
  IntPoly den = int_poly({1});
  for (std::uint64_t d : divisors(n)) {
    switch (mobius(n / d)) {
      case 1:
        num = num * x_pow_minus_1(static_cast<unsigned>(d));
        break;
      case -1:
        den = den * x_pow_minus_1(static_cast<unsigned>(d));
        break;
      default:
        break;
    }
  }
  return store(phi_, n, exact_div(num, den));
}

std::uint64_t psi_constant_term(std::uint64_t n) {
  if (n < 1) fail(errc::domain_too_small, "psi_constant_term requires n >= 1");
  if (n == 2) return 0;
  if (n % 2 == 0) {
    if (auto pp = as_prime_power(n / 2)) return pp->prime;
  }
  return 1;
}

std::uint64_t phi_at_one(std::uint64_t n) {
  if (n < 2) fail(errc::domain_too_small, "phi_at_one requires n >= 2");
  if (auto pp = as_prime_power(n)) return pp->prime;
  return 1;
}

namespace {

// i^e as a Gaussian unit.
GaussInt i_power(unsigned e) {
  switch (e % 4) {
    case 0: return GaussInt(1, 0);
    case 1: return GaussInt(0, 1);
    case 2: return GaussInt(-1, 0);
    default: return GaussInt(0, -1);
  }
}

}  // namespace

PsiPmReport verify_psi_pm(std::uint32_t p, unsigned m, FamilyCache& cache) {
  if (!is_prime(p)) fail(errc::not_prime, "verify_psi_pm requires prime p");
  if (m < 2) fail(errc::domain_too_small, "verify_psi_pm requires m >= 2");
  PsiPmReport rep;
  rep.p = p;
  rep.m = m;
  rep.lhs = cache.fibotomic(p * m);
  const unsigned phi_m = static_cast<unsigned>(totient(m));
  try {
    if (p == 2 && m % 2 == 0) {
      rep.case_label = 'a';
      // +-i^phi(m) * Psi_m(i(x^2+2)), computed in ZZ[i]; the projection to ZZ
      // is where a failed theorem would surface as not_real_result.
      GaussPoly psi_m = to_gaussian(cache.fibotomic(m));
      GaussPoly arg = gauss_poly({{0, 2}, {0, 0}, {0, 1}});  // i(x^2+2)
      GaussPoly val = compose(psi_m, arg);
      GaussInt unit = i_power(phi_m);
      if (m == 2) unit = GaussRing{}.neg(unit);
      rep.rhs = to_integer(scaled(val, unit));
    } else if (p == 2) {
      rep.case_label = 'b';
      // m odd: i^phi(m) * Psi_m(i*sqrt(x^2+4)); Psi_m is even, so substitute
      // z^2 -> -(x^2+4) and fold i^phi(m) = (-1)^{phi(m)/2} into the sign.
      IntPoly rhs = even_substitute(cache.fibotomic(m), int_poly({-4, 0, -1}));
      if ((phi_m / 2) % 2 == 1) rhs = -rhs;
      rep.rhs = std::move(rhs);
    } else if (m % p == 0) {
      rep.case_label = 'c';
      IntPoly arg = shifted_up(cache.fibotomic(2 * p), 1);  // x * Psi_{2p}
      rep.rhs = compose(cache.fibotomic(m), arg);
    } else {
      rep.case_label = 'd';
      IntPoly arg = shifted_up(cache.fibotomic(2 * p), 1);
      rep.rhs = exact_div(compose(cache.fibotomic(m), arg), cache.fibotomic(m));
    }
  } catch (const error& e) {
    if (e.code() == errc::not_real_result ||
        e.code() == errc::inexact_division ||
        e.code() == errc::odd_term_present) {
      rep.equal = false;
      rep.note = e.what();
      return rep;
    }
    throw;
  }
  rep.equal = (rep.lhs == rep.rhs);
  return rep;
}

HomogeneousView homogenize(Family family, unsigned n, FamilyCache& cache) {
  if (n < 1) fail(errc::domain_too_small, "homogenize requires n >= 1");
  HomogeneousView view;
  view.base =
      family == Family::fibonacci ? cache.fibonacci(n) : cache.fibotomic(n);
  view.total_degree = static_cast<unsigned>(view.base.degree().value_or(0));
  return view;
}

IntPoly specialize_y(const HomogeneousView& view, long y0) {
  std::vector<mpz_class> c(view.base.coeffs().size());
  mpz_class y(y0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    mpz_class w;
    mpz_pow_ui(w.get_mpz_t(), y.get_mpz_t(),
               view.total_degree - static_cast<unsigned>(j));
    c[j] = view.base.coeffs()[j] * w;
  }
  return IntPoly(IntRing{}, std::move(c));
}

}  // namespace fibotomic
