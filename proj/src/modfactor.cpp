#include "fibotomic/modfactor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fibotomic/numth.hpp"

namespace fibotomic {

ModPoly mod_rem(const ModPoly& f, const ModPoly& g) {
  const ZpRing& ring = check_same_ring(f, g);
  if (g.is_zero()) fail(errc::zero_polynomial, "remainder by zero polynomial");
  if (f.is_zero()) return ModPoly(ring);
  const int dg = degree_of(g);
  if (degree_of(f) < dg) return f;
  const std::uint32_t inv_lc = ring.inv(g.leading());
  std::vector<std::uint32_t> r(f.coeffs());
  for (int k = static_cast<int>(r.size()) - 1; k >= dg; --k) {
    if (r[k] == 0) continue;
    const std::uint32_t q = ring.mul(r[k], inv_lc);
    r[k] = 0;
    for (int j = 0; j < dg; ++j)
      ring.submul(r[k - dg + j], q, g.coeffs()[j]);
  }
  r.resize(dg);
  return ModPoly(ring, std::move(r));
}

ModPoly make_monic(const ModPoly& f) {
  if (f.is_zero()) return f;
  const ZpRing& ring = f.ring();
  if (f.is_monic()) return f;
  return scaled(f, ring.inv(f.leading()));
}

ModPoly mod_gcd(const ModPoly& f, const ModPoly& g) {
  check_same_ring(f, g);
  ModPoly a = f, b = g;
  while (!b.is_zero()) {
    ModPoly r = mod_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

namespace {

ModPoly mod_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f) {
  return mod_rem(a * b, f);
}

}  // namespace

ModPoly mod_powmod(const ModPoly& base, const mpz_class& e, const ModPoly& f) {
  const ZpRing& ring = check_same_ring(base, f);
  if (sgn(e) < 0) fail(errc::bad_input, "negative exponent in mod_powmod");
  ModPoly result = ModPoly::constant(ring, ring.one());
  ModPoly b = mod_rem(base, f);
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod_mulmod(result, b, f);
    if (i + 1 < bits) b = mod_mulmod(b, b, f);
  }
  return result;
}

namespace {

// f = u(x^p) -> u; over Z_p the coefficients transfer unchanged.
ModPoly pth_root(const ModPoly& f) {
  const ZpRing& ring = f.ring();
  const std::uint32_t p = ring.p;
  std::vector<std::uint32_t> c;
  c.reserve(f.coeffs().size() / p + 1);
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    if (j % p == 0) {
      c.push_back(f.coeffs()[j]);
    } else if (f.coeffs()[j] != 0) {
      fail(errc::internal_invariant_violation,
           "pth_root applied to a polynomial not of the form u(x^p)");
    }
  }
  return ModPoly(ring, std::move(c));
}

void squarefree_impl(const ModPoly& f, unsigned scale,
                     std::vector<std::pair<ModPoly, unsigned>>& out) {
  const ZpRing& ring = f.ring();
  if (f.is_constant()) return;
  ModPoly fp = derivative(f);
  if (fp.is_zero()) {
    squarefree_impl(pth_root(f), scale * ring.p, out);
    return;
  }
  ModPoly c = mod_gcd(f, fp);
  ModPoly w = exact_div(f, c);
  unsigned i = 1;
  while (!w.is_constant()) {
    ModPoly y = mod_gcd(w, c);
    ModPoly z = exact_div(w, y);
    if (!z.is_constant()) out.emplace_back(std::move(z), i * scale);
    w = std::move(y);
    c = exact_div(c, w);
    ++i;
  }
  if (!c.is_constant()) squarefree_impl(pth_root(c), scale * ring.p, out);
}

bool coeff_less(const ModPoly& a, const ModPoly& b) {
  if (a.coeffs().size() != b.coeffs().size())
    return a.coeffs().size() < b.coeffs().size();
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    if (a.coeffs()[j] != b.coeffs()[j]) return a.coeffs()[j] < b.coeffs()[j];
  }
  return false;
}

}  // namespace

std::vector<std::pair<ModPoly, unsigned>> squarefree_decompose(const ModPoly& f) {
  if (f.is_zero() || !f.is_monic())
    fail(errc::not_monic, "squarefree_decompose requires a monic input");
  std::vector<std::pair<ModPoly, unsigned>> out;
  squarefree_impl(f, 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return coeff_less(a.first, b.first);
  });
  return out;
}

namespace {

// [(product of all irreducible factors of degree d, d)], f monic squarefree.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(const ModPoly& f) {
  const ZpRing& ring = f.ring();
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly rest = f;
  ModPoly x = ModPoly::monomial(ring, ring.one(), 1);
  ModPoly h = mod_rem(x, rest);  // x^{p^i} mod rest, i starting at 0
  unsigned d = 0;
  while (!rest.is_constant()) {
    ++d;
    if (2 * d > static_cast<unsigned>(degree_of(rest))) {
      out.emplace_back(rest, static_cast<unsigned>(degree_of(rest)));
      break;
    }
    h = mod_powmod(h, mpz_class(ring.p), rest);
    ModPoly g = mod_gcd(rest, h - mod_rem(x, rest));
    if (!g.is_constant()) {
      out.emplace_back(g, d);
      rest = exact_div(rest, g);
      if (rest.is_constant()) break;
      h = mod_rem(h, rest);
    }
  }
  return out;
}

ModPoly random_poly_below(const ZpRing& ring, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ring.p - 1);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(max_deg) + 1);
  for (auto& v : c) v = static_cast<std::uint32_t>(dist(rng));
  return ModPoly(ring, std::move(c));
}

// Equal-degree splitting of a monic product of distinct degree-d irreducibles.
void equal_degree(const ModPoly& f, unsigned d, std::mt19937_64& rng,
                  std::vector<ModPoly>& out) {
  const ZpRing& ring = f.ring();
  const unsigned deg = static_cast<unsigned>(degree_of(f));
  if (deg == d) {
    out.push_back(f);
    return;
  }
  ModPoly one = ModPoly::constant(ring, ring.one());
  while (true) {
    ModPoly a = random_poly_below(ring, static_cast<int>(deg) - 1, rng);
    if (a.is_constant()) continue;
    ModPoly split(ring);
    if (ring.p == 2) {
      // Trace map T(a) = a + a^2 + ... + a^{2^{d-1}} mod f.
      ModPoly t(ring);
      ModPoly power = mod_rem(a, f);
      for (unsigned i = 0; i < d; ++i) {
        t = t + power;
        power = mod_mulmod(power, power, f);
      }
      split = mod_gcd(f, t);
    } else {
      ModPoly g = mod_gcd(f, a);
      if (!g.is_constant() && degree_of(g) < static_cast<int>(deg)) {
        split = g;
      } else {
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), ring.p, d);
        e = (e - 1) / 2;
        ModPoly b = mod_powmod(a, e, f);
        split = mod_gcd(f, b - one);
      }
    }
    if (!split.is_constant() &&
        degree_of(split) < static_cast<int>(deg)) {
      equal_degree(split, d, rng, out);
      equal_degree(exact_div(f, split), d, rng, out);
      return;
    }
  }
}

std::uint64_t mix_seed(const ModPoly& f, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  auto absorb = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  absorb(f.ring().p);
  for (std::uint32_t c : f.coeffs()) absorb(c);
  return h;
}

}  // namespace

ModFactorization factor_mod_p(const ModPoly& f, std::uint64_t seed) {
  if (f.is_zero() || !f.is_monic())
    fail(errc::not_monic, "factor_mod_p requires a monic input");
  if (degree_of(f) < 1)
    fail(errc::degree_too_small, "factor_mod_p requires degree >= 1");
  const ZpRing& ring = f.ring();
  std::mt19937_64 rng(mix_seed(f, seed));
  ModFactorization result;
  result.input = f;
  for (const auto& [part, mult] : squarefree_decompose(f)) {
    for (const auto& [component, d] : distinct_degree(part)) {
      std::vector<ModPoly> irreducibles;
      equal_degree(component, d, rng, irreducibles);
      for (ModPoly& irr : irreducibles)
        result.factors.emplace_back(std::move(irr), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) {
              if (degree_of(a.first) != degree_of(b.first))
                return degree_of(a.first) < degree_of(b.first);
              return coeff_less(a.first, b.first);
            });
  ModPoly check = ModPoly::constant(ring, ring.one());
  for (const auto& [factor, mult] : result.factors)
    check = check * poly_pow(factor, mult);
  if (!(check == f))
    fail(errc::internal_invariant_violation,
         "refactored product does not reproduce the input");
  return result;
}

unsigned delta_oracle(std::uint64_t p, unsigned m, unsigned s) {
  if (m < 3) fail(errc::bad_input, "delta_oracle requires m >= 3");
  if (std::gcd(p, std::uint64_t(m)) != 1)
    fail(errc::bad_input, "delta_oracle requires p coprime to m");
  if (std::gcd(std::uint64_t(s), std::uint64_t(m)) != 1)
    fail(errc::bad_input, "delta_oracle requires gcd(s, m) = 1");
  if (p == 2) {
    const std::uint64_t u = mult_order(2, m);
    std::uint64_t pw = 1;
    for (unsigned delta = 1; delta <= u; ++delta) {
      pw = (pw * 2) % m;
      if (pw == 1 % m || pw == m - 1) return delta;
    }
    fail(errc::internal_invariant_violation, "delta_oracle (p=2) found nothing");
  }
  const std::uint64_t two_m = 2ull * m;
  const std::uint64_t u = mult_order(static_cast<std::int64_t>(p % two_m), two_m);
  const std::uint64_t sr = s % two_m;
  const std::uint64_t plus = sr;
  const std::uint64_t minus = (two_m - sr) % two_m;
  const std::uint64_t mplus = (m + sr) % two_m;
  const std::uint64_t mminus = (m + two_m - sr) % two_m;
  std::uint64_t pw2m = 1;  // p^delta mod 2m
  std::uint64_t pw4 = 1;   // p^delta mod 4
  for (unsigned delta = 1; delta <= 2 * u; ++delta) {
    pw2m = (pw2m * (p % two_m)) % two_m;
    pw4 = (pw4 * (p % 4)) % 4;
    const std::uint64_t sp = (sr * pw2m) % two_m;
    if (pw4 == 1 && (sp == plus || sp == minus)) return delta;
    if (pw4 == 3 && (sp == mplus || sp == mminus)) return delta;
  }
  fail(errc::internal_invariant_violation, "delta_oracle found nothing in 1..2u");
}

DeltaResult delta_formula(std::uint64_t p, unsigned m) {
  if (m < 3) fail(errc::bad_input, "delta_formula requires m >= 3");
  if (std::gcd(p, std::uint64_t(m)) != 1)
    fail(errc::bad_input, "delta_formula requires gcd(p, m) = 1");
  if (p == 2) {
    const std::uint64_t u = mult_order(2, m);
    if (u % 2 == 0 && pow_mod(2, u / 2, m) == m - 1)
      return {static_cast<unsigned>(u / 2), "2^(u'/2) = -1 (m): delta = u'/2"};
    return {static_cast<unsigned>(u), "delta = u'"};
  }
  const std::uint64_t two_m = 2ull * m;
  const std::uint64_t u = mult_order(static_cast<std::int64_t>(p % two_m), two_m);
  const std::uint64_t half_pow =
      (u % 2 == 0) ? pow_mod(p % two_m, u / 2, two_m) : 0;
  if (p % 4 == 1) {
    if (u % 2 == 0 && half_pow == two_m - 1)
      return {static_cast<unsigned>(u / 2),
              "p = 1 (4), p^(u/2) = -1 (2m): delta = u/2"};
    return {static_cast<unsigned>(u), "p = 1 (4): delta = u"};
  }
  // p = 3 (mod 4)
  if (u % 2 == 1)
    return {static_cast<unsigned>(2 * u), "p = 3 (4), u odd: delta = 2u"};
  if (u % 4 == 0) {
    if (half_pow == two_m - 1)
      return {static_cast<unsigned>(u / 2),
              "p = 3 (4), u = 0 (4), p^(u/2) = -1 (2m): delta = u/2"};
    return {static_cast<unsigned>(u), "p = 3 (4), u = 0 (4): delta = u"};
  }
  // u = 2 (mod 4)
  if (half_pow == (m + 1) % two_m || half_pow == (m - 1 + two_m) % two_m)
    return {static_cast<unsigned>(u / 2),
            "p = 3 (4), u = 2 (4), p^(u/2) = m+-1 (2m): delta = u/2"};
  return {static_cast<unsigned>(u), "p = 3 (4), u = 2 (4): delta = u"};
}

FactorShape predict_shape(unsigned n, std::uint32_t p) {
  if (n < 2) fail(errc::domain_too_small, "predict_shape requires n >= 2");
  if (!is_prime(p)) fail(errc::not_prime, "predict_shape requires prime p");
  const auto [k, m64] = prime_power_split(n, p);
  const unsigned m = static_cast<unsigned>(m64);
  const std::uint64_t phi_pk = totient(n / m);
  FactorShape shape;
  ZpRing ring(p);
  if (m == 1) {
    shape.special = FactorShape::Special::prime_power;
    if (p == 2 && k == 1) {
      // phi(2)/2 is not an integer; the congruence degenerates to Psi_2 = x,
      // consistent with x^2+4 = x^2 mod 2.
      shape.congruence = ModPoly::monomial(ring, ring.one(), 1);
      shape.display = "x";
    } else {
      const unsigned long e = static_cast<unsigned long>(phi_pk / 2);
      shape.congruence = poly_pow(mod_poly(p, {4, 0, 1}), e);
      shape.display = e == 1 ? std::string("x^2 + 4")
                             : "(x^2 + 4)^" + std::to_string(e);
    }
    return shape;
  }
  if (m == 2) {
    shape.special = FactorShape::Special::m_equals_2;
    shape.congruence = ModPoly::monomial(
        ring, ring.one(), static_cast<unsigned>(phi_pk));
    shape.display = to_string(shape.congruence);
    return shape;
  }
  const unsigned delta = delta_formula(p, m).delta;
  const unsigned phi_m = static_cast<unsigned>(totient(m));
  ShapePart part;
  part.degree = delta;
  if (p == 2) {
    part.count = phi_m / (2 * delta);
    part.multiplicity = 2 * static_cast<unsigned>(phi_pk);
  } else {
    part.count = phi_m / delta;
    part.multiplicity = static_cast<unsigned>(phi_pk);
  }
  shape.parts.push_back(part);
  return shape;
}

std::string shape_parts_str(const std::vector<ShapePart>& parts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << " ";
    os << "(delta=" << parts[i].degree << " count=" << parts[i].count
       << " mult=" << parts[i].multiplicity << ")";
  }
  return parts.empty() ? "(none)" : os.str();
}

std::string FactorShape::str() const {
  if (special != Special::none) return "congruence:" + display;
  return shape_parts_str(parts);
}

ReconciliationReport reconcile(unsigned n, std::uint32_t p, std::uint64_t seed,
                               FamilyCache& cache) {
  if (n < 2) fail(errc::domain_too_small, "reconcile requires n >= 2");
  if (!is_prime(p)) fail(errc::not_prime, "reconcile requires prime p");
  ReconciliationReport rep;
  rep.n = n;
  rep.p = p;
  const auto split = prime_power_split(n, p);
  rep.k = split.k;
  rep.m = static_cast<unsigned>(split.m);
  rep.predicted = predict_shape(n, p);

  const ModPoly psi_n = reduce_mod(cache.fibotomic(n), p);
  rep.observed = factor_mod_p(psi_n, seed);
  rep.product_ok = true;  // factor_mod_p verifies the refactored product

  // Observed shape: group by (degree, multiplicity).
  for (const auto& [factor, mult] : rep.observed.factors) {
    const unsigned deg = static_cast<unsigned>(degree_of(factor));
    auto it = std::find_if(rep.observed_parts.begin(), rep.observed_parts.end(),
                           [&](const ShapePart& part) {
                             return part.degree == deg &&
                                    part.multiplicity == mult;
                           });
    if (it == rep.observed_parts.end()) {
      rep.observed_parts.push_back({deg, 1, mult});
    } else {
      ++it->count;
    }
  }
  std::sort(rep.observed_parts.begin(), rep.observed_parts.end(),
            [](const ShapePart& a, const ShapePart& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.multiplicity < b.multiplicity;
            });

  if (rep.m <= 2) {
    rep.congruence_ok = (psi_n == rep.predicted.congruence);
    rep.shape_ok = rep.congruence_ok;
    if (!rep.congruence_ok)
      rep.detail = "special congruence mismatch: got " + to_string(psi_n) +
                   ", predicted " + to_string(rep.predicted.congruence);
    return rep;
  }

  const std::uint64_t phi_pk = totient(n / rep.m);
  const ModPoly psi_m = reduce_mod(cache.fibotomic(rep.m), p);
  rep.congruence_ok =
      (psi_n == poly_pow(psi_m, static_cast<unsigned long>(phi_pk)));
  if (!rep.congruence_ok)
    rep.detail = "Psi_n != Psi_m^phi(p^k) mod p";

  rep.shape_ok = (rep.observed_parts == rep.predicted.parts);
  if (!rep.shape_ok && rep.detail.empty())
    rep.detail = "shape mismatch: observed " + shape_parts_str(rep.observed_parts) +
                 ", predicted " + rep.predicted.str();

  rep.formula_delta = delta_formula(p, rep.m).delta;
  std::optional<unsigned> common;
  for (unsigned s = 1; s < rep.m; ++s) {
    if (std::gcd(s, rep.m) != 1) continue;
    const unsigned d = delta_oracle(p, rep.m, s);
    if (!common) {
      common = d;
    } else if (*common != d) {
      rep.oracle_s_independent = false;
    }
  }
  rep.oracle_delta = common;
  bool degrees_ok = true;
  for (const auto& [factor, mult] : rep.observed.factors) {
    if (static_cast<unsigned>(degree_of(factor)) != *rep.formula_delta)
      degrees_ok = false;
  }
  rep.delta_three_way_ok = rep.oracle_s_independent && common.has_value() &&
                           *common == *rep.formula_delta && degrees_ok;
  if (!rep.delta_three_way_ok && rep.detail.empty()) {
    std::ostringstream os;
    os << "delta disagreement: formula=" << *rep.formula_delta << " oracle="
       << (common ? std::to_string(*common) : std::string("varies"))
       << " s_independent=" << (rep.oracle_s_independent ? "yes" : "no");
    rep.detail = os.str();
  }
  return rep;
}

}  // namespace fibotomic
