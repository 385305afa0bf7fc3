#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <thread>

#include "fibotomic/families.hpp"
#include "fibotomic/numth.hpp"

using namespace fibotomic;

namespace {

// Independent construction route for the oracle: peel F_n by the previously
// built Psi_d (divisor chain) instead of the Moebius quotient.
class ChainOracle {
 public:
  const IntPoly& psi(unsigned n) {
    auto it = psi_.find(n);
    if (it != psi_.end()) return it->second;
    IntPoly value = fib(n);
    for (std::uint64_t d : divisors(n)) {
      if (d == n) continue;
      value = exact_div(value, psi(static_cast<unsigned>(d)));
    }
    return psi_.emplace(n, std::move(value)).first->second;
  }

  const IntPoly& phi(unsigned n) {
    auto it = phi_.find(n);
    if (it != phi_.end()) return it->second;
    std::vector<mpz_class> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    IntPoly value(IntRing{}, std::move(c));
    for (std::uint64_t d : divisors(n)) {
      if (d == n) continue;
      value = exact_div(value, phi(static_cast<unsigned>(d)));
    }
    return phi_.emplace(n, std::move(value)).first->second;
  }

  IntPoly fib(unsigned n) {
    IntPoly prev = int_poly({1});
    if (n == 1) return prev;
    IntPoly cur = int_poly({0, 1});
    for (unsigned i = 3; i <= n; ++i) {
      IntPoly next = shifted_up(cur, 1) + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

 private:
  std::map<unsigned, IntPoly> psi_, phi_;
};

}  // namespace

TEST_CASE("fibonacci examples") {
  FamilyCache cache;
  CHECK(cache.fibonacci(1) == int_poly({1}));
  CHECK(cache.fibonacci(2) == int_poly({0, 1}));
  CHECK(cache.fibonacci(3) == int_poly({1, 0, 1}));
  CHECK(cache.fibonacci(4) == int_poly({0, 2, 0, 1}));
  CHECK(cache.fibonacci(5) == int_poly({1, 0, 3, 0, 1}));
  CHECK(cache.fibonacci(6) == int_poly({0, 3, 0, 4, 0, 1}));
  CHECK(degree_of(cache.fibonacci(40)) == 39);
  CHECK(cache.fibonacci(40).is_monic());
}

TEST_CASE("fibotomic examples") {
  FamilyCache cache;
  CHECK(cache.fibotomic(1) == int_poly({1}));
  CHECK(cache.fibotomic(2) == int_poly({0, 1}));
  CHECK(cache.fibotomic(3) == int_poly({1, 0, 1}));
  CHECK(cache.fibotomic(4) == int_poly({2, 0, 1}));
  CHECK(cache.fibotomic(6) == int_poly({3, 0, 1}));
  CHECK(cache.fibotomic(10) == int_poly({5, 0, 5, 0, 1}));
  CHECK(cache.fibotomic(12) == int_poly({1, 0, 4, 0, 1}));
}

TEST_CASE("cyclotomic examples") {
  FamilyCache cache;
  CHECK(cache.cyclotomic(1) == int_poly({-1, 1}));
  CHECK(cache.cyclotomic(2) == int_poly({1, 1}));
  CHECK(cache.cyclotomic(6) == int_poly({1, -1, 1}));
  CHECK(cache.cyclotomic(8) == int_poly({1, 0, 0, 0, 1}));
  CHECK(cache.cyclotomic(105).coeffs()[7] == -2);  // first coefficient beyond +-1
}

TEST_CASE("families agree with the divisor-chain oracle") {
  FamilyCache cache;
  ChainOracle oracle;
  for (unsigned n = 1; n <= 80; ++n) {
    CHECK(cache.fibotomic(n) == oracle.psi(n));
    CHECK(cache.cyclotomic(n) == oracle.phi(n));
    CHECK(cache.fibonacci(n) == oracle.fib(n));
  }
}

TEST_CASE("product identities, degree, parity at reduced range") {
  FamilyCache cache;
  for (unsigned n = 1; n <= 120; ++n) {
    IntPoly psi_prod = int_poly({1});
    for (std::uint64_t d : divisors(n))
      psi_prod = psi_prod * cache.fibotomic(static_cast<unsigned>(d));
    CHECK(psi_prod == cache.fibonacci(n));
    if (n >= 2) {
      const IntPoly& psi = cache.fibotomic(n);
      CHECK(static_cast<std::uint64_t>(degree_of(psi)) == totient(n));
      CHECK(psi.is_monic());
      if (n >= 3) {
        const std::uint64_t parity = totient(n) % 2;
        for (std::size_t j = 0; j < psi.coeffs().size(); ++j) {
          if (j % 2 != parity) CHECK(sgn(psi.coeffs()[j]) == 0);
        }
      }
    }
  }
}

TEST_CASE("constant-term theorem") {
  CHECK(psi_constant_term(2) == 0);
  CHECK(psi_constant_term(18) == 3);
  CHECK(psi_constant_term(15) == 1);
  CHECK(psi_constant_term(1) == 1);
  CHECK(psi_constant_term(4) == 2);    // 4 = 2 * 2^1
  CHECK(psi_constant_term(50) == 5);   // 50 = 2 * 5^2
  CHECK(psi_constant_term(30) == 1);
  FamilyCache cache;
  for (unsigned n = 1; n <= 400; ++n) {
    CHECK(evaluate(cache.fibotomic(n), mpz_class(0)) == psi_constant_term(n));
  }
}

TEST_CASE("cyclotomic value at one") {
  CHECK(phi_at_one(9) == 3);
  CHECK(phi_at_one(6) == 1);
  CHECK(phi_at_one(2) == 2);
  CHECK_THROWS_AS(phi_at_one(1), error);
  FamilyCache cache;
  for (unsigned n = 2; n <= 500; ++n) {
    CHECK(evaluate(cache.cyclotomic(n), mpz_class(1)) == phi_at_one(n));
  }
}

TEST_CASE("psi_pm identity examples") {
  FamilyCache cache;
  PsiPmReport a = verify_psi_pm(2, 4, cache);
  CHECK(a.case_label == 'a');
  CHECK(a.ok());
  CHECK(a.lhs == int_poly({2, 0, 4, 0, 1}));  // Psi_8
  PsiPmReport a2 = verify_psi_pm(2, 2, cache);
  CHECK(a2.case_label == 'a');
  CHECK(a2.ok());
  CHECK(a2.lhs == int_poly({2, 0, 1}));  // Psi_4, the m=2 sign case
  PsiPmReport b = verify_psi_pm(2, 3, cache);
  CHECK(b.case_label == 'b');
  CHECK(b.ok());
  CHECK(b.lhs == int_poly({3, 0, 1}));  // Psi_6
  PsiPmReport c = verify_psi_pm(3, 3, cache);
  CHECK(c.case_label == 'c');
  CHECK(c.ok());
  CHECK(c.lhs == int_poly({1, 0, 9, 0, 6, 0, 1}));  // Psi_9
  PsiPmReport d = verify_psi_pm(3, 2, cache);
  CHECK(d.case_label == 'd');
  CHECK(d.ok());
}

TEST_CASE("psi_pm identities sweep") {
  FamilyCache cache;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u}) {
    for (unsigned m = 2; p * m <= 60; ++m) {
      PsiPmReport rep = verify_psi_pm(p, m, cache);
      CAPTURE(p);
      CAPTURE(m);
      CHECK(rep.ok());
    }
  }
  CHECK_THROWS_AS(verify_psi_pm(4, 3, cache), error);
  CHECK_THROWS_AS(verify_psi_pm(3, 1, cache), error);
}

TEST_CASE("cyclotomic shift identities at full stated ranges") {
  FamilyCache cache;
  for (unsigned m = 3; m <= 99; m += 2) {
    CAPTURE(m);
    CHECK(cache.cyclotomic(2 * m) ==
          compose(cache.cyclotomic(m), int_poly({0, -1})));
  }
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (unsigned m = 1; p * m <= 300; ++m) {
      CAPTURE(p);
      CAPTURE(m);
      const IntPoly sub = compose(cache.cyclotomic(m),
                                  IntPoly::monomial(IntRing{}, mpz_class(1), p));
      if (m % p == 0) {
        CHECK(cache.cyclotomic(p * m) == sub);
      } else {
        CHECK(cache.cyclotomic(p * m) * cache.cyclotomic(m) == sub);
      }
    }
  }
}

TEST_CASE("homogenize and specialize") {
  FamilyCache cache;
  HomogeneousView v4 = homogenize(Family::fibotomic, 4, cache);
  CHECK(v4.base == int_poly({2, 0, 1}));
  CHECK(v4.total_degree == 2);
  CHECK(specialize_y(v4, 1) == int_poly({2, 0, 1}));
  CHECK(specialize_y(v4, 3) == int_poly({18, 0, 1}));
  HomogeneousView v1 = homogenize(Family::fibotomic, 1, cache);
  CHECK(v1.base == int_poly({1}));
  CHECK(v1.total_degree == 0);
  HomogeneousView f3 = homogenize(Family::fibonacci, 3, cache);
  CHECK(f3.base == int_poly({1, 0, 1}));
  CHECK(specialize_y(f3, 2) == int_poly({4, 0, 1}));
  HomogeneousView v6 = homogenize(Family::fibotomic, 6, cache);
  CHECK(specialize_y(v6, 2) == int_poly({12, 0, 1}));
  // weight rule against the definition y0^phi * Psi(x / y0) cleared
  FamilyCache fresh;
  for (unsigned n = 2; n <= 60; ++n) {
    HomogeneousView view = homogenize(Family::fibotomic, n, fresh);
    for (long y0 : {1l, 2l, 3l}) {
      const IntPoly got = specialize_y(view, y0);
      mpz_class y(y0);
      const IntPoly& base = view.base;
      for (std::size_t j = 0; j < base.coeffs().size(); ++j) {
        mpz_class w;
        mpz_pow_ui(w.get_mpz_t(), y.get_mpz_t(),
                   view.total_degree - static_cast<unsigned>(j));
        CHECK(got.coeff(j) == base.coeffs()[j] * w);
      }
    }
  }
}

TEST_CASE("cache is consistent under concurrent access") {
  FamilyCache cache;
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&cache, t] {
      for (unsigned n = 1; n <= 60; ++n) {
        unsigned idx = (t % 2 == 0) ? n : 61 - n;
        cache.fibotomic(idx);
        cache.cyclotomic(idx);
      }
    });
  }
  for (auto& w : workers) w.join();
  FamilyCache serial;
  for (unsigned n = 1; n <= 60; ++n) {
    CHECK(cache.fibotomic(n) == serial.fibotomic(n));
    CHECK(cache.cyclotomic(n) == serial.cyclotomic(n));
  }
}
