#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibotomic/families.hpp"
#include "fibotomic/numth.hpp"
#include "fibotomic/resdisc.hpp"

using namespace fibotomic;

namespace {

std::mt19937_64 rng(987654321);

IntPoly random_poly(int deg, long max_abs, bool monic) {
  std::uniform_int_distribution<long> coeff_dist(-max_abs, max_abs);
  std::vector<mpz_class> c;
  for (int j = 0; j < deg; ++j) c.emplace_back(coeff_dist(rng));
  if (monic) {
    c.emplace_back(1);
  } else {
    long lead = 0;
    while (lead == 0) lead = coeff_dist(rng);
    c.emplace_back(lead);
  }
  return IntPoly(IntRing{}, std::move(c));
}

mpz_class res(const IntPoly& f, const IntPoly& g, ResultantEngine e) {
  return resultant(f, g, e).value();
}

}  // namespace

TEST_CASE("resultant examples, both engines") {
  const IntPoly f = int_poly({1, 0, 1});
  const IntPoly g = int_poly({3, 0, 1});
  for (auto engine :
       {ResultantEngine::sylvester, ResultantEngine::subresultant}) {
    CHECK(res(f, g, engine) == 4);
    CHECK(res(int_poly({0, 1}), g, engine) == 3);   // res(Psi_2, Psi_6) = g(0)
    CHECK(res(int_poly({-1, 1}), int_poly({1, 1}), engine) == 2);  // g(1)
    CHECK(res(f, int_poly({1}), engine) == 1);
    CHECK(res(int_poly({7}), int_poly({5}), engine) == 1);
    CHECK(res(int_poly({3}), f, engine) == 9);  // c^{deg f}
  }
  CHECK_THROWS_AS(resultant_sylvester(int_poly({}), f), error);
  CHECK_THROWS_AS(resultant_subresultant(f, int_poly({})), error);
}

TEST_CASE("root-product and swap laws on random inputs") {
  std::uniform_int_distribution<long> adist(-12, 12);
  for (int i = 0; i < 400; ++i) {
    // res(x - a, g) = g(a)
    const long a = adist(rng);
    const IntPoly lin = int_poly({-a, 1});
    const IntPoly g = random_poly(1 + int(i % 6), 50, false);
    CHECK(res(lin, g, ResultantEngine::sylvester) == evaluate(g, mpz_class(a)));
    CHECK(res(lin, g, ResultantEngine::subresultant) ==
          evaluate(g, mpz_class(a)));
  }
  for (int i = 0; i < 200; ++i) {
    const IntPoly f = random_poly(1 + int(i % 5), 30, false);
    const IntPoly g = random_poly(1 + int((i / 5) % 5), 30, false);
    const int sign =
        (degree_of(f) % 2 == 1 && degree_of(g) % 2 == 1) ? -1 : 1;
    CHECK(res(f, g, ResultantEngine::sylvester) ==
          sign * res(g, f, ResultantEngine::sylvester));
    // multiplicativity in the first argument
    const IntPoly h = random_poly(1 + int(i % 3), 30, false);
    CHECK(res(f * h, g, ResultantEngine::subresultant) ==
          res(f, g, ResultantEngine::subresultant) *
              res(h, g, ResultantEngine::subresultant));
  }
}

TEST_CASE("engines agree on 10^3 random monic pairs") {
  for (int i = 0; i < 1000; ++i) {
    const IntPoly f = random_poly(1 + int(i % 10), 100, true);
    const IntPoly g = random_poly(1 + int((i / 10) % 10), 100, true);
    const SignedMagnitude a = resultant_sylvester(f, g);
    const SignedMagnitude b = resultant_subresultant(f, g);
    CAPTURE(to_string(f));
    CAPTURE(to_string(g));
    CHECK(a == b);
  }
}

TEST_CASE("engines agree on random non-monic pairs including repeated roots") {
  for (int i = 0; i < 300; ++i) {
    IntPoly f = random_poly(1 + int(i % 6), 40, false);
    IntPoly g = random_poly(1 + int((i / 6) % 6), 40, false);
    if (i % 3 == 0) g = g * f;  // force a common factor -> resultant 0
    CHECK(resultant_sylvester(f, g) == resultant_subresultant(f, g));
  }
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(int_poly({2, 0, 1})).value() == -8);
  CHECK(discriminant(int_poly({0, 1})).value() == 1);
  // The closed form for n = 5 gives 10^4 / 5^2 = 400.
  CHECK(discriminant(int_poly({1, 0, 3, 0, 1})).value() == 400);
  CHECK(discriminant(int_poly({1, 0, 3, 0, 1}), ResultantEngine::sylvester)
            .value() == 400);
  CHECK(discriminant(int_poly({1, 1, 1})).value() == -3);
  CHECK(discriminant(int_poly({-1, 0, 0, 1})).value() == -27);  // x^3 - 1
  // 2x^3 + 3x + 1: 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 = -216 - 108
  CHECK(discriminant(int_poly({1, 3, 0, 2})).value() == -324);
  CHECK_THROWS_AS(discriminant(int_poly({5})), error);
  CHECK_THROWS_AS(discriminant(int_poly({})), error);
}

TEST_CASE("quadratic and cubic discriminant formulas on random inputs") {
  std::uniform_int_distribution<long> dist(-30, 30);
  for (int i = 0; i < 300; ++i) {
    long a = 0;
    while (a == 0) a = dist(rng);
    const long b = dist(rng), c = dist(rng);
    CHECK(discriminant(int_poly({c, b, a})).value() == b * b - 4 * a * c);
  }
  for (int i = 0; i < 300; ++i) {
    // depressed cubic x^3 + px + q: disc = -4p^3 - 27q^2
    const long p = dist(rng), q = dist(rng);
    const mpz_class expect = mpz_class(-4) * p * p * p - mpz_class(27) * q * q;
    CHECK(discriminant(int_poly({q, p, 0, 1})).value() == expect);
    CHECK(discriminant(int_poly({q, p, 0, 1}), ResultantEngine::sylvester)
              .value() == expect);
  }
}

TEST_CASE("closed-form discriminants") {
  CHECK(disc_formula_psi(3).value() == -4);
  CHECK(disc_formula_psi(4).value() == -8);
  CHECK(disc_formula_psi(5).value() == 400);
  CHECK(disc_formula_psi(6).value() == -12);
  CHECK(disc_formula_psi(2).value() == 1);
  CHECK(disc_formula_phi(3).value() == -3);
  CHECK(disc_formula_phi(4).value() == -4);
  CHECK(disc_formula_phi(5).value() == 125);
  CHECK_THROWS_AS(disc_formula_psi(1), error);
  CHECK_THROWS_AS(disc_formula_phi(1), error);
  FamilyCache cache;
  for (unsigned n = 2; n <= 60; ++n) {
    CHECK(discriminant(cache.fibotomic(n)) == disc_formula_psi(n));
    CHECK(discriminant(cache.cyclotomic(n)) == disc_formula_phi(n));
  }
}

TEST_CASE("discriminant ratio") {
  CHECK(disc_ratio(4) == ExactRatio{2, 1});
  CHECK(disc_ratio(6) == ExactRatio{4, 1});
  CHECK(disc_ratio(9) == ExactRatio{64, 3});
  for (unsigned n = 2; n <= 120; ++n) {
    const ExactRatio r = disc_ratio(n);
    CHECK(gcd(r.num, r.den) == 1);
    CHECK(disc_formula_psi(n).value() * r.den ==
          disc_formula_phi(n).value() * r.num);
  }
}

TEST_CASE("closed-form resultants") {
  CHECK(res_formula_psi(2, 6).value() == 3);
  CHECK(res_formula_psi(3, 6).value() == 4);
  CHECK(res_formula_psi(4, 6).value() == 1);
  CHECK(res_formula_phi(2, 4).value() == 2);
  CHECK(res_formula_phi(2, 6).value() == 3);
  CHECK(res_formula_phi(3, 5).value() == 1);
  CHECK_THROWS_AS(res_formula_psi(1, 6), error);
  CHECK_THROWS_AS(res_formula_psi(6, 6), error);
  CHECK_THROWS_AS(res_formula_psi(6, 3), error);
  FamilyCache cache;
  for (unsigned m = 2; m <= 30; ++m) {
    for (unsigned n = m + 1; n <= 30; ++n) {
      CHECK((totient(m) * totient(n)) % 2 == 0);
      CHECK(resultant_subresultant(cache.fibotomic(m), cache.fibotomic(n)) ==
            res_formula_psi(m, n));
      CHECK(resultant_subresultant(cache.cyclotomic(m), cache.cyclotomic(n)) ==
            res_formula_phi(m, n));
    }
  }
}

TEST_CASE("homogenized closed forms against y-specialization") {
  CHECK(homog_disc_psi(4).y_exponent == 2);
  CHECK(homog_disc_psi(4).value.value() == -8);
  CHECK(homog_disc_psi(2).y_exponent == 0);
  CHECK(homog_disc_psi(2).value.value() == 1);
  CHECK(homog_disc_psi(6).y_exponent == 2);
  CHECK(homog_disc_psi(6).value.value() == -12);
  CHECK(homog_res_psi(2, 6).y_exponent == 2);
  CHECK(homog_res_psi(2, 6).value.value() == 3);
  CHECK(homog_res_psi(3, 6).y_exponent == 4);
  CHECK(homog_res_psi(3, 6).value.value() == 4);
  CHECK(homog_res_psi(4, 6).y_exponent == 4);
  CHECK(homog_res_psi(4, 6).value.value() == 1);

  FamilyCache cache;
  // Delta of the y0-specialization carries y0^{phi(phi-1)}.
  for (unsigned n = 2; n <= 30; ++n) {
    const HomogeneousView view = homogenize(Family::fibotomic, n, cache);
    const HomogValue expect = homog_disc_psi(n);
    for (long y0 : {2l, 3l}) {
      mpz_class scale;
      mpz_class y(y0);
      mpz_pow_ui(scale.get_mpz_t(), y.get_mpz_t(), expect.y_exponent);
      CHECK(discriminant(specialize_y(view, y0)).value() ==
            scale * expect.value.value());
    }
  }
  for (unsigned m = 2; m <= 16; ++m) {
    for (unsigned n = m + 1; n <= 16; ++n) {
      const HomogValue expect = homog_res_psi(m, n);
      for (long y0 : {2l, 3l}) {
        const IntPoly fm =
            specialize_y(homogenize(Family::fibotomic, m, cache), y0);
        const IntPoly fn =
            specialize_y(homogenize(Family::fibotomic, n, cache), y0);
        mpz_class scale;
        mpz_class y(y0);
        mpz_pow_ui(scale.get_mpz_t(), y.get_mpz_t(), expect.y_exponent);
        CHECK(resultant_subresultant(fm, fn).value() ==
              scale * expect.value.value());
      }
    }
  }
}
