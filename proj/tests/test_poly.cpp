#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibotomic/poly.hpp"

using namespace fibotomic;

namespace {

std::mt19937_64 rng(20240901);

IntPoly random_int_poly(int max_deg, long max_abs) {
  std::uniform_int_distribution<int> deg_dist(-1, max_deg);
  std::uniform_int_distribution<long> coeff_dist(-max_abs, max_abs);
  const int d = deg_dist(rng);
  std::vector<mpz_class> c;
  for (int j = 0; j <= d; ++j) c.emplace_back(coeff_dist(rng));
  return IntPoly(IntRing{}, std::move(c));
}

RatPoly random_rat_poly(int max_deg, long max_abs) {
  std::uniform_int_distribution<int> deg_dist(-1, max_deg);
  std::uniform_int_distribution<long> num_dist(-max_abs, max_abs);
  std::uniform_int_distribution<long> den_dist(1, 40);
  const int d = deg_dist(rng);
  std::vector<mpq_class> c;
  for (int j = 0; j <= d; ++j) {
    mpq_class q(num_dist(rng), den_dist(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return RatPoly(RatRing{}, std::move(c));
}

GaussPoly random_gauss_poly(int max_deg, long max_abs) {
  std::uniform_int_distribution<int> deg_dist(-1, max_deg);
  std::uniform_int_distribution<long> coeff_dist(-max_abs, max_abs);
  const int d = deg_dist(rng);
  std::vector<GaussInt> c;
  for (int j = 0; j <= d; ++j)
    c.emplace_back(mpz_class(coeff_dist(rng)), mpz_class(coeff_dist(rng)));
  return GaussPoly(GaussRing{}, std::move(c));
}

ModPoly random_mod_poly(std::uint32_t p, int max_deg) {
  std::uniform_int_distribution<int> deg_dist(-1, max_deg);
  std::uniform_int_distribution<std::uint64_t> coeff_dist(0, p - 1);
  const int d = deg_dist(rng);
  ZpRing ring(p);
  std::vector<std::uint32_t> c;
  for (int j = 0; j <= d; ++j)
    c.push_back(static_cast<std::uint32_t>(coeff_dist(rng)));
  return ModPoly(ring, std::move(c));
}

template <class P, class Gen>
void check_ring_axioms(Gen gen, int cases) {
  for (int i = 0; i < cases; ++i) {
    P f = gen(), g = gen(), h = gen();
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == P(f.ring()));
    CHECK(f + (-f) == P(f.ring()));
  }
}

}  // namespace

TEST_CASE("canonical form and degree sentinel") {
  IntPoly z = int_poly({});
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK_THROWS_AS(degree_of(z), error);
  IntPoly f(IntRing{}, {mpz_class(3), mpz_class(0), mpz_class(0)});
  CHECK(f.degree() == 0);  // trailing zeros trimmed
  CHECK(int_poly({0, 0}) == z);
}

TEST_CASE("add/sub/neg examples") {
  CHECK(int_poly({1, 0, 1}) + int_poly({}) == int_poly({1, 0, 1}));
  CHECK(int_poly({0, 1}) + int_poly({0, -1}) == int_poly({}));
  CHECK(int_poly({0, 2, 0, 1}) - int_poly({0, 1}) == int_poly({0, 1, 0, 1}));
}

TEST_CASE("mul examples") {
  CHECK(int_poly({1, 1}) * int_poly({-1, 1}) == int_poly({-1, 0, 1}));
  IntPoly f = int_poly({3, -2, 0, 7});
  CHECK(f * int_poly({1}) == f);
  CHECK(int_poly({1, 0, 1}) * int_poly({3, 0, 1}) == int_poly({3, 0, 4, 0, 1}));
}

TEST_CASE("ring axioms on randomized triples") {
  check_ring_axioms<IntPoly>([] { return random_int_poly(8, 1000000); }, 250);
  check_ring_axioms<RatPoly>([] { return random_rat_poly(6, 1000); }, 250);
  check_ring_axioms<GaussPoly>([] { return random_gauss_poly(6, 1000); }, 250);
  check_ring_axioms<ModPoly>([] { return random_mod_poly(7, 8); }, 250);
  check_ring_axioms<ModPoly>([] { return random_mod_poly(2147483647u, 8); },
                             250);
}

TEST_CASE("exact_div examples") {
  // F_6 / Psi_3
  CHECK(exact_div(int_poly({0, 3, 0, 4, 0, 1}), int_poly({1, 0, 1})) ==
        int_poly({0, 3, 0, 1}));
  IntPoly f = int_poly({5, 1, -3});
  CHECK(exact_div(f, int_poly({1})) == f);
  CHECK_THROWS_AS(exact_div(int_poly({1, 0, 1}), int_poly({0, 1})), error);
  CHECK_THROWS_AS(exact_div(f, int_poly({})), error);
}

TEST_CASE("exact_div inverts mul for monic divisors") {
  for (int i = 0; i < 300; ++i) {
    IntPoly f = random_int_poly(8, 1000000);
    IntPoly g = random_int_poly(5, 1000000);
    // force monic nonzero g
    std::vector<mpz_class> gc(g.coeffs());
    gc.push_back(1);
    g = IntPoly(IntRing{}, std::move(gc));
    CHECK(exact_div(f * g, g) == f);
  }
  for (int i = 0; i < 200; ++i) {
    ModPoly f = random_mod_poly(13, 8);
    ModPoly g = random_mod_poly(13, 5);
    if (g.is_zero()) continue;
    CHECK(exact_div(f * g, g) == f);
  }
}

TEST_CASE("compose examples and evaluation homomorphism") {
  CHECK(compose(int_poly({1, 0, 1}), int_poly({0, 3, 0, 1})) ==
        int_poly({1, 0, 9, 0, 6, 0, 1}));
  IntPoly f = int_poly({2, -1, 5});
  CHECK(compose(f, int_poly({0, 1})) == f);
  // (x^3+3x)^4 + 3(x^3+3x)^2 + 1, expanded via generic machinery
  IntPoly inner = int_poly({0, 3, 0, 1});
  CHECK(compose(int_poly({1, 0, 3, 0, 1}), inner) ==
        poly_pow(inner, 4) + scaled(poly_pow(inner, 2), mpz_class(3)) +
            int_poly({1}));
  for (int i = 0; i < 200; ++i) {
    IntPoly a = random_int_poly(5, 50);
    IntPoly b = random_int_poly(4, 50);
    std::uniform_int_distribution<long> cdist(-20, 20);
    mpz_class c(cdist(rng));
    CHECK(evaluate(compose(a, b), c) == evaluate(a, evaluate(b, c)));
  }
}

TEST_CASE("even_substitute examples and round trip") {
  CHECK(even_substitute(int_poly({1, 0, 3, 0, 1}), int_poly({-4, 0, -1})) ==
        int_poly({5, 0, 5, 0, 1}));
  CHECK(even_substitute(int_poly({0, 0, 1}), int_poly({0, 1})) ==
        int_poly({0, 1}));
  CHECK_THROWS_AS(even_substitute(int_poly({0, 1, 0, 1}), int_poly({0, 1})),
                  error);
  for (int i = 0; i < 200; ++i) {
    // build an even polynomial, substitute y^2, expect the original with z->y
    IntPoly h = random_int_poly(4, 1000);
    std::vector<mpz_class> even(h.coeffs().size() * 2, mpz_class(0));
    for (std::size_t j = 0; j < h.coeffs().size(); ++j)
      even[2 * j] = h.coeffs()[j];
    IntPoly f(IntRing{}, std::move(even));
    CHECK(even_substitute(f, int_poly({0, 0, 1})) == f);
  }
}

TEST_CASE("derivative examples, linearity, product rule") {
  CHECK(derivative(int_poly({2, 0, 1})) == int_poly({0, 2}));
  CHECK(derivative(int_poly({9})) == int_poly({}));
  CHECK(derivative(int_poly({1, 0, 3, 0, 1})) == int_poly({0, 6, 0, 4}));
  for (int i = 0; i < 200; ++i) {
    IntPoly f = random_int_poly(8, 100000);
    IntPoly g = random_int_poly(8, 100000);
    CHECK(derivative(f + g) == derivative(f) + derivative(g));
    CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
  }
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(int_poly({3, 0, 1}), mpz_class(0)) == 3);
  CHECK(evaluate(int_poly({1, 0, 1}), mpz_class(2)) == 5);
  CHECK(evaluate(int_poly({1, 0, 3, 0, 1}), mpz_class(1)) == 5);
}

TEST_CASE("domain maps") {
  CHECK(reduce_mod(int_poly({1, 0, 4, 0, 1}), 2) == mod_poly(2, {1, 0, 0, 0, 1}));
  CHECK(reduce_mod(int_poly({-1, -3}), 5) == mod_poly(5, {4, 2}));
  CHECK(to_integer(gauss_poly({{2, 0}, {0, 0}, {1, 0}})) == int_poly({2, 0, 1}));
  CHECK_THROWS_AS(to_integer(gauss_poly({{0, 0}, {0, 1}})), error);
  CHECK(to_integer(to_rational(int_poly({7, -2}))) == int_poly({7, -2}));
  RatPoly half(RatRing{}, {mpq_class(1, 2)});
  CHECK_THROWS_AS(to_integer(half), error);
}

TEST_CASE("modulus mismatch is loud for arithmetic, quiet for equality") {
  ModPoly f = mod_poly(5, {1, 2});
  ModPoly g = mod_poly(7, {1, 2});
  CHECK_THROWS_AS(f + g, error);
  CHECK_THROWS_AS(f * g, error);
  CHECK_FALSE(f == g);
}

TEST_CASE("gaussian exact division") {
  GaussRing ring;
  GaussPoly f = gauss_poly({{0, 2}, {0, 0}, {0, 1}});  // i(x^2+2)
  GaussPoly unit = gauss_poly({{0, 1}});
  CHECK(exact_div(f * unit, unit) == f);
  GaussInt q;
  CHECK(ring.try_div(q, GaussInt(5, 0), GaussInt(2, 1)));  // 5/(2+i) = 2-i
  CHECK(q == GaussInt(2, -1));
  CHECK_FALSE(ring.try_div(q, GaussInt(1, 0), GaussInt(2, 1)));
}

TEST_CASE("formatting") {
  CHECK(to_string(int_poly({1, 0, 4, 0, 1})) == "x^4 + 4x^2 + 1");
  CHECK(to_string(int_poly({1, -1, 1})) == "x^2 - x + 1");
  CHECK(to_string(int_poly({})) == "0");
  CHECK(to_string(int_poly({-3})) == "-3");
  CHECK(to_string(int_poly({0, 1})) == "x");
  CHECK(to_string(mod_poly(5, {2, 0, 1})) == "x^2 + 2");
  CHECK(coeff_strings(int_poly({1, 0, 4, 0, 1})) ==
        std::vector<std::string>{"1", "0", "4", "0", "1"});
}
