#include "fibotomic/numth.hpp"

#include <algorithm>
#include <numeric>

#include "fibotomic/errors.hpp"

namespace fibotomic {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_coprime: return "NotCoprime";
    case errc::not_prime: return "NotPrime";
    case errc::modulus_mismatch: return "ModulusMismatch";
    case errc::inexact_division: return "InexactDivision";
    case errc::odd_term_present: return "OddTermPresent";
    case errc::not_real_result: return "NotRealResult";
    case errc::not_integral: return "NotIntegral";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::domain_too_small: return "DomainTooSmall";
    case errc::bad_range: return "BadRange";
    case errc::bad_input: return "BadInput";
    case errc::not_monic: return "NotMonic";
    case errc::not_invertible: return "NotInvertible";
    case errc::internal_invariant_violation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) fail(errc::bad_input, "pow_mod with zero modulus");
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) fail(errc::bad_input, "factorize(0)");
  Factorization out;
  out.n = n;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t q = 5; q * q <= n; q += 6) {
    strip(q);
    strip(q + 2);
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

int mobius(std::uint64_t n) {
  Factorization f = factorize(n);
  for (const PrimePower& pp : f.factors) {
    if (pp.exponent > 1) return 0;
  }
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t phi = 1;
  for (const PrimePower& pp : factorize(n).factors) {
    std::uint64_t q = pp.prime;
    for (unsigned e = 1; e < pp.exponent; ++e) q *= pp.prime;
    phi *= q - q / pp.prime;
  }
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const PrimePower& pp : factorize(n).factors) {
    const std::size_t base = out.size();
    std::uint64_t q = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      q *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t mult_order(std::int64_t a, std::uint64_t n) {
  if (n < 2) fail(errc::bad_input, "mult_order modulus must be >= 2");
  std::int64_t r = a % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  std::uint64_t x = static_cast<std::uint64_t>(r);
  if (std::gcd(x, n) != 1) fail(errc::not_coprime, "mult_order requires gcd(a,n)=1");
  std::uint64_t acc = x % n;
  std::uint64_t u = 1;
  while (acc != 1) {
    acc = mul_mod(acc, x, n);
    ++u;
    if (u > n)
      fail(errc::internal_invariant_violation, "mult_order failed to terminate");
  }
  return u;
}

PrimePowerSplit prime_power_split(std::uint64_t n, std::uint64_t p) {
  if (n == 0) fail(errc::bad_input, "prime_power_split(0, p)");
  if (!is_prime(p)) fail(errc::not_prime, "prime_power_split requires prime p");
  PrimePowerSplit s{0, n};
  while (s.m % p == 0) {
    s.m /= p;
    ++s.k;
  }
  return s;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  Factorization f = factorize(n);
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors[0];
}

}  // namespace fibotomic
