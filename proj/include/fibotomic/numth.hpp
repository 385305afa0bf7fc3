#ifndef FIBOTOMIC_NUMTH_HPP
#define FIBOTOMIC_NUMTH_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace fibotomic {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

// Canonical prime factorization, primes ascending; n = 1 has no factors.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;
};

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(std::uint64_t n);

Factorization factorize(std::uint64_t n);

int mobius(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending, incl. 1 and n

// Smallest u >= 1 with a^u = 1 (mod n); throws not_coprime when gcd(a,n) != 1.
std::uint64_t mult_order(std::int64_t a, std::uint64_t n);

struct PrimePowerSplit {
  unsigned k;       // exponent of p in n
  std::uint64_t m;  // n / p^k, coprime to p
};

// n = p^k * m with gcd(p, m) = 1; throws not_prime if p is composite.
PrimePowerSplit prime_power_split(std::uint64_t n, std::uint64_t p);

// (p, alpha) when n = p^alpha with alpha >= 1, nullopt otherwise.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace fibotomic

#endif
