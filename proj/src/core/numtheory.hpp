#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace eaqmds::nt {

bool is_prime(std::uint64_t n);

// Prime factors of n in increasing order, each listed once.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
};

// q = p^e with p prime and e >= 1, or nullopt.
std::optional<PrimePower> prime_power(std::uint64_t q);

// Saturates at UINT64_MAX instead of overflowing.
std::uint64_t ipow_sat(std::uint64_t base, std::uint64_t exp);
std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Smallest s >= 1 with base^s = 1 (mod mod); requires gcd(base, mod) = 1.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t mod);

// Canonical residue of v modulo m (m > 0).
constexpr std::uint64_t mod_floor(std::int64_t v, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = v % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

}  // namespace eaqmds::nt
