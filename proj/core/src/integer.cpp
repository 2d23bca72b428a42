#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ushape/errors.hpp"
#include "ushape/numeric.hpp"

namespace ushape {
namespace {

// Covers the cube root of every int64 magnitude.
constexpr std::uint32_t kPrimeTableLimit = (1u << 21) + 64;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kPrimeTableLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kPrimeTableLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kPrimeTableLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

std::uint64_t magnitude(std::int64_t m) {
  return m < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(m)
               : static_cast<std::uint64_t>(m);
}

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool is_square_u64(std::uint64_t v) {
  const std::uint64_t r = isqrt(v);
  return r * r == v;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_squarefree(std::int64_t m) {
  if (m == 0) {
    throw DomainError("is_squarefree is undefined for 0");
  }
  std::uint64_t rest = magnitude(m);
  for (const std::uint32_t p : small_primes()) {
    const std::uint64_t pp = p;
    if (pp * pp * pp > rest) break;
    if (rest % pp == 0) {
      rest /= pp;
      if (rest % pp == 0) return false;
    }
  }
  // rest now has at most two prime factors.
  return rest == 1 || !is_square_u64(rest);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  const auto v = static_cast<std::uint64_t>(n);
  for (const std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (v % p == 0) return v == p;
  }
  std::uint64_t d = v - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for every n < 3.3e24.
  for (const std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_perfect_square(std::int64_t m) { return m >= 0 && is_square_u64(static_cast<std::uint64_t>(m)); }

std::int64_t squarefree_part(std::int64_t m) {
  if (m == 0) {
    throw DomainError("squarefree_part is undefined for 0");
  }
  std::uint64_t rest = magnitude(m);
  std::uint64_t kernel = 1;
  for (const std::uint32_t p : small_primes()) {
    const std::uint64_t pp = p;
    if (pp * pp * pp > rest) break;
    int e = 0;
    while (rest % pp == 0) {
      rest /= pp;
      ++e;
    }
    if (e % 2 == 1) kernel *= pp;
  }
  if (rest != 1 && !is_square_u64(rest)) kernel *= rest;
  const auto signed_kernel = static_cast<std::int64_t>(kernel);
  return m < 0 ? -signed_kernel : signed_kernel;
}

std::int64_t quadratic_field_discriminant(std::int64_t m) {
  const std::int64_t s = squarefree_part(m);
  if (s == 1) {
    throw DomainError("Q(sqrt(" + std::to_string(m) + ")) is not a quadratic field");
  }
  const std::int64_t residue = ((s % 4) + 4) % 4;
  return residue == 1 ? s : 4 * s;
}

}  // namespace ushape
