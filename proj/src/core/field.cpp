#include "field.hpp"

#include <array>
#include <limits>
#include <string>

#include "error.hpp"

namespace slhash {

Modulus::Modulus(u64 p, u64 m) : p_(p), m_(m) {
  if (!is_prime(p)) {
    throw DomainError("modulus p = " + std::to_string(p) + " is not prime");
  }
  if (m < 1 || m > p) {
    throw DomainError("bin count m = " + std::to_string(m) +
                      " must satisfy 1 <= m <= p = " + std::to_string(p));
  }
}

u64 pow_mod(u64 base, u64 exp, u64 p) noexcept {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

namespace {

// Strong probable-prime test to base `witness` for odd n > 2.
bool is_sprp(u64 n, u64 witness) noexcept {
  witness %= n;
  if (witness == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(witness, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kSmall = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall) {
    if (n % q == 0) return n == q;
  }
  // The first twelve primes are a complete witness set below 3.1e23.
  for (u64 w : kSmall) {
    if (!is_sprp(n, w)) return false;
  }
  return true;
}

u64 next_prime_at_least(u64 n) {
  if (n < 2) throw DomainError("next_prime_at_least requires n >= 2");
  for (u64 c = n;; ++c) {
    if (is_prime(c)) return c;
    if (c == std::numeric_limits<u64>::max()) {
      throw OverflowError("no prime >= " + std::to_string(n) +
                          " fits in 64 bits");
    }
  }
}

u64 mod_inverse(u64 x, u64 p) {
  if (p < 2) throw DomainError("mod_inverse requires p >= 2");
  x %= p;
  if (x == 0) throw DomainError("0 has no inverse modulo " + std::to_string(p));
  // Extended Euclid on signed 128-bit to stay exact for all 64-bit p.
  __int128 r0 = p, r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) {
    throw DomainError(std::to_string(x) + " is not invertible modulo " +
                      std::to_string(p));
  }
  if (t0 < 0) t0 += p;
  return static_cast<u64>(t0);
}

void check_params(HashParams params, const Modulus& mod) {
  if (params.a >= mod.p() || params.b >= mod.p()) {
    throw DomainError("hash parameters (a, b) = (" + std::to_string(params.a) +
                      ", " + std::to_string(params.b) + ") outside [p]^2");
  }
}

}  // namespace slhash
