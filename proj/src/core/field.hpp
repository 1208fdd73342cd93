#pragma once

// Arithmetic over Z_p and the simple linear hash family
//   h'_{a,b}(x) = (a*x + b) mod p,   h_{a,b}(x) = h'_{a,b}(x) mod m.

#include <cstdint>

namespace slhash {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// A prime field modulus p together with the number of bins m (1 <= m <= p).
class Modulus {
 public:
  /// Throws DomainError unless p is prime and 1 <= m <= p.
  Modulus(u64 p, u64 m);

  u64 p() const noexcept { return p_; }
  u64 m() const noexcept { return m_; }

  bool operator==(const Modulus&) const = default;

 private:
  u64 p_;
  u64 m_;
};

/// One member of the family, identified by (a, b) in [p]^2. a = 0 is legal
/// and denotes the constant function x -> b.
struct HashParams {
  u64 a = 0;
  u64 b = 0;

  bool operator==(const HashParams&) const = default;
};

/// floor((a*x + b) / p): the number of wrap-arounds of the pre-modular value.
/// Always within [0, x].
struct LeapCount {
  u64 value = 0;

  bool operator==(const LeapCount&) const = default;
};

/// Deterministic for the whole 64-bit range.
bool is_prime(u64 n) noexcept;

/// Smallest prime >= n. Throws DomainError for n < 2 and OverflowError when
/// no such prime fits in 64 bits.
u64 next_prime_at_least(u64 n);

inline u64 mul_mod(u64 x, u64 y, u64 p) noexcept {
  return static_cast<u64>(static_cast<u128>(x) * y % p);
}

u64 pow_mod(u64 base, u64 exp, u64 p) noexcept;

/// y with x*y = 1 (mod p). Throws DomainError for x = 0 (mod p) or p < 2.
u64 mod_inverse(u64 x, u64 p);

/// (a*x + b) mod p. Requires a, b, x < p.
inline u64 eval_full(HashParams params, const Modulus& mod, u64 x) noexcept {
  const u64 p = mod.p();
  if (p <= (u64{1} << 32)) {
    // a*x + b <= (2^32 - 1)^2 + 2^32 - 1 < 2^64.
    return (params.a * x + params.b) % p;
  }
  return static_cast<u64>(
      (static_cast<u128>(params.a) * x + params.b) % p);
}

inline u64 eval_binned(HashParams params, const Modulus& mod, u64 x) noexcept {
  return eval_full(params, mod, x) % mod.m();
}

inline LeapCount leaps(HashParams params, const Modulus& mod, u64 x) noexcept {
  return LeapCount{static_cast<u64>(
      (static_cast<u128>(params.a) * x + params.b) / mod.p())};
}

/// Throws DomainError unless both coordinates are in [p].
void check_params(HashParams params, const Modulus& mod);

}  // namespace slhash
