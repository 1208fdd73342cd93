#pragma once

#include <cstdint>

namespace slhash {

inline constexpr const char* kGeneratorName = "splitmix64";

inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Steele, Lea and Flood's SplitMix64.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    return mix64(state_ += 0x9e3779b97f4a7c15ULL);
  }

 private:
  std::uint64_t state_;
};

/// Independent generator for sample `index` of a run seeded with `seed`.
/// Depends only on (seed, index), so samples can be drawn in any order or
/// split across any number of workers.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64(mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL)));
}

/// Unbiased draw from [0, bound), bound >= 1 (Lemire's multiply-and-reject).
template <class Gen>
std::uint64_t uniform_below(Gen& gen, std::uint64_t bound) noexcept {
  using u128 = unsigned __int128;
  u128 product = static_cast<u128>(gen()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(gen()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace slhash
