#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "field.hpp"

namespace slhash {

/// The ball set S, always a subset of [p] with at least one element.
class KeySet {
 public:
  /// [length] = {0, ..., length - 1}.
  struct Interval {
    u64 length = 0;
  };
  /// {(alpha*x + beta) mod p : x in [length]}, alpha != 0.
  struct AffineImage {
    u64 length = 0;
    u64 alpha = 1;
    u64 beta = 0;
  };
  /// Sorted, distinct elements.
  struct Explicit {
    std::vector<u64> elements;
  };

  static KeySet interval(u64 length);
  static KeySet affine(u64 length, u64 alpha, u64 beta);
  /// Sorts the elements; rejects duplicates and empty input with
  /// ValidationError.
  static KeySet explicit_elements(std::vector<u64> elements);

  u64 size() const noexcept;
  const std::variant<Interval, AffineImage, Explicit>& variant() const noexcept {
    return repr_;
  }

  /// Throws DomainError / ValidationError if the set is not a subset of [p].
  void validate(const Modulus& mod) const;

  /// The explicit element list; affine images in the order x = 0, 1, ...
  std::vector<u64> materialize(const Modulus& mod) const;

  /// Short human-readable form used in CSV metadata, e.g. "affine(32,77,5)".
  std::string describe() const;

 private:
  explicit KeySet(std::variant<Interval, AffineImage, Explicit> repr)
      : repr_(std::move(repr)) {}

  std::variant<Interval, AffineImage, Explicit> repr_;
};

/// Per-bin occupancy of one hash function on one key set.
struct LoadProfile {
  std::vector<u64> loads;
  u64 max_load = 0;
  HashParams params;
  Modulus mod;
};

LoadProfile load_profile(HashParams params, const Modulus& mod,
                         const KeySet& ks);
LoadProfile load_profile(HashParams params, const Modulus& mod,
                         std::span<const u64> keys);

/// Reusable bin counters for computing only the maximum load in a tight
/// loop. Not thread-safe; use one per worker.
class MaxLoadCounter {
 public:
  explicit MaxLoadCounter(const Modulus& mod)
      : mod_(mod), bins_(mod.m(), 0), touched_() {}

  u64 max_load(HashParams params, std::span<const u64> keys);

 private:
  Modulus mod_;
  std::vector<std::uint32_t> bins_;
  std::vector<u64> touched_;
};

/// The interval [floor(L/2), 2L] in which the max load of h_{a,0} must lie
/// when h_{a,b} has max load L.
struct BZeroBounds {
  u64 lower = 0;
  u64 upper = 0;

  bool contains(u64 v) const noexcept { return lower <= v && v <= upper; }
};

BZeroBounds max_load_b_zero_bounds(u64 max_load_ab) noexcept;
BZeroBounds max_load_b_zero_bounds(HashParams params, const Modulus& mod,
                                   const KeySet& ks);

}  // namespace slhash
