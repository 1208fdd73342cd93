#include "load_stats.hpp"

#include <algorithm>

#include "error.hpp"

namespace slhash {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

KeySet KeySet::interval(u64 length) {
  if (length == 0) throw ValidationError("key set must not be empty");
  return KeySet(Interval{length});
}

KeySet KeySet::affine(u64 length, u64 alpha, u64 beta) {
  if (length == 0) throw ValidationError("key set must not be empty");
  if (alpha == 0) throw DomainError("affine key set requires alpha != 0");
  return KeySet(AffineImage{length, alpha, beta});
}

KeySet KeySet::explicit_elements(std::vector<u64> elements) {
  if (elements.empty()) throw ValidationError("key set must not be empty");
  std::sort(elements.begin(), elements.end());
  const auto dup = std::adjacent_find(elements.begin(), elements.end());
  if (dup != elements.end()) {
    throw ValidationError("duplicate key " + std::to_string(*dup) +
                          " in explicit key set");
  }
  return KeySet(Explicit{std::move(elements)});
}

u64 KeySet::size() const noexcept {
  return std::visit(
      Overloaded{[](const Interval& s) { return s.length; },
                 [](const AffineImage& s) { return s.length; },
                 [](const Explicit& s) { return u64{s.elements.size()}; }},
      repr_);
}

void KeySet::validate(const Modulus& mod) const {
  const u64 p = mod.p();
  std::visit(
      Overloaded{
          [&](const Interval& s) {
            if (s.length > p) {
              throw DomainError("interval length " + std::to_string(s.length) +
                                " exceeds p = " + std::to_string(p));
            }
          },
          [&](const AffineImage& s) {
            if (s.length > p) {
              throw DomainError("affine base length " +
                                std::to_string(s.length) + " exceeds p = " +
                                std::to_string(p));
            }
            if (s.alpha >= p || s.beta >= p) {
              throw DomainError("affine transform (alpha, beta) outside [p]");
            }
          },
          [&](const Explicit& s) {
            if (s.elements.back() >= p) {
              throw DomainError("key " + std::to_string(s.elements.back()) +
                                " outside [p]");
            }
          }},
      repr_);
}

std::vector<u64> KeySet::materialize(const Modulus& mod) const {
  validate(mod);
  return std::visit(
      Overloaded{[](const Interval& s) {
                   std::vector<u64> out(s.length);
                   for (u64 x = 0; x < s.length; ++x) out[x] = x;
                   return out;
                 },
                 [&](const AffineImage& s) {
                   std::vector<u64> out(s.length);
                   const HashParams t{s.alpha, s.beta};
                   for (u64 x = 0; x < s.length; ++x) {
                     out[x] = eval_full(t, mod, x);
                   }
                   return out;
                 },
                 [](const Explicit& s) { return s.elements; }},
      repr_);
}

std::string KeySet::describe() const {
  return std::visit(
      Overloaded{[](const Interval& s) {
                   return "interval(" + std::to_string(s.length) + ")";
                 },
                 [](const AffineImage& s) {
                   return "affine(" + std::to_string(s.length) + "," +
                          std::to_string(s.alpha) + "," +
                          std::to_string(s.beta) + ")";
                 },
                 [](const Explicit& s) {
                   return "explicit(n=" + std::to_string(s.elements.size()) +
                          ")";
                 }},
      repr_);
}

LoadProfile load_profile(HashParams params, const Modulus& mod,
                         std::span<const u64> keys) {
  check_params(params, mod);
  LoadProfile out{std::vector<u64>(mod.m(), 0), 0, params, mod};
  for (u64 x : keys) {
    if (x >= mod.p()) {
      throw DomainError("key " + std::to_string(x) + " outside [p]");
    }
    const u64 v = ++out.loads[eval_binned(params, mod, x)];
    out.max_load = std::max(out.max_load, v);
  }
  return out;
}

LoadProfile load_profile(HashParams params, const Modulus& mod,
                         const KeySet& ks) {
  const auto keys = ks.materialize(mod);
  return load_profile(params, mod, keys);
}

u64 MaxLoadCounter::max_load(HashParams params, std::span<const u64> keys) {
  std::uint32_t best = 0;
  touched_.clear();
  for (u64 x : keys) {
    const u64 bin = eval_binned(params, mod_, x);
    const std::uint32_t v = ++bins_[bin];
    if (v == 1) touched_.push_back(bin);
    best = std::max(best, v);
  }
  for (u64 bin : touched_) bins_[bin] = 0;
  return best;
}

BZeroBounds max_load_b_zero_bounds(u64 max_load_ab) noexcept {
  return BZeroBounds{max_load_ab / 2, 2 * max_load_ab};
}

BZeroBounds max_load_b_zero_bounds(HashParams params, const Modulus& mod,
                                   const KeySet& ks) {
  return max_load_b_zero_bounds(load_profile(params, mod, ks).max_load);
}

}  // namespace slhash
