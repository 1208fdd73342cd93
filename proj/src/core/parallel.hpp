#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace slhash {

/// Resolves a user worker count; 0 means "one per hardware thread".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into at most `workers` contiguous chunks, evaluates
/// fn(begin, end) for each on its own thread and returns the partial results
/// in chunk order. Callers reduce the partials with an associative,
/// order-independent operation (integer addition), so the result does not
/// depend on the worker count.
template <class Partial, class Fn>
std::vector<Partial> map_chunks(std::uint64_t n, unsigned workers, Fn fn) {
  const std::uint64_t chunks =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_workers(workers), n));
  std::vector<Partial> partials(chunks);
  if (chunks == 1) {
    partials[0] = fn(std::uint64_t{0}, n);
    return partials;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = n * c / chunks;
      const std::uint64_t end = n * (c + 1) / chunks;
      threads.emplace_back([&, c, begin, end] {
        try {
          partials[c] = fn(begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return partials;
}

}  // namespace slhash
