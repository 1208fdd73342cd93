#include "rational.hpp"

#include <cstdio>
#include <limits>

#include "error.hpp"

namespace slhash {

namespace {

unsigned __int128 gcd128(unsigned __int128 x, unsigned __int128 y) {
  while (y != 0) {
    const auto t = x % y;
    x = y;
    y = t;
  }
  return x;
}

}  // namespace

Rational::Rational(unsigned __int128 num, unsigned __int128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  const auto g = gcd128(num, den);
  num /= g;
  den /= g;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (num > kMax || den > kMax) {
    throw OverflowError("rational does not fit 64-bit numerator/denominator");
  }
  num_ = static_cast<std::uint64_t>(num);
  den_ = static_cast<std::uint64_t>(den);
}

std::string format_decimal(long double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", value);
  return buf;
}

}  // namespace slhash
