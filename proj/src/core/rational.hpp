#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace slhash {

/// Non-negative exact fraction with 64-bit numerator and denominator, always
/// stored in lowest terms. Probabilities stay exact until they are printed.
class Rational {
 public:
  Rational() = default;
  /// Throws DomainError for den = 0 and OverflowError if the reduced
  /// fraction does not fit 64 bits.
  Rational(unsigned __int128 num, unsigned __int128 den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  long double value() const noexcept {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  friend bool operator==(const Rational& x, const Rational& y) noexcept {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x,
                                          const Rational& y) noexcept {
    const auto lhs = static_cast<unsigned __int128>(x.num_) * y.den_;
    const auto rhs = static_cast<unsigned __int128>(y.num_) * x.den_;
    return lhs <=> rhs;
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Decimal rendering with 12 significant digits, the format every CSV uses.
std::string format_decimal(long double value);
inline std::string format_decimal(const Rational& r) {
  return format_decimal(r.value());
}

}  // namespace slhash
