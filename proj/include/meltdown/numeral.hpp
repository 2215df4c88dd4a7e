#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace meltdown {

inline constexpr int kMaxRadix = 36;

/// Positional numeral in an integer base, most significant digit first.
class RadixNumeral {
 public:
  /// Validates every digit and strips leading zeros.
  RadixNumeral(int base, std::vector<int> digits);

  /// Parses digits 0-9 then A-Z (case-insensitive).
  static RadixNumeral parse(std::string_view text, int base);

  int base() const noexcept { return base_; }
  const std::vector<int>& digits() const noexcept { return digits_; }

  /// Coefficient of base^power (power 0 is the units digit).
  int coefficient(std::size_t power) const noexcept;

  std::string to_string() const;

  friend bool operator==(const RadixNumeral&, const RadixNumeral&) = default;

 private:
  int base_;
  std::vector<int> digits_;
};

RadixNumeral to_radix(std::uint64_t m, int base);

std::uint64_t from_radix(const RadixNumeral& numeral);

/// First `count` digits of x in [0, 1), by repeated multiply-and-truncate.
std::vector<int> fractional_digits(double x, int base, int count);

char digit_char(int digit);

}  // namespace meltdown
