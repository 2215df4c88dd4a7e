#include "meltdown/numeral.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "meltdown/error.hpp"

namespace meltdown {

namespace {

void check_radix(int base) {
  if (base < 2 || base > kMaxRadix) {
    throw Error(Errc::bad_radix, "radix " + std::to_string(base) + " outside [2, 36]");
  }
}

int char_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

char digit_char(int digit) {
  if (digit < 0 || digit >= kMaxRadix) {
    throw Error(Errc::digit_out_of_range, "digit " + std::to_string(digit));
  }
  return digit < 10 ? static_cast<char>('0' + digit) : static_cast<char>('A' + digit - 10);
}

RadixNumeral::RadixNumeral(int base, std::vector<int> digits)
    : base_(base), digits_(std::move(digits)) {
  check_radix(base);
  for (int d : digits_) {
    if (d < 0 || d >= base) {
      throw Error(Errc::digit_out_of_range,
                  "digit " + std::to_string(d) + " not valid in base " + std::to_string(base));
    }
  }
  const auto first = std::find_if(digits_.begin(), digits_.end(), [](int d) { return d != 0; });
  digits_.erase(digits_.begin(), first);
  if (digits_.empty()) digits_.push_back(0);
}

RadixNumeral RadixNumeral::parse(std::string_view text, int base) {
  check_radix(base);
  if (text.empty()) throw Error(Errc::digit_out_of_range, "empty numeral");
  std::vector<int> digits;
  digits.reserve(text.size());
  for (char c : text) {
    const int d = char_digit(c);
    if (d < 0 || d >= base) {
      throw Error(Errc::digit_out_of_range,
                  std::string("character '") + c + "' not valid in base " + std::to_string(base));
    }
    digits.push_back(d);
  }
  return RadixNumeral(base, std::move(digits));
}

int RadixNumeral::coefficient(std::size_t power) const noexcept {
  if (power >= digits_.size()) return 0;
  return digits_[digits_.size() - 1 - power];
}

std::string RadixNumeral::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (int d : digits_) out.push_back(digit_char(d));
  return out;
}

RadixNumeral to_radix(std::uint64_t m, int base) {
  check_radix(base);
  std::vector<int> digits;
  const auto radix = static_cast<std::uint64_t>(base);
  do {
    digits.push_back(static_cast<int>(m % radix));
    m /= radix;
  } while (m != 0);
  std::reverse(digits.begin(), digits.end());
  return RadixNumeral(base, std::move(digits));
}

std::uint64_t from_radix(const RadixNumeral& numeral) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const auto radix = static_cast<std::uint64_t>(numeral.base());
  std::uint64_t value = 0;
  for (int d : numeral.digits()) {
    const auto digit = static_cast<std::uint64_t>(d);
    if (value > (kMax - digit) / radix) {
      throw Error(Errc::overflow, "numeral exceeds 64 bits");
    }
    value = value * radix + digit;
  }
  return value;
}

std::vector<int> fractional_digits(double x, int base, int count) {
  check_radix(base);
  if (!(x >= 0.0 && x < 1.0)) {
    throw Error(Errc::out_of_range, "fraction must lie in [0, 1)");
  }
  if (count < 1 || count > 32) {
    throw Error(Errc::out_of_range, "digit count must lie in [1, 32]");
  }
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    x *= base;
    auto d = static_cast<int>(x);  // truncation
    if (d >= base) d = base - 1;
    digits.push_back(d);
    x -= d;
  }
  return digits;
}

}  // namespace meltdown
