#pragma once

#include <cstdint>

namespace meltdown {

/// Exact rational k / 2^n. Stored in lowest terms: the numerator is odd
/// unless it is zero or the level is zero.
class DyadicExponent {
 public:
  static constexpr int kMaxLevel = 48;

  DyadicExponent() = default;
  DyadicExponent(std::int64_t numerator, int level);

  /// Nearest grid point k / 2^level, ties toward an even numerator.
  static DyadicExponent round_to_grid(double x, int level);

  std::int64_t numerator() const noexcept { return numerator_; }
  int level() const noexcept { return level_; }
  double value() const noexcept;

  /// Numerator re-expressed at a finer level (level >= this->level()).
  std::int64_t numerator_at(int level) const;

  friend bool operator==(const DyadicExponent&, const DyadicExponent&) = default;

 private:
  std::int64_t numerator_ = 0;
  int level_ = 0;
};

/// log_base(y) as characteristic + dyadic mantissa in [0, 1), with the
/// absolute error bound of the extraction.
struct LogValue {
  double base = 10.0;
  std::int64_t characteristic = 0;
  DyadicExponent mantissa;
  double error_bound = 0.0;

  double value() const noexcept {
    return static_cast<double>(characteristic) + mantissa.value();
  }
};

}  // namespace meltdown
