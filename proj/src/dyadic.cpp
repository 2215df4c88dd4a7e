#include "meltdown/dyadic.hpp"

#include <cmath>
#include <string>

#include "meltdown/error.hpp"

namespace meltdown {

namespace {

void check_level(int level) {
  if (level < 0 || level > DyadicExponent::kMaxLevel) {
    throw Error(Errc::level_out_of_range, "dyadic level " + std::to_string(level));
  }
}

}  // namespace

DyadicExponent::DyadicExponent(std::int64_t numerator, int level)
    : numerator_(numerator), level_(level) {
  check_level(level);
  while (level_ > 0 && numerator_ % 2 == 0) {
    numerator_ /= 2;
    --level_;
  }
}

DyadicExponent DyadicExponent::round_to_grid(double x, int level) {
  check_level(level);
  const double scaled = std::ldexp(x, level);
  if (!std::isfinite(scaled) || std::fabs(scaled) > 9.0e18) {
    throw Error(Errc::overflow, "exponent too large for the dyadic grid");
  }
  // Default rounding mode is to-nearest, ties-to-even.
  return DyadicExponent(static_cast<std::int64_t>(std::nearbyint(scaled)), level);
}

double DyadicExponent::value() const noexcept {
  return std::ldexp(static_cast<double>(numerator_), -level_);
}

std::int64_t DyadicExponent::numerator_at(int level) const {
  check_level(level);
  if (level < level_) {
    throw Error(Errc::depth_mismatch, "cannot express level " + std::to_string(level_) +
                                          " exponent at coarser level " + std::to_string(level));
  }
  return numerator_ * (std::int64_t{1} << (level - level_));
}

}  // namespace meltdown
