#include "meltdown/log_engine.hpp"

#include <cmath>
#include <cstdlib>

#include "meltdown/error.hpp"

namespace meltdown {

namespace {

void require_same_base(double base, const RootLadder& ladder) {
  if (base != ladder.base()) {
    throw Error(Errc::bad_base, "logarithm base does not match the ladder base");
  }
}

// b^m without throwing; may return inf or 0.
double raw_power(double b, std::uint64_t m) {
  double result = 1.0;
  while (m != 0) {
    if (m & 1U) result *= b;
    m >>= 1U;
    if (m != 0) b *= b;
  }
  return result;
}

double scale_by_characteristic(double value, double base, std::int64_t characteristic) {
  const std::uint64_t magnitude = static_cast<std::uint64_t>(std::llabs(characteristic));
  const double power = raw_power(base, magnitude);
  if (std::isfinite(power) && power > 0.0) {
    return characteristic >= 0 ? value * power : value / power;
  }
  // base^|c| itself is out of range; step one factor at a time.
  for (std::uint64_t i = 0; i < magnitude; ++i) {
    value = characteristic >= 0 ? value * base : value / base;
  }
  return value;
}

}  // namespace

DyadicExtraction log_dyadic_detailed(double y, const RootLadder& ladder) {
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw Error(Errc::non_positive_input, "logarithm needs a positive finite argument");
  }
  const double base = ladder.base();
  double residual = y;
  std::int64_t characteristic = 0;
  if (residual >= base) {
    while (residual >= base) {
      residual /= base;
      if (++characteristic > kMaxCharacteristic) {
        throw Error(Errc::overflow, "characteristic exceeds 400");
      }
    }
  } else {
    while (residual < 1.0) {
      residual *= base;
      if (--characteristic < -kMaxCharacteristic) {
        throw Error(Errc::overflow, "characteristic below -400");
      }
    }
  }

  const int depth = ladder.depth();
  const auto rungs = ladder.rungs();
  std::int64_t bits = 0;
  for (int j = 1; j <= depth; ++j) {
    bits <<= 1;
    const double rung = rungs[static_cast<std::size_t>(j)];
    if (residual >= rung) {
      residual /= rung;
      bits |= 1;
    }
  }

  LogValue log;
  log.base = base;
  log.characteristic = characteristic;
  log.mantissa = DyadicExponent(bits, depth);
  log.error_bound = std::ldexp(1.0, -depth);
  return {log, residual};
}

LogValue log_dyadic(double y, const RootLadder& ladder) {
  return log_dyadic_detailed(y, ladder).log;
}

double antilog_dyadic(const LogValue& x, const RootLadder& ladder) {
  require_same_base(x.base, ladder);
  const int depth = ladder.depth();
  if (x.mantissa.level() > depth) {
    throw Error(Errc::depth_mismatch, "exponent is finer than the ladder depth");
  }
  if (std::llabs(x.characteristic) > kMaxCharacteristic) {
    throw Error(Errc::overflow, "characteristic exceeds 400");
  }
  const std::int64_t bits = x.mantissa.numerator_at(depth);
  if (bits < 0 || bits >= (std::int64_t{1} << depth)) {
    throw Error(Errc::out_of_range, "mantissa must lie in [0, 1)");
  }

  const auto rungs = ladder.rungs();
  double product = 1.0;
  for (int j = 1; j <= depth; ++j) {
    if ((bits >> (depth - j)) & 1) product *= rungs[static_cast<std::size_t>(j)];
  }
  const double result = scale_by_characteristic(product, ladder.base(), x.characteristic);
  if (!std::isfinite(result) || result <= 0.0) {
    throw Error(Errc::overflow, "antilog leaves the representable range");
  }
  return result;
}

double antilog_dyadic(double x, const RootLadder& ladder) {
  if (!std::isfinite(x) || std::fabs(x) > static_cast<double>(kMaxCharacteristic)) {
    throw Error(Errc::overflow, "antilog exponent must satisfy |x| <= 400");
  }
  const int depth = ladder.depth();
  const std::int64_t k = DyadicExponent::round_to_grid(x, depth).numerator_at(depth);
  const std::int64_t characteristic = k >> depth;  // floor
  const std::int64_t remainder = k - (characteristic << depth);

  LogValue log;
  log.base = ladder.base();
  log.characteristic = characteristic;
  log.mantissa = DyadicExponent(remainder, depth);
  log.error_bound = std::ldexp(1.0, -(depth + 1));
  return antilog_dyadic(log, ladder);
}

BoundedValue convert_base(const BoundedValue& x, double new_base, const RootLadder& ladder_q) {
  if (!(new_base > 1.0) || !std::isfinite(new_base)) {
    throw Error(Errc::bad_base, "target base must be a finite number above 1");
  }
  const LogValue log_p = log_dyadic(new_base, ladder_q);
  const double denom = log_p.value();
  const double value = x.value / denom;
  const double bound = (x.error_bound + std::fabs(x.value) * log_p.error_bound / denom) / denom;
  return {value, bound};
}

BoundedValue convert_base(const LogValue& x, double new_base, const RootLadder& ladder_q) {
  require_same_base(x.base, ladder_q);
  return convert_base(BoundedValue{x.value(), x.error_bound}, new_base, ladder_q);
}

std::pair<double, double> log_product_check(double y1, double y2, const RootLadder& ladder) {
  const double product = y1 * y2;
  if (y1 > 0.0 && y2 > 0.0 && !std::isfinite(product)) {
    throw Error(Errc::overflow, "product is not finite");
  }
  const double sum = log_dyadic(y1, ladder).value() + log_dyadic(y2, ladder).value();
  return {log_dyadic(product, ladder).value(), sum};
}

}  // namespace meltdown
