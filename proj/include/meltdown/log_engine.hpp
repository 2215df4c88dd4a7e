#pragma once

#include <utility>

#include "meltdown/dyadic.hpp"
#include "meltdown/root_ladder.hpp"

namespace meltdown {

inline constexpr std::int64_t kMaxCharacteristic = 400;

/// A real with an absolute error bound.
struct BoundedValue {
  double value;
  double error_bound;
};

/// Logarithm plus the greedy loop's final residual (1 <= residual < last rung).
struct DyadicExtraction {
  LogValue log;
  double residual;
};

/// log_b(y) where b = ladder.base(): normalize y into [1, b) by repeated
/// multiplication or division by b, then strip rungs greedily.
LogValue log_dyadic(double y, const RootLadder& ladder);
DyadicExtraction log_dyadic_detailed(double y, const RootLadder& ladder);

/// b^x for a logarithm already on the ladder's grid.
double antilog_dyadic(const LogValue& x, const RootLadder& ladder);

/// b^x for a real exponent, rounded to the nearest grid point of the ladder.
double antilog_dyadic(double x, const RootLadder& ladder);

/// Re-expresses a base-q logarithm in base p: value / log_q(p).
BoundedValue convert_base(const LogValue& x, double new_base, const RootLadder& ladder_q);
BoundedValue convert_base(const BoundedValue& x, double new_base, const RootLadder& ladder_q);

/// (log(y1 * y2), log(y1) + log(y2)).
std::pair<double, double> log_product_check(double y1, double y2, const RootLadder& ladder);

}  // namespace meltdown
