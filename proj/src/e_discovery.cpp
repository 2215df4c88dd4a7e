#include "meltdown/e_discovery.hpp"

#include <cmath>
#include <string>

#include "meltdown/error.hpp"
#include "meltdown/log_engine.hpp"

namespace meltdown {

namespace {

void require_base10(const RootLadder& ladder) {
  if (ladder.base() != 10.0) {
    throw Error(Errc::bad_base, "slope measurements need the base-10 ladder");
  }
}

void require_level(int n, int lowest, const RootLadder& ladder) {
  if (n < lowest || n > ladder.depth()) {
    throw Error(Errc::level_out_of_range, "level " + std::to_string(n) + " outside [" +
                                              std::to_string(lowest) + ", " +
                                              std::to_string(ladder.depth()) + "]");
  }
}

}  // namespace

SlopeEstimate slope_log10(double x, int n, const RootLadder& ladder10) {
  require_base10(ladder10);
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(Errc::non_positive_input, "slope position must be positive");
  }
  require_level(n, 4, ladder10);
  // 1 + epsilon/x = 10^(1/2^n), so log10(1 + epsilon/x) = 2^-n exactly.
  const double epsilon = x * ladder10.excess(n);
  return {10.0, x, n, epsilon, std::ldexp(1.0, -n) / epsilon};
}

std::vector<LimitTerm> limit_sequence(int n_max, const RootLadder& ladder10) {
  require_base10(ladder10);
  require_level(n_max, 4, ladder10);
  std::vector<LimitTerm> terms;
  terms.reserve(static_cast<std::size_t>(n_max - 3));
  for (int n = 4; n <= n_max; ++n) {
    terms.push_back({n, 1.0 / std::ldexp(ladder10.excess(n), n)});
  }
  return terms;
}

double discover_e(int n, const RootLadder& ladder10) {
  require_base10(ladder10);
  require_level(n, 10, ladder10);
  return antilog_dyadic(slope_log10(1.0, n, ladder10).slope, ladder10);
}

double slope_log_p(double p, double x, int n, const RootLadder& ladder10) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(Errc::bad_base, "base must be a finite number above 1");
  }
  return slope_log10(x, n, ladder10).slope / log_dyadic(p, ladder10).value();
}

double riemann_ln(double x, int steps) {
  if (!(x >= 1.0) || !std::isfinite(x)) {
    throw Error(Errc::out_of_range, "area is measured from 1 to x >= 1");
  }
  if (steps < 16) {
    throw Error(Errc::out_of_range, "at least 16 trapezoid steps are required");
  }
  const double width = (x - 1.0) / steps;
  double interior = 0.0;
  for (int i = 1; i < steps; ++i) {
    interior += 1.0 / (1.0 + i * width);
  }
  return width * (0.5 * (1.0 + 1.0 / x) + interior);
}

}  // namespace meltdown
