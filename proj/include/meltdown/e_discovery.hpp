#pragma once

#include <vector>

#include "meltdown/root_ladder.hpp"

namespace meltdown {

/// Finite-difference slope of log_base at x with 1 + epsilon/x set to a
/// rung of the base-10 ladder, so the rise is exactly 2^-n.
struct SlopeEstimate {
  double base;
  double x;
  int ladder_level;
  double epsilon;
  double slope;
};

struct LimitTerm {
  int n;
  double t;
};

SlopeEstimate slope_log10(double x, int n, const RootLadder& ladder10);

/// t_n = 1 / (2^n (10^(1/2^n) - 1)) for n = 4..n_max; increases toward log10(e).
std::vector<LimitTerm> limit_sequence(int n_max, const RootLadder& ladder10);

/// The number whose base-10 logarithm is the measured slope t_n at x = 1.
double discover_e(int n, const RootLadder& ladder10);

/// Slope of log_p at x: slope_log10 divided by log10(p).
double slope_log_p(double p, double x, int n, const RootLadder& ladder10);

/// Trapezoid area under 1/t over [1, x].
double riemann_ln(double x, int steps);

}  // namespace meltdown
