#pragma once

#include <optional>
#include <vector>

namespace meltdown {

inline constexpr double kDefaultRelTol = 1e-13;
inline constexpr int kDefaultMaxIterations = 64;

/// One Heron step: the current guess and the quotient input / guess.
struct HeronStep {
  double guess;
  double quotient;
};

/// Complete history of one square-root computation.
///
/// iterations[k] holds (x_k, y_k) with y_k = input / x_k. The next guess is
/// always the mean of the pair; the mean of the last pair is the result.
struct SqrtTrace {
  double input = 0.0;
  double initial_guess = 0.0;
  std::vector<HeronStep> iterations;
  double result = 0.0;
  bool converged = false;
  int steps_used = 0;
};

struct HeronOptions {
  double rel_tol = kDefaultRelTol;
  int max_iterations = kDefaultMaxIterations;
  std::optional<double> initial_guess;
};

/// b multiplied by itself m times (binary exponentiation). Throws
/// Errc::overflow when the result leaves the finite range.
double int_pow(double b, unsigned m);

/// Digit-count starting guess: 10^floor(d/2) for an input with d digits
/// before the radix point, mirrored for inputs below 1.
double initial_sqrt_guess(double x);

/// Square root by Heron iteration. Halts when consecutive guesses agree to
/// rel_tol, or when the iteration stagnates in floating point.
SqrtTrace heron_sqrt(double x, const HeronOptions& options = {});

/// Convenience wrapper returning only the root.
double heron_root(double x, double rel_tol = kDefaultRelTol);

}  // namespace meltdown
