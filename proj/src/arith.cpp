#include "meltdown/arith.hpp"

#include <cmath>
#include <string>

#include "meltdown/error.hpp"

namespace meltdown {

double int_pow(double b, unsigned m) {
  double result = 1.0;
  double square = b;
  while (m != 0) {
    if (m & 1U) result *= square;
    m >>= 1U;
    if (m != 0) square *= square;
  }
  if (!std::isfinite(result)) {
    throw Error(Errc::overflow, "int_pow result is not finite");
  }
  return result;
}

double initial_sqrt_guess(double x) {
  if (x >= 1.0) {
    // 10^(d-1) <= x < 10^d
    unsigned digits = 0;
    double power = 1.0;
    while (x >= power && std::isfinite(power)) {
      power *= 10.0;
      ++digits;
    }
    return int_pow(10.0, digits / 2);
  }
  unsigned shifts = 0;
  double scaled = x;
  while (scaled < 1.0) {
    scaled *= 10.0;
    ++shifts;
  }
  return 1.0 / int_pow(10.0, shifts / 2);
}

SqrtTrace heron_sqrt(double x, const HeronOptions& options) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(Errc::non_positive_input, "square root needs a positive finite input");
  }
  if (!(options.rel_tol > 0.0 && options.rel_tol < 1.0) || options.max_iterations < 1) {
    throw Error(Errc::out_of_range, "rel_tol must lie in (0, 1) and max_iterations >= 1");
  }
  const double guess = options.initial_guess.value_or(initial_sqrt_guess(x));
  if (!(guess > 0.0) || !std::isfinite(guess)) {
    throw Error(Errc::non_positive_input, "initial guess must be positive");
  }

  SqrtTrace trace;
  trace.input = x;
  trace.initial_guess = guess;
  trace.iterations.reserve(8);

  double current = guess;
  double previous = 0.0;
  for (int step = 1; step <= options.max_iterations; ++step) {
    const double quotient = x / current;
    trace.iterations.push_back({current, quotient});
    const double next = 0.5 * (current + quotient);
    const bool settled = next == current || next == previous ||
                         std::fabs(next - current) <= options.rel_tol * next;
    if (settled) {
      trace.result = next;
      trace.converged = true;
      trace.steps_used = step;
      return trace;
    }
    previous = current;
    current = next;
  }
  throw Error(Errc::no_convergence,
              "no convergence after " + std::to_string(options.max_iterations) + " steps");
}

double heron_root(double x, double rel_tol) {
  HeronOptions options;
  options.rel_tol = rel_tol;
  return heron_sqrt(x, options).result;
}

}  // namespace meltdown
