#pragma once

#include <string>

namespace meltdown {

/// Decimal rendering at `sig_digits` significant digits, round-half-even,
/// trailing zeros dropped. Plain notation for magnitudes in [1e-4, 1e15),
/// exponent notation otherwise. Locale independent.
std::string format_sig(double value, int sig_digits);

}  // namespace meltdown
