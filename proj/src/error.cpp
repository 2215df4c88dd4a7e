#include "meltdown/error.hpp"

namespace meltdown {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::non_positive_input: return "NonPositiveInput";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::overflow: return "Overflow";
    case Errc::bad_base: return "BadBase";
    case Errc::depth_out_of_range: return "DepthOutOfRange";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::depth_mismatch: return "DepthMismatch";
    case Errc::bad_radix: return "BadRadix";
    case Errc::digit_out_of_range: return "DigitOutOfRange";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::level_out_of_range: return "LevelOutOfRange";
    case Errc::unknown_operation: return "UnknownOperation";
    case Errc::io_failure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace meltdown
