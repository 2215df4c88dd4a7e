#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace meltdown {

enum class Errc {
  non_positive_input,
  no_convergence,
  overflow,
  bad_base,
  depth_out_of_range,
  index_out_of_range,
  depth_mismatch,
  bad_radix,
  digit_out_of_range,
  out_of_range,
  level_out_of_range,
  unknown_operation,
  io_failure,
};

std::string_view to_string(Errc code) noexcept;

/// Domain error raised by every operation in the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace meltdown
