#include "meltdown/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "meltdown/error.hpp"

namespace meltdown {

std::string format_sig(double value, int sig_digits) {
  if (sig_digits < 1 || sig_digits > 17) {
    throw Error(Errc::out_of_range, "significant digits must lie in [1, 17]");
  }
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  if (value == 0.0) return "0";

  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific,
                                 sig_digits - 1);
  const std::string sci(buf, res.ptr);

  // sci looks like "-d.ddde+XX"
  const auto e_pos = sci.find('e');
  const bool negative = sci.front() == '-';
  std::string digits;
  for (std::size_t i = negative ? 1 : 0; i < e_pos; ++i) {
    if (sci[i] != '.') digits.push_back(sci[i]);
  }
  const int exponent = std::atoi(sci.c_str() + e_pos + 1);
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out = negative ? "-" : "";
  if (exponent >= -4 && exponent < 15) {
    if (exponent >= 0) {
      const auto int_len = static_cast<std::size_t>(exponent) + 1;
      if (digits.size() <= int_len) {
        out += digits;
        out.append(int_len - digits.size(), '0');
      } else {
        out += digits.substr(0, int_len);
        out.push_back('.');
        out += digits.substr(int_len);
      }
    } else {
      out += "0.";
      out.append(static_cast<std::size_t>(-exponent - 1), '0');
      out += digits;
    }
    return out;
  }

  out.push_back(digits.front());
  if (digits.size() > 1) {
    out.push_back('.');
    out += digits.substr(1);
  }
  out.push_back('e');
  out.push_back(exponent < 0 ? '-' : '+');
  const std::string mag = std::to_string(std::abs(exponent));
  if (mag.size() < 2) out.push_back('0');
  out += mag;
  return out;
}

}  // namespace meltdown
