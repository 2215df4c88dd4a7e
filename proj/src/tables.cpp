#include "meltdown/tables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "meltdown/error.hpp"
#include "meltdown/format.hpp"
#include "meltdown/log_engine.hpp"

namespace meltdown {

LogTable build_table(const RootLadder& ladder, int level) {
  const int cap = std::min(kMaxTableLevel, ladder.depth());
  if (level < 0 || level > cap) {
    throw Error(Errc::level_out_of_range,
                "table level " + std::to_string(level) + " outside [0, " + std::to_string(cap) + "]");
  }
  LogTable table;
  table.base = ladder.base();
  table.level = level;
  table.built_from = ladder.depth();

  const auto rungs = ladder.rungs();
  const std::int64_t size = std::int64_t{1} << level;
  table.entries.reserve(static_cast<std::size_t>(size));
  for (std::int64_t k = 0; k < size; ++k) {
    // bit j (from the top) of k selects base^(1/2^j)
    double value = 1.0;
    for (int j = 1; j <= level; ++j) {
      if ((k >> (level - j)) & 1) value *= rungs[static_cast<std::size_t>(j)];
    }
    table.entries.push_back({DyadicExponent(k, level), value});
  }
  return table;
}

AntilogLookup lookup_antilog(const LogTable& table, double mantissa) {
  if (!(mantissa >= 0.0 && mantissa < 1.0)) {
    throw Error(Errc::out_of_range, "table lookups take a mantissa in [0, 1)");
  }
  const double grid_error = std::ldexp(1.0, -(table.level + 1));
  const auto k = static_cast<std::int64_t>(std::nearbyint(std::ldexp(mantissa, table.level)));
  if (k >= static_cast<std::int64_t>(table.entries.size())) {
    return {table.base, grid_error};
  }
  return {table.entries[static_cast<std::size_t>(k)].value, grid_error};
}

MultiplicationResult multiply_via_logs(double y1, double y2, const LogTable& table,
                                       const RootLadder& ladder) {
  if (table.base != ladder.base()) {
    throw Error(Errc::bad_base, "table and ladder bases differ");
  }
  const LogValue log1 = log_dyadic(y1, ladder);
  const LogValue log2 = log_dyadic(y2, ladder);
  if (!std::isfinite(y1 * y2)) {
    throw Error(Errc::overflow, "product is not finite");
  }

  MultiplicationDetail detail{};
  detail.x1 = log1.value();
  detail.x2 = log2.value();
  detail.sum = detail.x1 + detail.x2;
  const double floor_sum = std::floor(detail.sum);
  detail.characteristic = static_cast<std::int64_t>(floor_sum);
  detail.mantissa = detail.sum - floor_sum;

  const AntilogLookup hit = lookup_antilog(table, detail.mantissa);
  detail.table_value = hit.value;
  detail.grid_error = hit.grid_error;

  LogValue scale;
  scale.base = ladder.base();
  scale.characteristic = detail.characteristic;
  const double estimate = hit.value * antilog_dyadic(scale, ladder);

  const double log_error = log1.error_bound + log2.error_bound + hit.grid_error;
  detail.relative_error_bound = antilog_dyadic(log_error, ladder) - 1.0;
  return {estimate, detail};
}

std::string exact_decimal(const DyadicExponent& d) {
  const std::int64_t k = d.numerator();
  const int level = d.level();
  const std::uint64_t magnitude = static_cast<std::uint64_t>(k < 0 ? -k : k);
  const std::uint64_t mask = (std::uint64_t{1} << level) - 1;

  std::string out = k < 0 ? "-" : "";
  out += std::to_string(magnitude >> level);
  std::uint64_t rest = magnitude & mask;
  if (rest != 0) {
    out.push_back('.');
    // every k / 2^n terminates within n decimal places
    while (rest != 0) {
      rest *= 10;
      out.push_back(static_cast<char>('0' + (rest >> level)));
      rest &= mask;
    }
  }
  return out;
}

std::string table_to_csv(const LogTable& table) {
  std::string out = "mantissa_exponent,value\n";
  for (const TableEntry& e : table.entries) {
    out += exact_decimal(e.mantissa);
    out.push_back(',');
    out += format_sig(e.value, 12);
    out.push_back('\n');
  }
  return out;
}

std::string table_to_json(const LogTable& table) {
  nlohmann::ordered_json j;
  j["base"] = table.base;
  j["level"] = table.level;
  j["built_from"] = table.built_from;
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const TableEntry& e : table.entries) {
    entries.push_back({{"mantissa_exponent", exact_decimal(e.mantissa)},
                       {"numerator", e.mantissa.numerator()},
                       {"level", e.mantissa.level()},
                       {"value", e.value}});
  }
  return j.dump(2) + "\n";
}

}  // namespace meltdown
