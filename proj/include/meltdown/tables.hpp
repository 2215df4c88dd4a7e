#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meltdown/dyadic.hpp"
#include "meltdown/root_ladder.hpp"

namespace meltdown {

inline constexpr int kMaxTableLevel = 16;

struct TableEntry {
  DyadicExponent mantissa;
  double value;
};

/// base^(k/2^n) for k = 0..2^n-1, each a product of ladder rungs.
struct LogTable {
  double base = 10.0;
  int level = 0;
  std::vector<TableEntry> entries;
  int built_from = 0;
};

struct AntilogLookup {
  double value;
  /// Half the grid spacing, in log units.
  double grid_error;
};

struct MultiplicationDetail {
  double x1;
  double x2;
  double sum;
  std::int64_t characteristic;
  double mantissa;
  double table_value;
  double grid_error;
  /// Bound on |estimate / exact - 1|.
  double relative_error_bound;
};

struct MultiplicationResult {
  double estimate;
  MultiplicationDetail detail;
};

LogTable build_table(const RootLadder& ladder, int level);

AntilogLookup lookup_antilog(const LogTable& table, double mantissa);

MultiplicationResult multiply_via_logs(double y1, double y2, const LogTable& table,
                                       const RootLadder& ladder);

/// Exact decimal expansion of k / 2^n, e.g. 3/8 -> "0.375".
std::string exact_decimal(const DyadicExponent& d);

/// `mantissa_exponent,value` rows, value at 12 significant digits.
std::string table_to_csv(const LogTable& table);
std::string table_to_json(const LogTable& table);

}  // namespace meltdown
