#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "meltdown.hpp"

namespace meltdown::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { plain, json, csv };

struct OutputSpec {
  Format format = Format::plain;
  int sig_digits = 10;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int depth_from_env() {
  const char* raw = std::getenv("MELTDOWN_LOG_DEPTH");
  if (raw == nullptr || *raw == '\0') return kDefaultLadderDepth;
  const std::string text(raw);
  int depth = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), depth);
  if (ec != std::errc{} || ptr != text.data() + text.size() || depth < 0 ||
      depth > kMaxLadderDepth) {
    throw UsageError("MELTDOWN_LOG_DEPTH must be an integer in [0, 48]");
  }
  return depth;
}

using Field = std::variant<double, std::int64_t, std::string, bool>;
using Record = std::vector<std::pair<std::string, Field>>;

// Renders values at the requested precision; JSON numbers carry the rounded value.
class Printer {
 public:
  Printer(std::ostream& out, OutputSpec spec) : out_(out), spec_(spec) {}

  Format format() const { return spec_.format; }

  std::string text(double v) const { return format_sig(v, spec_.sig_digits); }

  std::string text(const Field& f) const {
    return std::visit(
        [this](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            return text(v);
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            return std::to_string(v);
          } else if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
          } else {
            return v;
          }
        },
        f);
  }

  Json json(const Field& f) const {
    return std::visit(
        [this](const auto& v) -> Json {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            const std::string s = text(v);
            double rounded = 0.0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), rounded);
            if (res.ec != std::errc{}) return Json(s);
            return Json(rounded);
          } else {
            return Json(v);
          }
        },
        f);
  }

  Json json(const Record& r) const {
    Json j = Json::object();
    for (const auto& [key, value] : r) j[key] = json(value);
    return j;
  }

  void line(const std::string& s) { out_ << s << '\n'; }

  /// Single-value result: the bare value in plain mode.
  void scalar(const std::string& key, const Field& value, const Record& extra = {}) {
    Record r{{key, value}};
    r.insert(r.end(), extra.begin(), extra.end());
    switch (spec_.format) {
      case Format::plain: line(text(value)); break;
      case Format::json: line(json(r).dump()); break;
      case Format::csv: csv(r); break;
    }
  }

  /// Key/value block.
  void record(const Record& r) {
    switch (spec_.format) {
      case Format::plain:
        for (const auto& [key, value] : r) line(key + "\t" + text(value));
        break;
      case Format::json: line(json(r).dump()); break;
      case Format::csv: csv(r); break;
    }
  }

  /// Rows with a header. `summary` is merged into the JSON object only.
  void rows(const std::vector<std::string>& header, const std::vector<Record>& data,
            const std::string& rows_key = "rows", const Record& summary = {}) {
    if (spec_.format == Format::json) {
      Json j = json(summary);
      Json arr = Json::array();
      for (const Record& r : data) arr.push_back(json(r));
      j[rows_key] = std::move(arr);
      line(j.dump());
      return;
    }
    const char sep = spec_.format == Format::csv ? ',' : '\t';
    line(join(header, sep));
    for (const Record& r : data) {
      std::vector<std::string> cells;
      for (const auto& [key, value] : r) cells.push_back(text(value));
      line(join(cells, sep));
    }
    if (spec_.format == Format::plain) {
      for (const auto& [key, value] : summary) line(key + "\t" + text(value));
    }
  }

 private:
  static std::string join(const std::vector<std::string>& cells, char sep) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out.push_back(sep);
      out += cells[i];
    }
    return out;
  }

  void csv(const Record& r) {
    std::vector<std::string> keys;
    std::vector<std::string> values;
    for (const auto& [key, value] : r) {
      keys.push_back(key);
      values.push_back(text(value));
    }
    line(join(keys, ','));
    line(join(values, ','));
  }

  std::ostream& out_;
  OutputSpec spec_;
};

std::string digits_to_string(const std::vector<int>& digits) {
  std::string s;
  for (int d : digits) s.push_back(digit_char(d));
  return s;
}

Record log_record(const LogValue& log) {
  return {{"value", log.value()},
          {"characteristic", log.characteristic},
          {"mantissa", exact_decimal(log.mantissa)},
          {"mantissa_numerator", log.mantissa.numerator()},
          {"mantissa_level", static_cast<std::int64_t>(log.mantissa.level())},
          {"error_bound", log.error_bound}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithms rebuilt from +, -, *, / and Heron square roots", "meltdown"};
  app.require_subcommand(1);
  app.fallthrough();

  OutputSpec spec;
  std::optional<int> depth_flag;
  const std::map<std::string, Format> formats{
      {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", spec.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--digits", spec.sig_digits, "Significant digits (1-15)")
      ->check(CLI::Range(1, 15));
  app.add_option("--depth", depth_flag, "Root ladder depth (default $MELTDOWN_LOG_DEPTH or 40)")
      ->check(CLI::Range(0, kMaxLadderDepth));

  // sqrt
  double sqrt_x = 0.0;
  std::optional<double> sqrt_guess;
  double sqrt_tol = kDefaultRelTol;
  int sqrt_max_iter = kDefaultMaxIterations;
  bool sqrt_trace = false;
  auto* sqrt_cmd = app.add_subcommand("sqrt", "Square root by Heron iteration");
  sqrt_cmd->add_option("x", sqrt_x)->required();
  sqrt_cmd->add_option("--guess", sqrt_guess, "Initial guess");
  sqrt_cmd->add_option("--tol", sqrt_tol, "Relative tolerance");
  sqrt_cmd->add_option("--max-iter", sqrt_max_iter, "Iteration cap");
  sqrt_cmd->add_flag("--trace", sqrt_trace, "Print every iterate");

  // pow
  double pow_b = 0.0;
  unsigned pow_m = 0;
  auto* pow_cmd = app.add_subcommand("pow", "Integer power by repeated multiplication");
  pow_cmd->add_option("b", pow_b)->required();
  pow_cmd->add_option("m", pow_m)->required();

  // ladder
  double ladder_base = 10.0;
  std::optional<int> ladder_rung;
  auto* ladder_cmd = app.add_subcommand("ladder", "Repeated square roots of a base");
  ladder_cmd->add_option("--base", ladder_base);
  ladder_cmd->add_option("--rung", ladder_rung, "Single rung j");

  // log
  double log_y = 0.0;
  double log_base = 10.0;
  auto* log_cmd = app.add_subcommand("log", "Logarithm by dyadic extraction");
  log_cmd->add_option("y", log_y)->required();
  log_cmd->add_option("--base", log_base);

  // antilog
  double antilog_x = 0.0;
  double antilog_base = 10.0;
  auto* antilog_cmd = app.add_subcommand("antilog", "base^x from ladder rungs");
  antilog_cmd->add_option("x", antilog_x)->required();
  antilog_cmd->add_option("--base", antilog_base);

  // convert-base
  double convert_y = 0.0;
  double convert_from = 10.0;
  double convert_to = 0.0;
  auto* convert_cmd =
      app.add_subcommand("convert-base", "log_to(y) computed from a base-`from` logarithm");
  convert_cmd->add_option("y", convert_y)->required();
  convert_cmd->add_option("--from", convert_from);
  convert_cmd->add_option("--to", convert_to)->required();

  // verify
  double verify_y1 = 0.0;
  double verify_y2 = 0.0;
  double verify_base = 10.0;
  auto* verify_cmd = app.add_subcommand("verify", "Product rule: log(y1*y2) vs log y1 + log y2");
  verify_cmd->add_option("y1", verify_y1)->required();
  verify_cmd->add_option("y2", verify_y2)->required();
  verify_cmd->add_option("--base", verify_base);

  // radix
  auto* radix_cmd = app.add_subcommand("radix", "Positional numerals in base 2-36");
  radix_cmd->require_subcommand(1);
  std::uint64_t radix_m = 0;
  int radix_base = 10;
  auto* radix_to = radix_cmd->add_subcommand("to", "Integer to numeral");
  radix_to->add_option("m", radix_m)->required();
  radix_to->add_option("--base", radix_base)->required();
  std::string radix_digits;
  auto* radix_from = radix_cmd->add_subcommand("from", "Numeral to integer");
  radix_from->add_option("digits", radix_digits)->required();
  radix_from->add_option("--base", radix_base)->required();
  double radix_x = 0.0;
  int radix_count = 10;
  auto* radix_frac = radix_cmd->add_subcommand("frac", "Fraction digits of x in [0, 1)");
  radix_frac->add_option("x", radix_x)->required();
  radix_frac->add_option("--base", radix_base)->required();
  radix_frac->add_option("--count", radix_count);

  // table
  double table_base = 10.0;
  int table_level = 3;
  std::optional<double> table_lookup;
  bool table_gnuplot = false;
  auto* table_cmd = app.add_subcommand("table", "Log table at dyadic spacing");
  table_cmd->add_option("--base", table_base);
  table_cmd->add_option("--level", table_level);
  table_cmd->add_option("--lookup", table_lookup, "Antilog of a mantissa in [0, 1)");
  table_cmd->add_flag("--gnuplot-data", table_gnuplot, "Whitespace-separated y log(y) pairs");

  // mul
  double mul_y1 = 0.0;
  double mul_y2 = 0.0;
  bool mul_via_table = false;
  int mul_level = 13;
  auto* mul_cmd = app.add_subcommand("mul", "Multiply by adding logarithms");
  mul_cmd->add_option("y1", mul_y1)->required();
  mul_cmd->add_option("y2", mul_y2)->required();
  mul_cmd->add_flag("--via-table", mul_via_table, "Antilog by table lookup");
  mul_cmd->add_option("--level", mul_level, "Table level");

  // discover-e
  int e_level = 20;
  bool e_sequence = false;
  auto* e_cmd = app.add_subcommand("discover-e", "e from the slope of log10 at x = 1");
  e_cmd->add_option("--level", e_level);
  e_cmd->add_flag("--sequence", e_sequence, "Print t_n for n = 4..level");

  // slope
  double slope_x = 0.0;
  double slope_base = 10.0;
  int slope_level = 20;
  auto* slope_cmd = app.add_subcommand("slope", "Slope of log_base at x");
  slope_cmd->add_option("x", slope_x)->required();
  slope_cmd->add_option("--base", slope_base);
  slope_cmd->add_option("--level", slope_level);

  // area-ln
  double area_x = 0.0;
  int area_steps = 4096;
  auto* area_cmd = app.add_subcommand("area-ln", "Trapezoid area under 1/t from 1 to x");
  area_cmd->add_option("x", area_x)->required();
  area_cmd->add_option("--steps", area_steps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const int depth = depth_flag ? *depth_flag : depth_from_env();
    Printer print(out, spec);

    if (sqrt_cmd->parsed()) {
      HeronOptions options;
      options.rel_tol = sqrt_tol;
      options.max_iterations = sqrt_max_iter;
      options.initial_guess = sqrt_guess;
      const SqrtTrace trace = heron_sqrt(sqrt_x, options);
      if (!sqrt_trace) {
        print.scalar("result", trace.result, {{"steps_used", std::int64_t{trace.steps_used}}});
      } else {
        std::vector<Record> rows;
        std::int64_t k = 1;
        for (const HeronStep& s : trace.iterations) {
          rows.push_back({{"k", k++}, {"x", s.guess}, {"y", s.quotient}});
        }
        print.rows({"k", "x_k", "y_k"}, rows, "iterations",
                   {{"input", trace.input},
                    {"initial_guess", trace.initial_guess},
                    {"result", trace.result},
                    {"converged", trace.converged},
                    {"steps_used", std::int64_t{trace.steps_used}}});
      }
    } else if (pow_cmd->parsed()) {
      print.scalar("result", int_pow(pow_b, pow_m));
    } else if (ladder_cmd->parsed()) {
      const RootLadder ladder(ladder_base, depth);
      if (ladder_rung) {
        print.record({{"j", std::int64_t{*ladder_rung}},
                      {"rung", ladder.rung(*ladder_rung)},
                      {"epsilon", rung_epsilon(ladder, *ladder_rung)}});
      } else {
        std::vector<Record> rows;
        for (int j = 0; j <= ladder.depth(); ++j) {
          rows.push_back(
              {{"j", std::int64_t{j}}, {"rung", ladder.rung(j)}, {"epsilon", ladder.excess(j)}});
        }
        print.rows({"j", "rung", "epsilon"}, rows, "rungs",
                   {{"base", ladder.base()}, {"depth", std::int64_t{ladder.depth()}}});
      }
    } else if (log_cmd->parsed()) {
      const RootLadder ladder(log_base, depth);
      const LogValue log = log_dyadic(log_y, ladder);
      Record extra = log_record(log);
      extra.erase(extra.begin());
      print.scalar("value", log.value(), extra);
    } else if (antilog_cmd->parsed()) {
      const RootLadder ladder(antilog_base, depth);
      print.scalar("value", antilog_dyadic(antilog_x, ladder));
    } else if (convert_cmd->parsed()) {
      const RootLadder ladder(convert_from, depth);
      const LogValue log = log_dyadic(convert_y, ladder);
      const BoundedValue converted = convert_base(log, convert_to, ladder);
      print.scalar("value", converted.value,
                   {{"error_bound", converted.error_bound}, {"log_from", log.value()}});
    } else if (verify_cmd->parsed()) {
      const RootLadder ladder(verify_base, depth);
      const auto [product, sum] = log_product_check(verify_y1, verify_y2, ladder);
      print.record({{"log_product", product}, {"log_sum", sum}, {"difference", product - sum}});
    } else if (radix_to->parsed()) {
      const RadixNumeral numeral = to_radix(radix_m, radix_base);
      print.scalar("digits", numeral.to_string());
    } else if (radix_from->parsed()) {
      const RadixNumeral numeral = RadixNumeral::parse(radix_digits, radix_base);
      const std::uint64_t value = from_radix(numeral);
      print.scalar("value", std::to_string(value));
    } else if (radix_frac->parsed()) {
      const auto digits = fractional_digits(radix_x, radix_base, radix_count);
      print.scalar("digits", "0." + digits_to_string(digits));
    } else if (table_cmd->parsed()) {
      const RootLadder ladder(table_base, depth);
      const LogTable table = build_table(ladder, table_level);
      if (table_lookup) {
        const AntilogLookup hit = lookup_antilog(table, *table_lookup);
        print.record({{"value", hit.value}, {"grid_error", hit.grid_error}});
      } else if (table_gnuplot) {
        out << "# y log_" << format_sig(table.base, 15) << "(y)\n";
        for (const TableEntry& e : table.entries) {
          out << print.text(e.value) << ' ' << exact_decimal(e.mantissa) << '\n';
        }
      } else if (spec.format == Format::json) {
        out << table_to_json(table);
      } else {
        out << table_to_csv(table);
      }
    } else if (mul_cmd->parsed()) {
      const RootLadder ladder(10.0, depth);
      if (!mul_via_table) {
        const auto log1 = log_dyadic(mul_y1, ladder);
        const auto log2 = log_dyadic(mul_y2, ladder);
        print.scalar("estimate", antilog_dyadic(log1.value() + log2.value(), ladder));
      } else {
        const LogTable table = build_table(ladder, mul_level);
        const MultiplicationResult r = multiply_via_logs(mul_y1, mul_y2, table, ladder);
        print.record({{"estimate", r.estimate},
                      {"x1", r.detail.x1},
                      {"x2", r.detail.x2},
                      {"sum", r.detail.sum},
                      {"characteristic", r.detail.characteristic},
                      {"mantissa", r.detail.mantissa},
                      {"table_value", r.detail.table_value},
                      {"grid_error", r.detail.grid_error},
                      {"relative_error_bound", r.detail.relative_error_bound}});
      }
    } else if (e_cmd->parsed()) {
      const RootLadder ladder(10.0, depth);
      if (e_sequence) {
        std::vector<Record> rows;
        for (const LimitTerm& term : limit_sequence(e_level, ladder)) {
          rows.push_back({{"n", std::int64_t{term.n}}, {"t", term.t}});
        }
        print.rows({"n", "t_n"}, rows, "sequence");
      } else {
        const SlopeEstimate slope = slope_log10(1.0, e_level, ladder);
        print.record({{"n", std::int64_t{e_level}},
                      {"t_n", slope.slope},
                      {"e", discover_e(e_level, ladder)}});
      }
    } else if (slope_cmd->parsed()) {
      const RootLadder ladder(10.0, depth);
      if (slope_base == 10.0) {
        const SlopeEstimate s = slope_log10(slope_x, slope_level, ladder);
        print.scalar("slope", s.slope, {{"epsilon", s.epsilon}, {"n", std::int64_t{s.ladder_level}}});
      } else {
        print.scalar("slope", slope_log_p(slope_base, slope_x, slope_level, ladder));
      }
    } else if (area_cmd->parsed()) {
      print.scalar("area", riemann_ln(area_x, area_steps));
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace meltdown::cli
