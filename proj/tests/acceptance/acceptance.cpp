// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "meltdown.hpp"
#include "verify.hpp"

using namespace meltdown;

namespace {

struct Check {
  bool ok;
  std::string note;
};

// |value - printed| within one unit of the last printed decimal.
bool matches_printed(double value, const std::string& printed) {
  const auto dot = printed.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  return std::fabs(value - std::stod(printed)) <= std::pow(10.0, -decimals) * (1.0 + 1e-9);
}

// Same leading `sig` significant figures after rounding.
bool same_sig_figs(double a, double b, int sig) {
  char sa[64];
  char sb[64];
  std::snprintf(sa, sizeof sa, "%.*e", sig - 1, a);
  std::snprintf(sb, sizeof sb, "%.*e", sig - 1, b);
  return std::string(sa) == sb;
}

std::string fmt(double v) { return format_sig(v, 12); }

const double kGrid40 = std::ldexp(1.0, -40);

const RootLadder& ladder40() {
  static const RootLadder l(10.0, 40);
  return l;
}

double e_est() { return discover_e(20, ladder40()); }

Check criterion_sqrt_trace() {
  const SqrtTrace t = heron_sqrt(1747.0, {1e-10, 64, 40.0});
  std::ostringstream note;
  bool ok = t.iterations.size() >= 4;
  if (!ok) return {false, "fewer than four iterates"};
  const double y1 = t.iterations[0].quotient;
  const double x2 = t.iterations[1].guess;
  const double x3 = t.iterations[2].guess;
  const double x4 = t.iterations[3].guess;
  const double x5 = t.result;
  auto sub = [&](const char* name, double got, const char* want) {
    const bool pass = matches_printed(got, want);
    note << name << "=" << fmt(got) << (pass ? " ok" : " MISMATCH(expected " + std::string(want) + ")")
         << "; ";
    ok = ok && pass;
  };
  sub("y1", y1, "43.675");
  sub("x2", x2, "41.8735");
  sub("x3", x3, "41.79714857");
  sub("x4", x4, "41.79712909");
  const bool agree = same_sig_figs(x5, x4, 10);
  note << "x5==x4 to 10 sig figs " << (agree ? "ok" : "MISMATCH");
  ok = ok && agree;
  return {ok, note.str()};
}

Check criterion_ladder_values() {
  const RootLadder l(10.0, 20);
  const bool sqrt10 = same_sig_figs(l.rung(1), 3.162277660, 10);
  const bool r4 = matches_printed(l.rung(4), "1.154781985");
  const bool r20 = matches_printed(l.rung(20), "1.000002196");
  const bool r3 = matches_printed(l.rung(3), "1.333521432") && !matches_printed(l.rung(3), "1.333512432");
  std::ostringstream note;
  note << "rung1=" << fmt(l.rung(1)) << " rung3=" << fmt(l.rung(3)) << " rung4=" << fmt(l.rung(4))
       << " rung20=" << fmt(l.rung(20));
  return {sqrt10 && r4 && r20 && r3, note.str()};
}

Check criterion_log_laws() {
  const RootLadder& l = ladder40();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> exp_dist(-8.0, 8.0);
  std::uniform_real_distribution<double> mid(1.1, 9.0);
  std::uniform_int_distribution<int> power(0, 10);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const double y1 = std::pow(10.0, exp_dist(rng));
    const double y2 = std::pow(10.0, exp_dist(rng));
    const auto [prod, sum] = log_product_check(y1, y2, l);
    if (std::fabs(prod - sum) > 3 * kGrid40) ++failures;

    const double y = mid(rng);
    const unsigned m = static_cast<unsigned>(power(rng));
    if (std::fabs(log_dyadic(int_pow(y, m), l).value() - m * log_dyadic(y, l).value()) >
        (m + 1) * kGrid40) {
      ++failures;
    }

    const LogValue ly = log_dyadic(y1, l);
    if (std::fabs(antilog_dyadic(ly, l) / y1 - 1.0) > 3 * std::log(10.0) * kGrid40) ++failures;
    const double x = exp_dist(rng);
    if (std::fabs(log_dyadic(antilog_dyadic(x, l), l).value() - x) > 2 * kGrid40) ++failures;

    if (std::fabs(log_dyadic(1.0 / y1, l).value() + ly.value()) > 2 * kGrid40) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures over 5 x 1000 checks"};
}

Check criterion_oracles() {
  const verify::OracleReport log = verify::oracle_compare("log_dyadic", 1000, 42);
  const verify::OracleReport sqrt = verify::oracle_compare("heron_sqrt", 1000, 42);
  return {log.pass && sqrt.pass, log.to_json_line() + " " + sqrt.to_json_line()};
}

Check criterion_e_discovery() {
  const auto seq = limit_sequence(20, ladder40());
  const double t20 = seq.back().t;
  const double e = e_est();
  bool monotone = true;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) monotone = monotone && seq[i].t < seq[i + 1].t;
  const bool t_ok = same_sig_figs(t20, 0.434294, 6) && same_sig_figs(t20, 1.0 / std::log(10.0), 6);
  const bool e_ok = same_sig_figs(e, 2.718, 4);
  return {t_ok && e_ok && monotone,
          "t20=" + fmt(t20) + " e=" + fmt(e) + (monotone ? " monotone" : " NOT monotone")};
}

Check criterion_slope_p() {
  const double p = e_est();
  double worst = 0.0;
  for (double x : {0.5, 1.0, 2.0, 10.0}) {
    worst = std::max(worst, std::fabs(slope_log_p(p, x, 24, ladder40()) * x - 1.0));
  }
  return {worst <= 1e-4, "max |slope*x - 1| = " + fmt(worst)};
}

Check criterion_multiplication() {
  const LogTable table = build_table(ladder40(), 13);
  const MultiplicationResult r = multiply_via_logs(3157.0, 24551.0, table, ladder40());
  const double exact = 3157.0 * 24551.0;
  const double rel = std::fabs(r.estimate / exact - 1.0);
  const bool x1 = std::fabs(r.detail.x1 - 3.4993) <= 1e-4;
  const bool x2 = std::fabs(r.detail.x2 - 4.3900) <= 1e-4;
  return {exact == 77507507.0 && rel <= 5e-4 && x1 && x2,
          "estimate=" + fmt(r.estimate) + " rel=" + fmt(rel) + " x1=" + fmt(r.detail.x1) +
              " x2=" + fmt(r.detail.x2)};
}

Check criterion_radix() {
  const char* row[] = {"1",   "2",   "10",  "11",  "12",  "20",  "21",  "22",
                       "100", "101", "102", "110", "111", "112", "120", "121"};
  bool ok = true;
  for (std::uint64_t n = 1; n <= 16; ++n) ok = ok && to_radix(n, 3).to_string() == row[n - 1];
  ok = ok && from_radix(RadixNumeral::parse("22", 3)) == 8 && to_radix(8, 3).to_string() == "22";
  ok = ok && from_radix(RadixNumeral::parse("120", 3)) == 15 && to_radix(15, 3).to_string() == "120";
  return {ok, "base-3 row 1..16, '22'<->8, '120'<->15"};
}

Check criterion_area() {
  const double area = riemann_ln(10.0, 4096);
  const double converted = convert_base(log_dyadic(10.0, ladder40()), e_est(), ladder40()).value;
  const double diff = std::fabs(area - converted);
  return {diff <= 1e-4, "area=" + fmt(area) + " converted=" + fmt(converted) + " diff=" + fmt(diff)};
}

Check criterion_intrinsic_ban() {
  const auto violations = verify::audit_no_intrinsics(MELTDOWN_SOURCE_DIR);
  std::string note = std::to_string(violations.size()) + " violations";
  for (const auto& v : violations) note += "; " + v.file.string() + ":" + std::to_string(v.line) + " " + v.call;
  return {violations.empty(), note};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"sqrt(1747) trace from guess 40", criterion_sqrt_trace},
      {"root ladder values", criterion_ladder_values},
      {"log laws property suite", criterion_log_laws},
      {"oracle suite (log10, sqrt)", criterion_oracles},
      {"discovery of e", criterion_e_discovery},
      {"slope of log_e is 1/x", criterion_slope_p},
      {"multiplication via log table", criterion_multiplication},
      {"base-3 numerals", criterion_radix},
      {"area under 1/t vs converted log", criterion_area},
      {"no intrinsics in library sources", criterion_intrinsic_ban},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check c{false, ""};
    try {
      c = run();
    } catch (const std::exception& e) {
      c = {false, std::string("exception: ") + e.what()};
    }
    if (!c.ok) ++failed;
    std::printf("[%s] %2d %s -- %s\n", c.ok ? "PASS" : "FAIL", index, name, c.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
