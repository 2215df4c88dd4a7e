#include <doctest.h>

#include <cmath>

#include "meltdown/e_discovery.hpp"
#include "meltdown/error.hpp"
#include "meltdown/log_engine.hpp"
#include "test_util.hpp"

using namespace meltdown;
using meltdown::testing::rel_err;

namespace {

const double kLog10E = 1.0 / std::log(10.0);
const double kE = std::exp(1.0);

const RootLadder& ladder40() {
  static const RootLadder l(10.0, 40);
  return l;
}

double e_est() {
  static const double e = discover_e(20, ladder40());
  return e;
}

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_failure;
}

}  // namespace

TEST_SUITE("e_discovery") {

TEST_CASE("slope of log10 at 1 from the 2^-20 rung") {
  const RootLadder l20(10.0, 20);
  const SlopeEstimate s = slope_log10(1.0, 20, l20);
  CHECK(s.ladder_level == 20);
  CHECK(s.base == 10.0);
  CHECK(s.epsilon == doctest::Approx(0.000002196).epsilon(2e-4));
  CHECK(s.slope == doctest::Approx(std::ldexp(1.0, -20) / 0.000002196).epsilon(2e-4));
  CHECK(std::fabs(s.slope - 0.434) < 5e-4);
  // reconstructable fields
  CHECK(s.slope == std::ldexp(1.0, -20) / s.epsilon);
  CHECK(std::fabs(s.epsilon - (l20.rung(20) - 1.0)) < 2.3e-16);
}

TEST_CASE("slope falls as 1/x") {
  for (int n : {10, 20, 30}) {
    const double at1 = slope_log10(1.0, n, ladder40()).slope;
    CHECK(rel_err(slope_log10(10.0, n, ladder40()).slope, at1 / 10.0) <= 1e-12);
  }
  for (int n : {8, 20, 40}) {
    const double ref = slope_log10(1.0, n, ladder40()).slope;
    for (double x : {0.5, 2.0, 10.0}) {
      CHECK(rel_err(slope_log10(x, n, ladder40()).slope * x, ref) <= 1e-12);
    }
  }
}

TEST_CASE("slope at level 30 approaches log10(e)") {
  const RootLadder l30(10.0, 30);
  CHECK(std::fabs(slope_log10(1.0, 30, l30).slope - kLog10E) <= 1e-8);
}

TEST_CASE("limit sequence") {
  const auto seq = limit_sequence(20, ladder40());
  REQUIRE(seq.size() == 17);
  CHECK(seq.front().n == 4);
  CHECK(seq.back().n == 20);
  CHECK(std::fabs(seq.back().t - kLog10E) < 1e-6);
  auto t = [&](int n) { return seq[static_cast<std::size_t>(n - 4)].t; };
  CHECK(t(4) < t(8));
  CHECK(t(8) < t(16));
  // first-order error log10(e) ln(10) / 2^(n+1) = 2^-(n+1)
  for (int n : {10, 16, 20}) {
    const double predicted = std::ldexp(1.0, -(n + 1));
    CHECK(rel_err(kLog10E - t(n), predicted) <= 0.2);
  }
}

TEST_CASE("limit sequence increases toward log10(e) at every depth") {
  const RootLadder deep(10.0, 48);
  const auto seq = limit_sequence(48, deep);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(seq[i].t < seq[i + 1].t);
  for (const LimitTerm& term : seq) CHECK(term.t <= kLog10E);
}

TEST_CASE("discover e") {
  CHECK(std::fabs(e_est() - kE) < 5e-4);
  CHECK(std::fabs(e_est() - 2.7182) < 1e-4);

  const double err12 = std::fabs(discover_e(12, ladder40()) - kE);
  const double err24 = std::fabs(discover_e(24, ladder40()) - kE);
  CHECK(err24 < err12);

  const RootLadder l44(10.0, 44);
  CHECK(std::fabs(discover_e(30, l44) - kE) < 5e-6);
}

TEST_CASE("slope of log_p") {
  for (double x : {0.5, 1.0, 3.0}) {
    CHECK(rel_err(slope_log_p(10.0, x, 20, ladder40()), slope_log10(x, 20, ladder40()).slope) <
          1e-15);
  }
  CHECK(std::fabs(slope_log_p(e_est(), 1.0, 24, ladder40()) - 1.0) < 1e-4);
  CHECK(std::fabs(slope_log_p(2.0, 1.0, 24, ladder40()) - 1.0 / std::log(2.0)) < 1e-4);
}

TEST_CASE("trapezoid area under 1/t") {
  CHECK(riemann_ln(1.0, 16) == 0.0);
  CHECK(riemann_ln(1.0, 4096) == 0.0);
  CHECK(std::fabs(riemann_ln(e_est(), 4096) - 1.0) < 1e-5);
  const double ln10 = riemann_ln(10.0, 4096);
  CHECK(std::fabs(ln10 - std::log(10.0)) < 1e-5);
  const BoundedValue via_logs = convert_base(log_dyadic(10.0, ladder40()), e_est(), ladder40());
  CHECK(std::fabs(ln10 - via_logs.value) < 1e-4);
  // O(h^2): quadrupling the steps cuts the error about 16x
  const double coarse = std::fabs(riemann_ln(10.0, 64) - std::log(10.0));
  const double fine = std::fabs(riemann_ln(10.0, 256) - std::log(10.0));
  CHECK(coarse / fine == doctest::Approx(16.0).epsilon(0.05));
}

TEST_CASE("area agrees with base-converted logs") {
  for (double x : {2.0, e_est(), 5.0, 10.0}) {
    const double area = riemann_ln(x, 4096);
    const double converted = convert_base(log_dyadic(x, ladder40()), e_est(), ladder40()).value;
    CHECK(std::fabs(area - converted) <= 1e-4);
  }
}

TEST_CASE("e discovery errors") {
  CHECK(code_of([] { slope_log10(1.0, 3, ladder40()); }) == Errc::level_out_of_range);
  CHECK(code_of([] { slope_log10(1.0, 41, ladder40()); }) == Errc::level_out_of_range);
  CHECK(code_of([] { slope_log10(0.0, 20, ladder40()); }) == Errc::non_positive_input);
  CHECK(code_of([] { slope_log10(1.0, 20, RootLadder(2.0, 30)); }) == Errc::bad_base);
  CHECK(code_of([] { limit_sequence(3, ladder40()); }) == Errc::level_out_of_range);
  CHECK(code_of([] { discover_e(9, ladder40()); }) == Errc::level_out_of_range);
  CHECK(code_of([] { slope_log_p(1.0, 1.0, 20, ladder40()); }) == Errc::bad_base);
  CHECK(code_of([] { riemann_ln(0.5, 4096); }) == Errc::out_of_range);
  CHECK(code_of([] { riemann_ln(2.0, 15); }) == Errc::out_of_range);
}

}  // TEST_SUITE
