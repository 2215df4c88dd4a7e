#pragma once

#include <span>
#include <vector>

#include "meltdown/arith.hpp"

namespace meltdown {

inline constexpr int kMaxLadderDepth = 48;
inline constexpr int kDefaultLadderDepth = 40;

/// The nested radicals base^(1/2^j), j = 0..depth, built eagerly from
/// repeated Heron square roots. Immutable once constructed.
class RootLadder {
 public:
  RootLadder(double base, int depth, double rel_tol = kDefaultRelTol);

  double base() const noexcept { return rungs_.front(); }
  int depth() const noexcept { return static_cast<int>(rungs_.size()) - 1; }
  double rel_tol_used() const noexcept { return rel_tol_; }

  std::span<const double> rungs() const noexcept { return rungs_; }

  /// base^(1/2^j). Throws Errc::index_out_of_range.
  double rung(int j) const;

  /// rung(j) - 1, carried alongside the rungs without cancellation.
  double excess(int j) const;

 private:
  std::vector<double> rungs_;
  std::vector<double> excess_;
  double rel_tol_;
};

RootLadder build_ladder(double base, int depth);

double rung_epsilon(const RootLadder& ladder, int j);

}  // namespace meltdown
