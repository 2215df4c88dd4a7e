#include "meltdown/root_ladder.hpp"

#include <cmath>
#include <string>

#include "meltdown/error.hpp"

namespace meltdown {

RootLadder::RootLadder(double base, int depth, double rel_tol) : rel_tol_(rel_tol) {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw Error(Errc::bad_base, "ladder base must be a finite number above 1");
  }
  if (depth < 0 || depth > kMaxLadderDepth) {
    throw Error(Errc::depth_out_of_range,
                "ladder depth must lie in [0, " + std::to_string(kMaxLadderDepth) + "]");
  }
  rungs_.reserve(static_cast<std::size_t>(depth) + 1);
  excess_.reserve(static_cast<std::size_t>(depth) + 1);
  rungs_.push_back(base);
  excess_.push_back(base - 1.0);
  for (int j = 1; j <= depth; ++j) {
    const double root = heron_root(rungs_.back(), rel_tol);
    // sqrt(1 + e) - 1 = e / (sqrt(1 + e) + 1)
    excess_.push_back(excess_.back() / (root + 1.0));
    rungs_.push_back(root);
  }
}

double RootLadder::rung(int j) const {
  if (j < 0 || j > depth()) {
    throw Error(Errc::index_out_of_range, "rung index " + std::to_string(j));
  }
  return rungs_[static_cast<std::size_t>(j)];
}

double RootLadder::excess(int j) const {
  if (j < 0 || j > depth()) {
    throw Error(Errc::index_out_of_range, "rung index " + std::to_string(j));
  }
  return excess_[static_cast<std::size_t>(j)];
}

RootLadder build_ladder(double base, int depth) { return RootLadder(base, depth); }

double rung_epsilon(const RootLadder& ladder, int j) { return ladder.excess(j); }

}  // namespace meltdown
