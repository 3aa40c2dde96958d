#pragma once

#include <cstdint>
#include <map>

#include "postulatum/square_model.hpp"

namespace postulatum::square {

/// Two-sided 99% normal quantile used for the Wilson score interval.
inline constexpr double kZ99 = 2.5758293035489004;

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;

  bool contains(double p) const { return low <= p && p <= high; }
};

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ99);

struct KindEstimate {
  std::uint64_t count = 0;
  double frequency = 0.0;
  WilsonInterval interval;
};

struct McEstimate {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::map<ParallelKind, KindEstimate> kinds;
};

/// Points are consumed in fixed-size batches; batch b draws from its own
/// generator seeded by (seed, b).
inline constexpr std::uint64_t kMcBatchSize = 4096;

/// Classifies `samples` pseudo-random interior points with dyadic coordinates
/// k / 2^32. Points that land exactly on l are redrawn. Results depend only on
/// (l, samples, seed), never on `workers`.
McEstimate zone_measures_mc(const Chord& l, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);

}  // namespace postulatum::square
