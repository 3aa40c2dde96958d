#include "postulatum/monte_carlo.hpp"

#include "square_kernel.hpp"

#include <cmath>
#include <random>
#include <thread>
#include <vector>

namespace postulatum::square {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Numerator k of a dyadic coordinate k / 2^32, 0 < k < 2^32.
std::uint64_t dyadic_numerator(std::mt19937_64& rng) {
  for (;;) {
    const std::uint64_t k = rng() >> 32;
    if (k != 0) return k;
  }
}

Rational dyadic(std::uint64_t k) {
  Rational r(static_cast<unsigned long>(k), 1ul);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), 32);
  return r;
}

using Counts = std::map<ParallelKind, std::uint64_t>;

Counts run_batch(const Chord& l, std::uint64_t seed, std::uint64_t batch, std::uint64_t n) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(batch)));
  Counts counts;
  __int128 side = 0;
  const auto scaled = detail::scale_chord(l, Integer(1) << 32, side);
  const __int128 factor = side >> 32;
  for (std::uint64_t i = 0; i < n; ++i) {
    for (;;) {
      const std::uint64_t kx = dyadic_numerator(rng);
      const std::uint64_t ky = dyadic_numerator(rng);
      if (scaled) {
        const __int128 px = static_cast<__int128>(kx) * factor;
        const __int128 py = static_cast<__int128>(ky) * factor;
        if (detail::kernel_on_line(px, py, *scaled)) continue;
        ++counts[detail::kernel_kind(side, px, py, *scaled)];
      } else {
        const Point2 p{dyadic(kx), dyadic(ky)};
        if (on_segment(p, l.segment())) continue;
        ++counts[classify_kind(p, l)];
      }
      break;
    }
  }
  return counts;
}

}  // namespace

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

McEstimate zone_measures_mc(const Chord& l, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  const std::uint64_t batches = (samples + kMcBatchSize - 1) / kMcBatchSize;
  std::vector<Counts> per_batch(batches);
  const auto work = [&](unsigned w, unsigned stride) {
    for (std::uint64_t b = w; b < batches; b += stride) {
      const std::uint64_t n = std::min(kMcBatchSize, samples - b * kMcBatchSize);
      per_batch[b] = run_batch(l, seed, b, n);
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  for (const Counts& c : per_batch) {
    for (const auto& [kind, n] : c) out.kinds[kind].count += n;
  }
  for (auto& [kind, est] : out.kinds) {
    est.frequency = static_cast<double>(est.count) / static_cast<double>(samples);
    est.interval = wilson_interval(est.count, samples);
  }
  return out;
}

}  // namespace postulatum::square
