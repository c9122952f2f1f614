#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace wn {

struct MCEstimate {
  double value = 0;
  double standard_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Uniform stream keyed by (seed, stream index); reproducible across platforms.
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::uint64_t stream);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Averages sample(rng) over `samples` draws split across `shards` streams, merged in order.
/// Shard s draws from stream stream_base + s.
MCEstimate monte_carlo(std::uint64_t samples, std::uint64_t seed, unsigned shards,
                       const std::function<double(KeyedRng&)>& sample,
                       std::uint64_t stream_base = 0);

}  // namespace wn
