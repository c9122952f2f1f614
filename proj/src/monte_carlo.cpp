#include "wn/monte_carlo.hpp"

#include "wn/arith.hpp"

#include <cmath>
#include <future>
#include <vector>

namespace wn {

KeyedRng::KeyedRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x9e3779b9u};
  engine_.seed(seq);
}

namespace {
struct Moments {
  std::uint64_t count = 0;
  long double mean = 0;
  long double m2 = 0;
};

Moments run_stream(std::uint64_t count, std::uint64_t seed, std::uint64_t stream,
                   const std::function<double(KeyedRng&)>& sample) {
  KeyedRng rng(seed, stream);
  Moments m;
  for (std::uint64_t i = 0; i < count; ++i) {
    const long double x = sample(rng);
    ++m.count;
    const long double delta = x - m.mean;
    m.mean += delta / static_cast<long double>(m.count);
    m.m2 += delta * (x - m.mean);
  }
  return m;
}
}  // namespace

MCEstimate monte_carlo(std::uint64_t samples, std::uint64_t seed, unsigned shards,
                       const std::function<double(KeyedRng&)>& sample,
                       std::uint64_t stream_base) {
  require(samples >= 2, "Monte Carlo needs at least two samples");
  require(shards >= 1, "shard count must be positive");
  std::vector<std::future<Moments>> parts;
  std::vector<Moments> done;
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t count = samples / shards + (s < samples % shards ? 1 : 0);
    if (shards == 1)
      done.push_back(run_stream(count, seed, stream_base + s, sample));
    else
      parts.push_back(std::async(std::launch::async, run_stream, count, seed, stream_base + s, std::cref(sample)));
  }
  for (auto& f : parts) done.push_back(f.get());

  Moments total;
  for (const Moments& m : done) {
    if (m.count == 0) continue;
    const long double n = static_cast<long double>(total.count + m.count);
    const long double delta = m.mean - total.mean;
    total.m2 += m.m2 + delta * delta * static_cast<long double>(total.count) *
                           static_cast<long double>(m.count) / n;
    total.mean += delta * static_cast<long double>(m.count) / n;
    total.count += m.count;
  }
  MCEstimate e;
  e.samples = total.count;
  e.seed = seed;
  e.value = static_cast<double>(total.mean);
  const long double var = total.m2 / static_cast<long double>(total.count - 1);
  e.standard_error = static_cast<double>(std::sqrt(var / static_cast<long double>(total.count)));
  return e;
}

}  // namespace wn
