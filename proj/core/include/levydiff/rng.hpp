// Seeded random streams with deterministic substream derivation.
#pragma once

#include <cstdint>
#include <random>

namespace levydiff {

// A random stream owned by one worker/sample. Substreams derived from
// (seed, index) are independent for distinct indices; this is the
// contract every parallel sampler in the library relies on.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(mix(seed)) {}

  static RngStream substream(std::uint64_t seed, std::uint64_t index) {
    return RngStream(mix(seed) ^ mix(index + 0x632be59bd9b4e019ULL));
  }

  double uniform() { return unit_(gen_); }
  double gaussian() { return normal_(gen_); }

  double exponential(double rate) {
    return std::exponential_distribution<double>(rate)(gen_);
  }

  double gamma(double shape, double scale = 1.0) {
    return std::gamma_distribution<double>(shape, scale)(gen_);
  }

  long poisson(double mean) {
    return std::poisson_distribution<long>(mean)(gen_);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace levydiff
