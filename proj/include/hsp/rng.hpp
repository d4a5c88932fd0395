#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hsp {

/// Deterministic 64-bit random stream (mt19937_64).
///
/// Streams are derived as a pure function of (master seed, label, index), so
/// consumers that run in parallel never share state and results do not depend
/// on scheduling. A stream is single-owner; copy it only to replay.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  static RngStream derive(std::uint64_t master_seed, std::string_view label,
                          std::uint64_t index = 0);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  double uniform_real() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace hsp
