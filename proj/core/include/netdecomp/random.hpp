#pragma once

#include <cstdint>

#include "netdecomp/graph.hpp"

namespace netdecomp {

/// Deterministic random stream for one (master seed, phase, vertex) triple.
///
/// The initial state is derived by chaining the SplitMix64 finalizer over the
/// three inputs:
///
///   s = mix(master_seed + GAMMA * (phase  + 1))
///   s = mix(s           + GAMMA * (vertex + 1))
///
/// with GAMMA = 0x9E3779B97F4A7C15 and mix the standard SplitMix64 finalizer.
/// Samples then follow the plain SplitMix64 sequence from s. The same triple
/// yields the same sample sequence in every run of one build, and distinct
/// triples yield unrelated-looking streams, so a simulation may draw each
/// vertex's per-phase randomness in any order.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t phase, std::uint64_t vertex);

  std::uint64_t next_u64();

  /// Uniform on (0, 1], 53-bit resolution; generator output 0 maps to 1.
  double next_unit_open_closed();

  /// Uniform on [0, 1), 53-bit resolution.
  double next_unit_half_open();

 private:
  std::uint64_t state_;
};

/// Inverse-transform sample from Exp(beta): -ln(u)/beta with u uniform on
/// (0, 1]. Throws std::invalid_argument when beta <= 0.
double sample_exponential(RandomStream& stream, double beta);

/// One vertex's sampled broadcast radius for one phase. The broadcast range
/// in hops is floor(value).
struct RadiusSample {
  double value = 0.0;
  Vertex origin = kNoVertex;
  std::size_t phase = 0;
};

RadiusSample sample_radius(std::uint64_t master_seed, std::size_t phase, Vertex vertex,
                           double beta);

}  // namespace netdecomp
