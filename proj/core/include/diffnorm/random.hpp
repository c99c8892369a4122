#pragma once

#include <cstdint>
#include <random>

namespace diffnorm {

/// Engine with a fixed, platform-independent output sequence. The standard
/// distributions are implementation-defined, so integers are drawn with
/// uniform_int below instead.
using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

/// Uniform in [-bound, bound] without zero.
inline long nonzero_int(Rng& rng, long bound) {
  const long v = uniform_int(rng, 1, bound);
  return (rng() & 1U) ? v : -v;
}

/// Seeds for independent sub-streams derived from one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace diffnorm
