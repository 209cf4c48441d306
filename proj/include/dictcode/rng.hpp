#pragma once

#include <cstdint>
#include <random>

namespace dictcode {

/// Deterministic stream generator: one independent engine per (seed, stream, substream).
///
/// Every randomized routine in this library draws from an engine created here, so a
/// (seed, index) pair fully determines its output on every platform.  mt19937_64 and
/// seed_seq are both pinned by the language standard; no distribution from <random>
/// is used anywhere (their sequences are implementation-defined).
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream = 0,
                                  std::uint64_t substream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(substream),
                    static_cast<std::uint32_t>(substream >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t value = rng();
  while (value >= limit) value = rng();
  return value % bound;
}

}  // namespace dictcode
