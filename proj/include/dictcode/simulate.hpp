#pragma once

#include <cstdint>
#include <vector>

#include "dictcode/channel.hpp"
#include "dictcode/core.hpp"
#include "dictcode/gv.hpp"

namespace dictcode {

/// 95% Wilson score interval for `errors` successes in `trials` draws.
/// Preferred over the normal approximation because decoder error rates live
/// near zero, where the normal interval degenerates.
struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

WilsonInterval wilson_interval(std::int64_t errors, std::int64_t trials);

struct WordErrorEstimate {
  std::int64_t errors = 0;
  double estimate = 0.0;
  WilsonInterval interval;
};

struct SimulationReport {
  int n = 0;
  std::size_t code_size = 0;
  int d = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<WordErrorEstimate> per_word;
  double max_estimate = 0.0;
  double wall_seconds = 0.0;  // informational only; callers keep it out of
                              // deterministic output streams
};

/// Monte Carlo estimate of the worst per-word decoding error rate: every code
/// word is transmitted `trials` times and decoded; a trial counts as an error
/// unless decoding returns exactly the transmitted word.
///
/// Trial (word_index, trial_index) draws from stream_rng(seed, word_index,
/// trial_index), so the estimate for a given (code, profile, trials, seed) is
/// identical across runs and machines regardless of execution order.
SimulationReport simulate(const Code& code, int d, const NoiseProfile& profile,
                          std::int64_t trials, std::uint64_t seed);

}  // namespace dictcode
