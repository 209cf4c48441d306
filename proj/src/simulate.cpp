#include "dictcode/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dictcode/rng.hpp"

namespace dictcode {

namespace {

constexpr double kZ95 = 1.959963984540054;

}  // namespace

WilsonInterval wilson_interval(std::int64_t errors, std::int64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  if (errors < 0 || errors > trials)
    throw std::invalid_argument("errors must lie in [0, trials]");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(errors) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // The score interval contains the point estimate by construction; the min/max
  // below repair the round-off at p = 0 and p = 1 where center - half cancels.
  const double low = std::min(std::max(0.0, center - half), p);
  const double high = std::max(std::min(1.0, center + half), p);
  return {low, high};
}

SimulationReport simulate(const Code& code, int d, const NoiseProfile& profile,
                          std::int64_t trials, std::uint64_t seed) {
  if (code.size() == 0) throw std::invalid_argument("code must be nonempty");
  if (profile.n() != code.n())
    throw std::invalid_argument("profile length does not match the code");
  if (trials < 100) throw std::invalid_argument("need at least 100 trials");

  const auto start = std::chrono::steady_clock::now();
  SimulationReport report;
  report.n = code.n();
  report.code_size = code.size();
  report.d = d;
  report.trials = trials;
  report.seed = seed;
  report.per_word.resize(code.size());

  for (std::size_t w = 0; w < code.size(); ++w) {
    const Word& sent = code.words()[w];
    std::int64_t errors = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      auto rng = stream_rng(seed, static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(t));
      const NoiseRealization noise = sample_noise(profile, rng);
      const ReceivedWord received = transmit(sent, noise);
      const DecodeOutcome outcome = two_stage_decode(code, d, received);
      if (!outcome.ok() || outcome.word() != sent) ++errors;
    }
    auto& entry = report.per_word[w];
    entry.errors = errors;
    entry.estimate = static_cast<double>(errors) / static_cast<double>(trials);
    entry.interval = wilson_interval(errors, trials);
    report.max_estimate = std::max(report.max_estimate, entry.estimate);
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace dictcode
