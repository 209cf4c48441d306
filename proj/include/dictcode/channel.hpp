#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dictcode/core.hpp"

namespace dictcode {

/// Per-position substitution and erasure probabilities of a binary channel whose
/// positions act independently; p_f(i) + p_e(i) <= 1 everywhere (equality allowed).
class NoiseProfile {
 public:
  NoiseProfile(Eigen::ArrayXd p_f, Eigen::ArrayXd p_e);
  static NoiseProfile uniform(int n, double p_f, double p_e);

  int n() const { return static_cast<int>(p_f_.size()); }
  const Eigen::ArrayXd& p_f() const { return p_f_; }
  const Eigen::ArrayXd& p_e() const { return p_e_; }

 private:
  Eigen::ArrayXd p_f_, p_e_;
};

enum class Noise : std::uint8_t { clean = 0, substitute = 1, erase = 2 };

/// One sampled action per position.
struct NoiseRealization {
  std::vector<Noise> actions;

  int substitutions() const;
  int erasures() const;
};

/// Draws one realization; consumes exactly one engine draw per position, so the
/// stream position after the call is determined by n alone.
NoiseRealization sample_noise(const NoiseProfile& profile, std::mt19937_64& rng);

/// Applies a realization to a binary word: substitute flips the bit, erase writes
/// the erasure mark, clean copies.  Rejects non-binary input.
ReceivedWord transmit(const Word& x, const NoiseRealization& w);

/// Aggregate noise figures and the matched decoding budget.
struct ChannelStats {
  double mu_f;    // sum of p_f(i)
  double mu_e;    // sum of p_e(i)
  double p_eff;   // (2 mu_f + mu_e) / n
  double eps;     // slack parameter the budget was computed with
  std::int64_t t; // floor(n * p_eff * (1 + 2 eps))
};

/// Exact accumulation of mu_f, mu_e, p_eff and t for a profile.  For a uniform
/// substitution-only profile this reproduces p_eff = 2 p_f bit-for-bit (sums are
/// carried in extended precision so n * p_f / n cancels exactly).
ChannelStats channel_stats(const NoiseProfile& profile, double eps);

/// Deviation bound 2 exp(-eps^2 mu / 4) for a sum of independent indicators with
/// mean mu: P(|T - mu| >= eps mu) never exceeds it.
double concentration_bound(double mu, double eps);

}  // namespace dictcode
