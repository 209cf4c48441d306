#include "dictcode/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "dictcode/rng.hpp"

namespace dictcode {

NoiseProfile::NoiseProfile(Eigen::ArrayXd p_f, Eigen::ArrayXd p_e)
    : p_f_(std::move(p_f)), p_e_(std::move(p_e)) {
  if (p_f_.size() < 1) throw std::invalid_argument("profile needs at least one position");
  if (p_f_.size() != p_e_.size())
    throw std::invalid_argument("substitution and erasure arrays must have equal length");
  if ((p_f_ < 0.0).any() || (p_e_ < 0.0).any() || ((p_f_ + p_e_) > 1.0).any())
    throw std::invalid_argument("need p_f, p_e >= 0 and p_f + p_e <= 1 at every position");
}

NoiseProfile NoiseProfile::uniform(int n, double p_f, double p_e) {
  if (n < 1) throw std::invalid_argument("profile needs at least one position");
  return NoiseProfile(Eigen::ArrayXd::Constant(n, p_f), Eigen::ArrayXd::Constant(n, p_e));
}

int NoiseRealization::substitutions() const {
  int c = 0;
  for (Noise a : actions) c += a == Noise::substitute;
  return c;
}

int NoiseRealization::erasures() const {
  int c = 0;
  for (Noise a : actions) c += a == Noise::erase;
  return c;
}

NoiseRealization sample_noise(const NoiseProfile& profile, std::mt19937_64& rng) {
  const int n = profile.n();
  NoiseRealization out;
  out.actions.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double u = uniform_double(rng);
    const double f = profile.p_f()[i];
    if (u < f)
      out.actions[static_cast<std::size_t>(i)] = Noise::substitute;
    else if (u < f + profile.p_e()[i])
      out.actions[static_cast<std::size_t>(i)] = Noise::erase;
    else
      out.actions[static_cast<std::size_t>(i)] = Noise::clean;
  }
  return out;
}

ReceivedWord transmit(const Word& x, const NoiseRealization& w) {
  const int n = x.length();
  if (static_cast<int>(w.actions.size()) != n)
    throw std::invalid_argument("realization length does not match the word");
  std::vector<std::int16_t> entries(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::uint8_t bit = x[i];
    if (bit > 1) throw std::invalid_argument("transmit needs a binary word");
    switch (w.actions[static_cast<std::size_t>(i)]) {
      case Noise::clean: entries[static_cast<std::size_t>(i)] = bit; break;
      case Noise::substitute: entries[static_cast<std::size_t>(i)] = 1 - bit; break;
      case Noise::erase: entries[static_cast<std::size_t>(i)] = ReceivedWord::kErased; break;
    }
  }
  return ReceivedWord(std::move(entries));
}

ChannelStats channel_stats(const NoiseProfile& profile, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  const int n = profile.n();
  // Extended precision keeps the uniform special case exact: the sum of n equal
  // doubles and the later division by n cancel without rounding for desk-scale n.
  long double mu_f = 0.0L, mu_e = 0.0L;
  for (int i = 0; i < n; ++i) {
    mu_f += profile.p_f()[i];
    mu_e += profile.p_e()[i];
  }
  const long double weighted = 2.0L * mu_f + mu_e;
  ChannelStats out{};
  out.mu_f = static_cast<double>(mu_f);
  out.mu_e = static_cast<double>(mu_e);
  out.p_eff = static_cast<double>(weighted / n);
  out.eps = eps;
  out.t = static_cast<std::int64_t>(std::floor(static_cast<double>(n) * out.p_eff * (1.0 + 2.0 * eps)));
  return out;
}

double concentration_bound(double mu, double eps) {
  if (mu <= 0.0) throw std::invalid_argument("mu must be positive");
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  return 2.0 * std::exp(-eps * eps * mu / 4.0);
}

}  // namespace dictcode
