#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dictcode {

/// Entropy in nats of a nonnegative weight expression; 0 * log 0 counts as 0.
/// Works on any Eigen array expression so callers can pass views and maps.
template <typename Derived>
double entropy_nat(const Eigen::ArrayBase<Derived>& p) {
  const auto& a = p.derived();
  return (a > 0.0).select(-a * a.log(), 0.0).sum();
}

/// H(x) = -x log2 x - (1-x) log2(1-x) on [0, 1], with H(0) = H(1) = 0.
double binary_entropy(double x);

/// Probability vector with an explicit logarithm base (>= 2) for entropy values.
class Distribution {
 public:
  Distribution(Eigen::ArrayXd probabilities, double base);
  static Distribution uniform(int size, double base);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[i]; }
  const Eigen::ArrayXd& probabilities() const { return p_; }
  double base() const { return base_; }

 private:
  Eigen::ArrayXd p_;
  double base_;
};

/// Entropy of the distribution in its own base.
double entropy(const Distribution& p);

/// Joint probability matrix (rows = X, columns = Y) with derived marginals.
class JointDistribution {
 public:
  JointDistribution(Eigen::MatrixXd pxy, double base);

  /// p_XY(x, y) = px(x) * transition(x, y); transition rows must be stochastic.
  static JointDistribution from_input_and_channel(const Distribution& px,
                                                  const Eigen::MatrixXd& transition);

  const Eigen::MatrixXd& pxy() const { return pxy_; }
  const Eigen::ArrayXd& px() const { return px_; }
  const Eigen::ArrayXd& py() const { return py_; }
  double base() const { return base_; }

 private:
  Eigen::MatrixXd pxy_;
  Eigen::ArrayXd px_, py_;
  double base_;
};

/// The five entropies of a joint distribution, all in its base.  The conditional
/// entropies are computed from their defining double sums, not via the chain rule,
/// so the additivity identities remain a real check on the arithmetic.
struct EntropySet {
  double hx;
  double hy;
  double hxy;
  double hy_given_x;
  double hx_given_y;
};

EntropySet joint_conditional_entropies(const JointDistribution& joint);

/// Upper bound 4 e n 2^{n H(k/n)} on the binomial coefficient C(n, k); 0 < k < n.
double stirling_binomial_bound(int n, int k);

/// Rate threshold H(p) + H(p + delta) + 1 - H((1 - delta)/2) of the binary
/// asymmetric channel whose two flip probabilities are p and p + delta.
double asymmetric_alpha0(double p, double delta);

struct RatePoint {
  double p;
  double delta;
  double rate;  // 1 - alpha0(p, delta)
};

/// Evaluates 1 - alpha0 over a grid of p values for one delta.
std::vector<RatePoint> rate_curve(double delta, std::span<const double> p_grid);

}  // namespace dictcode
