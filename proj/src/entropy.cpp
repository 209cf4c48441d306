#include "dictcode/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace dictcode {

namespace {

constexpr double kSumTolerance = 1e-12;
const double kLn2 = std::log(2.0);

void check_probabilities(const Eigen::ArrayXd& p) {
  if (p.size() < 1) throw std::invalid_argument("distribution needs at least one entry");
  if ((p < 0.0).any()) throw std::invalid_argument("probabilities must be nonnegative");
  if (std::abs(p.sum() - 1.0) > kSumTolerance)
    throw std::invalid_argument("probabilities must sum to one");
}

}  // namespace

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("binary entropy needs x in [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return (-x * std::log(x) - (1.0 - x) * std::log(1.0 - x)) / kLn2;
}

Distribution::Distribution(Eigen::ArrayXd probabilities, double base)
    : p_(std::move(probabilities)), base_(base) {
  check_probabilities(p_);
  if (base_ < 2.0) throw std::invalid_argument("entropy base must be at least 2");
}

Distribution Distribution::uniform(int size, double base) {
  if (size < 1) throw std::invalid_argument("distribution needs at least one entry");
  return Distribution(Eigen::ArrayXd::Constant(size, 1.0 / size), base);
}

double entropy(const Distribution& p) {
  return entropy_nat(p.probabilities()) / std::log(p.base());
}

JointDistribution::JointDistribution(Eigen::MatrixXd pxy, double base)
    : pxy_(std::move(pxy)), base_(base) {
  if (pxy_.rows() < 1 || pxy_.cols() < 1)
    throw std::invalid_argument("joint distribution needs at least one cell");
  if ((pxy_.array() < 0.0).any())
    throw std::invalid_argument("probabilities must be nonnegative");
  if (std::abs(pxy_.sum() - 1.0) > kSumTolerance)
    throw std::invalid_argument("probabilities must sum to one");
  if (base_ < 2.0) throw std::invalid_argument("entropy base must be at least 2");
  px_ = pxy_.rowwise().sum().array();
  py_ = pxy_.colwise().sum().array();
}

JointDistribution JointDistribution::from_input_and_channel(const Distribution& px,
                                                            const Eigen::MatrixXd& transition) {
  if (transition.rows() != px.size())
    throw std::invalid_argument("transition rows must match the input distribution");
  Eigen::MatrixXd pxy = px.probabilities().matrix().asDiagonal() * transition;
  return JointDistribution(std::move(pxy), px.base());
}

EntropySet joint_conditional_entropies(const JointDistribution& joint) {
  const double ln_base = std::log(joint.base());
  const auto& pxy = joint.pxy();
  EntropySet out{};
  out.hx = entropy_nat(joint.px()) / ln_base;
  out.hy = entropy_nat(joint.py()) / ln_base;
  out.hxy = entropy_nat(pxy.array()) / ln_base;
  // Defining sums: -sum p(x,y) log p(y|x) and -sum p(x,y) log p(x|y).
  double hyx = 0.0, hxy_cond = 0.0;
  for (Eigen::Index x = 0; x < pxy.rows(); ++x) {
    for (Eigen::Index y = 0; y < pxy.cols(); ++y) {
      const double p = pxy(x, y);
      if (p <= 0.0) continue;
      hyx -= p * std::log(p / joint.px()[x]);
      hxy_cond -= p * std::log(p / joint.py()[y]);
    }
  }
  out.hy_given_x = hyx / ln_base;
  out.hx_given_y = hxy_cond / ln_base;
  return out;
}

double stirling_binomial_bound(int n, int k) {
  if (n < 2) throw std::invalid_argument("binomial bound needs n >= 2");
  if (k <= 0 || k >= n)
    throw std::invalid_argument("binomial bound needs 0 < k < n");
  const double h = binary_entropy(static_cast<double>(k) / n);
  return 4.0 * std::exp(1.0) * n * std::exp2(n * h);
}

double asymmetric_alpha0(double p, double delta) {
  if (p < 0.0 || delta < 0.0) throw std::invalid_argument("p and delta must be nonnegative");
  if (p + delta > 1.0) throw std::invalid_argument("p + delta must not exceed 1");
  return binary_entropy(p) + binary_entropy(p + delta) + 1.0 -
         binary_entropy((1.0 - delta) / 2.0);
}

std::vector<RatePoint> rate_curve(double delta, std::span<const double> p_grid) {
  std::vector<RatePoint> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) out.push_back({p, delta, 1.0 - asymmetric_alpha0(p, delta)});
  return out;
}

}  // namespace dictcode
