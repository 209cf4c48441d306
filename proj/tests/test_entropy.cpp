#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dictcode/entropy.hpp"
#include "dictcode/rng.hpp"
#include "helpers.hpp"

using namespace dictcode;

TEST_CASE("binary entropy: endpoints, midpoint and a frozen interior value") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.11) == doctest::Approx(0.499915958164528).epsilon(1e-14));
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-14));
  // symmetry H(x) = H(1-x)
  CHECK(binary_entropy(0.11) == doctest::Approx(binary_entropy(0.89)).epsilon(1e-14));
  CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("distribution entropy agrees with the direct oracle") {
  const Distribution uniform2 = Distribution::uniform(2, 2.0);
  CHECK(entropy(uniform2) == doctest::Approx(1.0).epsilon(1e-12));

  // entropy of a uniform distribution over N symbols in base N is 1
  for (int n : {2, 3, 5, 7, 16}) {
    const Distribution u = Distribution::uniform(n, static_cast<double>(n));
    CHECK(entropy(u) == doctest::Approx(1.0).epsilon(1e-12));
  }

  const std::array<double, 4> p{0.4, 0.3, 0.2, 0.1};
  Eigen::ArrayXd arr(4);
  for (int i = 0; i < 4; ++i) arr[i] = p[static_cast<std::size_t>(i)];
  const Distribution d(arr, 2.0);
  CHECK(entropy(d) == doctest::Approx(testutil::entropy_oracle(p, 2.0)).epsilon(1e-13));

  Eigen::ArrayXd bad(2);
  bad << 0.5, 0.6;
  CHECK_THROWS_AS(Distribution(bad, 2.0), std::invalid_argument);
  Eigen::ArrayXd ok(2);
  ok << 0.5, 0.5;
  CHECK_THROWS_AS(Distribution(ok, 1.5), std::invalid_argument);
}

TEST_CASE("joint entropies: functional dependence and independence") {
  // Y = X, uniform binary: H(Y|X)=0, H(X|Y)=0, H(X,Y)=1
  Eigen::MatrixXd identity(2, 2);
  identity << 1.0, 0.0, 0.0, 1.0;
  const auto dependent = JointDistribution::from_input_and_channel(
      Distribution::uniform(2, 2.0), identity);
  const EntropySet dep = joint_conditional_entropies(dependent);
  CHECK(dep.hy_given_x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(dep.hx_given_y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(dep.hxy == doctest::Approx(1.0).epsilon(1e-12));

  // X, Y independent uniform binary: H(Y|X)=1, H(X|Y)=1, H(X,Y)=2
  Eigen::MatrixXd flat(2, 2);
  flat << 0.5, 0.5, 0.5, 0.5;
  const auto independent = JointDistribution::from_input_and_channel(
      Distribution::uniform(2, 2.0), flat);
  const EntropySet ind = joint_conditional_entropies(independent);
  CHECK(ind.hy_given_x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ind.hx_given_y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ind.hxy == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("asymmetric binary channel: H(Y|X) is the average of the two rows") {
  const double p = 0.1;
  const double delta = 0.05;
  Eigen::MatrixXd channel(2, 2);
  channel << 1.0 - p, p, p + delta, 1.0 - p - delta;
  const auto joint = JointDistribution::from_input_and_channel(
      Distribution::uniform(2, 2.0), channel);
  const EntropySet h = joint_conditional_entropies(joint);
  CHECK(h.hy_given_x ==
        doctest::Approx((binary_entropy(p) + binary_entropy(p + delta)) / 2.0).epsilon(1e-12));
}

TEST_CASE("additivity identities hold on random joints") {
  for (int trial = 0; trial < 100; ++trial) {
    auto rng = stream_rng(9000, static_cast<std::uint64_t>(trial));
    const int rows = 2 + static_cast<int>(uniform_below(rng, 5));
    const int cols = 2 + static_cast<int>(uniform_below(rng, 5));
    Eigen::MatrixXd pxy(rows, cols);
    double total = 0.0;
    for (int x = 0; x < rows; ++x)
      for (int y = 0; y < cols; ++y) {
        pxy(x, y) = 0.01 + uniform_double(rng);
        total += pxy(x, y);
      }
    pxy /= total;
    const JointDistribution joint(pxy, 2.0);
    const EntropySet h = joint_conditional_entropies(joint);
    CHECK(h.hxy == doctest::Approx(h.hx + h.hy_given_x).epsilon(1e-9));
    CHECK(h.hxy == doctest::Approx(h.hy + h.hx_given_y).epsilon(1e-9));
    CHECK(h.hy_given_x >= -1e-12);
    CHECK(h.hx_given_y >= -1e-12);
  }
}

TEST_CASE("binomial upper bound: frozen anchors and dominance") {
  CHECK(stirling_binomial_bound(10, 5) >= 252.0);
  CHECK(stirling_binomial_bound(7, 1) >= 7.0);
  CHECK(stirling_binomial_bound(20, 10) >= 184756.0);
  CHECK(stirling_binomial_bound(10, 5) == doctest::Approx(111340.82369368248).epsilon(1e-12));

  for (int n = 2; n <= 30; ++n)
    for (int k = 1; k < n; ++k) {
      const double exact = static_cast<double>(testutil::binomial_oracle(n, k).convert_to<long long>());
      CHECK(stirling_binomial_bound(n, k) >= exact);
    }
  CHECK_THROWS_AS(stirling_binomial_bound(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(stirling_binomial_bound(10, 10), std::invalid_argument);
}

TEST_CASE("asymmetric rate threshold and the rate grid") {
  // delta = 0, p = 0: threshold collapses and the rate is exactly 1
  CHECK(asymmetric_alpha0(0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-15));

  const std::vector<double> grid{0.08, 0.09};
  const auto curve = rate_curve(0.05, grid);
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].rate == doctest::Approx(0.03857850381254835).epsilon(1e-12));
  CHECK(curve[1].rate == doctest::Approx(-0.022512749664148846).epsilon(1e-12));
  CHECK(curve[0].p == 0.08);
  CHECK(curve[0].delta == 0.05);

  CHECK_THROWS_AS(asymmetric_alpha0(0.9, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(asymmetric_alpha0(-0.1, 0.0), std::invalid_argument);
}
