#include "dictcode/conflict.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "dictcode/errors.hpp"
#include "dictcode/rng.hpp"

namespace dictcode {

namespace {

constexpr double kRowSumTolerance = 1e-12;
constexpr std::size_t kErrorCellCap = 10'000'000;
constexpr std::uint64_t kEnumerationCap = std::uint64_t(1) << 24;

}  // namespace

DMC::DMC(Eigen::MatrixXd transition) : t_(std::move(transition)) {
  if (t_.rows() < 1 || t_.cols() < 1)
    throw std::invalid_argument("channel needs at least one input and one output");
  if ((t_.array() < 0.0).any())
    throw validation_error("channel probabilities must be nonnegative");
  for (Eigen::Index x = 0; x < t_.rows(); ++x) {
    const double sum = t_.row(x).sum();
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      char msg[96];
      std::snprintf(msg, sizeof msg, "channel row %lld sums to %.6f; expected 1",
                    static_cast<long long>(x + 1), sum);
      throw validation_error(msg);
    }
  }
}

bool ProbableSetFamily::probable_contains(std::int32_t x, std::int32_t y) const {
  const auto& row = probable[static_cast<std::size_t>(x)];
  return std::binary_search(row.begin(), row.end(), y);
}

ProbableSetFamily build_probable_sets(const DMC& channel, double eps,
                                      ProbableSetStrategy strategy) {
  if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("eps must lie in (0, 1)");
  const int nx = channel.input_size();
  const int ny = channel.output_size();

  ProbableSetFamily family;
  family.eps = eps;
  family.input_size = nx;
  family.output_size = ny;
  family.probable.resize(static_cast<std::size_t>(nx));
  family.conflict.resize(static_cast<std::size_t>(ny));

  std::vector<std::int32_t> order(static_cast<std::size_t>(ny));
  for (int x = 0; x < nx; ++x) {
    auto& row = family.probable[static_cast<std::size_t>(x)];
    if (strategy == ProbableSetStrategy::full_row) {
      row.resize(static_cast<std::size_t>(ny));
      std::iota(row.begin(), row.end(), 0);
    } else {
      // Most probable outputs first; ties prefer the lower output index.
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        return channel.p(x, a) > channel.p(x, b);
      });
      long double mass = 0.0L;
      for (std::int32_t y : order) {
        row.push_back(y);
        mass += channel.p(x, y);
        if (mass >= 1.0L - static_cast<long double>(eps)) break;
      }
      std::sort(row.begin(), row.end());
    }
    for (std::int32_t y : row)
      family.conflict[static_cast<std::size_t>(y)].push_back(x);
  }

  for (const auto& row : family.probable)
    family.d_l = std::max(family.d_l, static_cast<int>(row.size()));
  for (const auto& col : family.conflict)
    family.d_r = std::max(family.d_r, static_cast<int>(col.size()));
  return family;
}

std::vector<std::int32_t> greedy_disjoint_code(const ProbableSetFamily& family, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("code size must be at least 1");
  using boost::multiprecision::cpp_int;
  const cpp_int budget = cpp_int(m) * family.d_l * family.d_r;
  if (budget >= family.input_size) {
    char msg[128];
    std::snprintf(msg, sizeof msg,
                  "requested size %lld needs m * d_l * d_r < %d inputs (d_l * d_r = %lld)",
                  static_cast<long long>(m), family.input_size,
                  static_cast<long long>(family.d_l) * family.d_r);
    throw capacity_error(msg, static_cast<long long>(family.d_l) * family.d_r);
  }

  std::vector<char> alive(static_cast<std::size_t>(family.input_size), 1);
  std::vector<std::int32_t> code;
  code.reserve(static_cast<std::size_t>(m));
  for (std::int32_t x = 0; x < family.input_size && std::cmp_less(code.size(), m); ++x) {
    if (!alive[static_cast<std::size_t>(x)]) continue;
    code.push_back(x);
    // Discard every input sharing an output with the pick (the pick included).
    for (std::int32_t y : family.probable[static_cast<std::size_t>(x)])
      for (std::int32_t other : family.conflict[static_cast<std::size_t>(y)])
        alive[static_cast<std::size_t>(other)] = 0;
  }
  if (std::cmp_less(code.size(), m))
    throw std::logic_error("packing bound violated by the greedy scan");
  return code;
}

namespace {

void check_code_ids(std::span<const std::int32_t> code, int input_size) {
  if (code.empty()) throw std::invalid_argument("code must be nonempty");
  std::vector<char> seen(static_cast<std::size_t>(input_size), 0);
  for (std::int32_t x : code) {
    if (x < 0 || x >= input_size) throw std::invalid_argument("codeword outside the input set");
    if (seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("duplicate codeword");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

}  // namespace

std::int32_t conflict_decode(const ProbableSetFamily& family,
                             std::span<const std::int32_t> code, std::int32_t y) {
  check_code_ids(code, family.input_size);
  if (y < 0 || y >= family.output_size)
    throw std::invalid_argument("output outside the output set");
  std::int32_t candidate = -1;
  int hits = 0;
  for (std::int32_t x : code) {
    if (family.probable_contains(x, y)) {
      ++hits;
      candidate = x;
    }
  }
  return hits == 1 ? candidate : code[0];
}

std::vector<std::int32_t> conflict_decode_table(const ProbableSetFamily& family,
                                                std::span<const std::int32_t> code) {
  check_code_ids(code, family.input_size);
  std::vector<std::int32_t> position(static_cast<std::size_t>(family.input_size), -1);
  for (std::size_t j = 0; j < code.size(); ++j)
    position[static_cast<std::size_t>(code[j])] = static_cast<std::int32_t>(j);

  std::vector<std::int32_t> table(static_cast<std::size_t>(family.output_size), 0);
  for (std::int32_t y = 0; y < family.output_size; ++y) {
    std::int32_t candidate = -1;
    int hits = 0;
    for (std::int32_t x : family.conflict[static_cast<std::size_t>(y)]) {
      const std::int32_t j = position[static_cast<std::size_t>(x)];
      if (j >= 0) {
        ++hits;
        candidate = j;
      }
    }
    table[static_cast<std::size_t>(y)] = hits == 1 ? candidate : 0;
  }
  return table;
}

ExactErrorReport exact_error_probability(const DMC& channel, const ProbableSetFamily& family,
                                         std::span<const std::int32_t> code) {
  if (channel.input_size() != family.input_size || channel.output_size() != family.output_size)
    throw std::invalid_argument("channel and family dimensions do not match");
  const std::size_t cells = static_cast<std::size_t>(channel.input_size()) *
                            static_cast<std::size_t>(channel.output_size());
  if (cells > kErrorCellCap)
    throw resource_error("exact error accounting is capped at 10^7 channel cells");

  const auto table = conflict_decode_table(family, code);
  ExactErrorReport report;
  report.per_word.resize(code.size());
  for (std::size_t j = 0; j < code.size(); ++j) {
    long double wrong = 0.0L;
    for (std::int32_t y = 0; y < family.output_size; ++y)
      if (table[static_cast<std::size_t>(y)] != static_cast<std::int32_t>(j))
        wrong += channel.p(code[j], y);
    report.per_word[j] = static_cast<double>(wrong);
    report.max_error = std::max(report.max_error, report.per_word[j]);
  }
  return report;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t value = 1;
  for (int i = 0; i < exp; ++i) {
    if (value > kEnumerationCap) return kEnumerationCap + 1;
    value *= base;
  }
  return value;
}

/// Per-symbol log table in the requested base; zero probability maps to -inf.
Eigen::ArrayXd log_table(const Eigen::ArrayXd& p, double ln_base) {
  Eigen::ArrayXd out(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i)
    out[i] = p[i] > 0.0 ? std::log(p[i]) / ln_base : -std::numeric_limits<double>::infinity();
  return out;
}

struct Band {
  double lo, hi;
  bool contains(double v) const { return v >= lo && v <= hi; }
};

Band band_for(double h, double eps, int n) { return {-n * (h + eps), -n * (h - eps)}; }

}  // namespace

std::vector<std::uint8_t> id_digits(std::uint32_t id, int n, int alphabet) {
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(id % alphabet);
    id /= static_cast<std::uint32_t>(alphabet);
  }
  return digits;
}

std::optional<std::size_t> TypicalSets::a1_position(std::uint32_t x) const {
  const auto it = std::lower_bound(a1.begin(), a1.end(), x);
  if (it == a1.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - a1.begin());
}

std::optional<std::size_t> TypicalSets::a2_position(std::uint32_t y) const {
  const auto it = std::lower_bound(a2.begin(), a2.end(), y);
  if (it == a2.end() || *it != y) return std::nullopt;
  return static_cast<std::size_t>(it - a2.begin());
}

std::span<const std::uint32_t> TypicalSets::probable_row(std::size_t a1_pos) const {
  return {d_list.data() + d_offset[a1_pos], d_offset[a1_pos + 1] - d_offset[a1_pos]};
}

TypicalSets build_typical_sets(const Distribution& px, const DMC& per_symbol, int n,
                               double eps) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
  if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("eps must lie in (0, 1)");
  if (px.size() != per_symbol.input_size())
    throw std::invalid_argument("input distribution does not match the channel");

  const int nx = per_symbol.input_size();
  const int ny = per_symbol.output_size();
  const std::uint64_t input_words = checked_pow(static_cast<std::uint64_t>(nx), n);
  const std::uint64_t output_words = checked_pow(static_cast<std::uint64_t>(ny), n);
  if (input_words > kEnumerationCap || output_words > kEnumerationCap ||
      input_words + output_words > kEnumerationCap)
    throw resource_error("typicality enumeration is capped at 2^24 words");

  TypicalSets ts;
  ts.n = n;
  ts.eps = eps;
  ts.input_alphabet = nx;
  ts.output_alphabet = ny;
  ts.base = px.base();
  const double ln_base = std::log(ts.base);

  const Eigen::ArrayXd in_p = px.probabilities();
  const Eigen::ArrayXd out_p = (per_symbol.matrix().transpose() * in_p.matrix()).array();
  const Eigen::MatrixXd joint_p = in_p.matrix().asDiagonal() * per_symbol.matrix();

  ts.symbol_entropies = joint_conditional_entropies(JointDistribution(joint_p, ts.base));

  // One shared log table per band keeps threshold comparisons consistent with
  // the entropies they are compared against.
  const Eigen::ArrayXd lx = log_table(in_p, ln_base);
  const Eigen::ArrayXd ly = log_table(out_p, ln_base);
  Eigen::MatrixXd lj(nx, ny);
  for (int a = 0; a < nx; ++a)
    for (int bsym = 0; bsym < ny; ++bsym)
      lj(a, bsym) = joint_p(a, bsym) > 0.0 ? std::log(joint_p(a, bsym)) / ln_base
                                           : -std::numeric_limits<double>::infinity();

  const Band band1 = band_for(ts.symbol_entropies.hx, eps, n);
  const Band band2 = band_for(ts.symbol_entropies.hy, eps, n);
  const Band band3 = band_for(ts.symbol_entropies.hxy, eps, n);

  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n));
  const auto enumerate_band = [&](std::uint64_t count, int alphabet, const Eigen::ArrayXd& table,
                                  const Band& band, std::vector<std::uint32_t>& out) {
    for (std::uint64_t id = 0; id < count; ++id) {
      std::uint64_t rest = id;
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        sum += table[static_cast<Eigen::Index>(rest % static_cast<std::uint64_t>(alphabet))];
        rest /= static_cast<std::uint64_t>(alphabet);
      }
      if (band.contains(sum)) out.push_back(static_cast<std::uint32_t>(id));
    }
  };
  enumerate_band(input_words, nx, lx, band1, ts.a1);
  enumerate_band(output_words, ny, ly, band2, ts.a2);

  // Digit matrix for the typical outputs (bounded by the enumeration cap).
  std::vector<std::uint8_t> a2_digits(ts.a2.size() * static_cast<std::size_t>(n));
  for (std::size_t yi = 0; yi < ts.a2.size(); ++yi) {
    const auto d = id_digits(ts.a2[yi], n, ny);
    std::copy(d.begin(), d.end(), a2_digits.begin() + static_cast<std::ptrdiff_t>(yi * static_cast<std::size_t>(n)));
  }

  ts.d_offset.reserve(ts.a1.size() + 1);
  ts.d_offset.push_back(0);
  ts.conditional_mass.reserve(ts.a1.size());
  long double pair_mass_total = 0.0L;
  for (std::uint32_t x : ts.a1) {
    const auto xd = id_digits(x, n, nx);
    double x_prob = 1.0;
    for (int i = 0; i < n; ++i) x_prob *= in_p[xd[static_cast<std::size_t>(i)]];
    long double mass = 0.0L;
    for (std::size_t yi = 0; yi < ts.a2.size(); ++yi) {
      const std::uint8_t* yd = &a2_digits[yi * static_cast<std::size_t>(n)];
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += lj(xd[static_cast<std::size_t>(i)], yd[i]);
      if (!band3.contains(sum)) continue;
      ts.d_list.push_back(ts.a2[yi]);
      double cond = 1.0;
      for (int i = 0; i < n; ++i) cond *= per_symbol.p(xd[static_cast<std::size_t>(i)], yd[i]);
      mass += cond;
    }
    ts.d_offset.push_back(ts.d_list.size());
    ts.conditional_mass.push_back(static_cast<double>(mass));
    pair_mass_total += mass * static_cast<long double>(x_prob);
    if (mass >= 1.0L - static_cast<long double>(eps)) ts.b.push_back(x);
  }
  ts.typical_mass = static_cast<double>(pair_mass_total);
  return ts;
}

ConflictRateReport conflict_rate_pipeline(const Distribution& px, const DMC& per_symbol, int n,
                                          double eps, double alpha, SubsetSelector selector,
                                          std::uint64_t seed) {
  TypicalSets ts = build_typical_sets(px, per_symbol, n, eps);
  if (alpha <= 0.0 || alpha > ts.symbol_entropies.hx + 1e-9)
    throw std::invalid_argument("alpha must lie in (0, H(X)]");

  ConflictRateReport report;
  report.n = n;
  report.eps = eps;
  report.alpha = alpha;
  report.base = ts.base;
  report.symbol_entropies = ts.symbol_entropies;
  report.a1_size = ts.a1.size();
  report.a2_size = ts.a2.size();
  report.b_size = ts.b.size();
  report.typical_mass = ts.typical_mass;
  report.target_rate =
      alpha - ts.symbol_entropies.hy_given_x - ts.symbol_entropies.hx_given_y - 7.0 * eps;
  report.d_l_bound = std::pow(ts.base, n * (ts.symbol_entropies.hy_given_x + 2.0 * eps));
  report.d_r_bound = std::pow(ts.base, n * (ts.symbol_entropies.hx_given_y + 2.0 * eps));

  // Dictionary target ceil(base^{n (alpha - 2 eps)}); the tiny slack absorbs
  // float rounding in the exponent so integer powers stay exact.
  const long double raw = std::pow(static_cast<long double>(ts.base),
                                   static_cast<long double>(n) * (alpha - 2.0 * eps));
  report.dict_target =
      static_cast<std::uint64_t>(std::max(1.0L, std::ceil(raw - 1e-9L)));
  report.shortfall = ts.b.size() < report.dict_target;

  if (selector == SubsetSelector::canonical_prefix) {
    const std::size_t take = std::min<std::size_t>(report.dict_target, ts.b.size());
    report.dict.assign(ts.b.begin(), ts.b.begin() + static_cast<std::ptrdiff_t>(take));
  } else {
    std::vector<std::uint32_t> pool = ts.b;
    auto rng = stream_rng(seed, 0x64696374u);
    for (std::size_t i = pool.size(); i > 1; --i)
      std::swap(pool[i - 1], pool[uniform_below(rng, i)]);
    const std::size_t take = std::min<std::size_t>(report.dict_target, pool.size());
    pool.resize(take);
    std::sort(pool.begin(), pool.end());
    report.dict = std::move(pool);
  }
  report.n0 = report.dict.size();

  // Probable-set family over the dictionary, outputs indexed densely by their
  // position in the typical output set.
  ProbableSetFamily family;
  family.eps = eps;
  family.input_size = static_cast<int>(report.n0);
  family.output_size = static_cast<int>(ts.a2.size());
  family.probable.resize(report.n0);
  family.conflict.resize(ts.a2.size());
  for (std::size_t i = 0; i < report.n0; ++i) {
    const auto pos = ts.a1_position(report.dict[i]);
    const auto row = ts.probable_row(*pos);
    auto& dense = family.probable[i];
    dense.reserve(row.size());
    for (std::uint32_t y : row)
      dense.push_back(static_cast<std::int32_t>(*ts.a2_position(y)));
    for (std::int32_t y : dense)
      family.conflict[static_cast<std::size_t>(y)].push_back(static_cast<std::int32_t>(i));
  }
  for (const auto& row : family.probable)
    family.d_l = std::max(family.d_l, static_cast<int>(row.size()));
  for (const auto& col : family.conflict)
    family.d_r = std::max(family.d_r, static_cast<int>(col.size()));
  report.d_l = family.d_l;
  report.d_r = family.d_r;

  const std::uint64_t degree_product =
      static_cast<std::uint64_t>(family.d_l) * static_cast<std::uint64_t>(family.d_r);
  report.m = (report.n0 > 0 && degree_product > 0)
                 ? (static_cast<std::uint64_t>(report.n0) - 1) / degree_product
                 : 0;

  if (report.m >= 1) {
    std::vector<std::int32_t> picks =
        greedy_disjoint_code(family, static_cast<std::int64_t>(report.m));
    report.code_ids.reserve(picks.size());
    for (std::int32_t p : picks)
      report.code_ids.push_back(report.dict[static_cast<std::size_t>(p)]);

    const auto table = conflict_decode_table(
        family, std::span<const std::int32_t>(picks.data(), picks.size()));
    std::vector<long double> correct(picks.size(), 0.0L);
    for (std::size_t yi = 0; yi < ts.a2.size(); ++yi) {
      const std::int32_t j = table[yi];
      const auto xd = id_digits(report.code_ids[static_cast<std::size_t>(j)], n,
                                ts.input_alphabet);
      const auto yd = id_digits(ts.a2[yi], n, ts.output_alphabet);
      double cond = 1.0;
      for (int i = 0; i < n; ++i)
        cond *= per_symbol.p(xd[static_cast<std::size_t>(i)], yd[static_cast<std::size_t>(i)]);
      correct[static_cast<std::size_t>(j)] += cond;
    }
    report.per_word_error.resize(picks.size());
    for (std::size_t j = 0; j < picks.size(); ++j) {
      report.per_word_error[j] = static_cast<double>(1.0L - correct[j]);
      report.max_error = std::max(report.max_error, report.per_word_error[j]);
    }
    report.achieved_rate =
        std::log(static_cast<double>(report.m)) / (n * std::log(ts.base));
  }
  return report;
}

}  // namespace dictcode
