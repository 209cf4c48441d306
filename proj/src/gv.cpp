#include "dictcode/gv.hpp"

#include <cmath>
#include <stdexcept>

#include "dictcode/entropy.hpp"
#include "dictcode/errors.hpp"

namespace dictcode {

namespace {

constexpr std::size_t kGreedyCap = std::size_t(1) << 22;

bigint ceil_div(const bigint& a, const bigint& b) { return (a + b - 1) / b; }

}  // namespace

GVConstructionReport greedy_gv_construct(const Dictionary& dict, int d) {
  if (dict.size() == 0) throw std::invalid_argument("construction needs a nonempty dictionary");
  if (d < 1 || d > dict.n()) throw std::invalid_argument("need 1 <= d <= n");
  if (dict.size() > kGreedyCap)
    throw resource_error("greedy construction is capped at 2^22 dictionary words");

  Code code(dict.n(), dict.alphabet());
  for (const Word& w : dict.words()) {
    bool admit = true;
    for (const Word& a : code.words()) {
      if (hamming_distance(w, a) < d) {
        admit = false;
        break;
      }
    }
    if (admit) code.add(w);
  }

  GVConstructionReport report{std::move(code), d,
                              ceil_div(bigint(dict.size()),
                                       ball_volume(dict.n(), d - 1, dict.alphabet().size())),
                              0};
  report.achieved_size = report.code.size();
  return report;
}

const char* DecodeOutcome::reason() const {
  if (ok()) return "decoded";
  switch (failure_) {
    case DecodeFailure::distance_tie: return "distance_tie";
    case DecodeFailure::ambiguous_completion: return "ambiguous_completion";
  }
  return "unknown";
}

DecodeOutcome two_stage_decode(const Code& code, int d, const ReceivedWord& y) {
  const int n = code.n();
  if (code.size() == 0) throw std::invalid_argument("decoding needs a nonempty code");
  if (y.length() != n) throw std::invalid_argument("received word length does not match");
  if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");

  const auto erased = y.erased_positions();
  if (static_cast<int>(erased.size()) == n) {
    // Every punctured word is empty; nothing distinguishes the codewords.
    if (code.size() == 1) return DecodeOutcome::decoded(code.words().front());
    return DecodeOutcome::failed(DecodeFailure::distance_tie);
  }
  const Word y_red = puncture_received(y, erased);

  // Stage 1: the set of distinct punctured codewords at minimum distance.
  std::vector<Word> reduced;
  reduced.reserve(code.size());
  for (const Word& w : code.words()) reduced.push_back(puncture(w, erased));

  int best = y_red.length() + 1;
  std::size_t best_index = 0;
  bool distinct_tie = false;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const int dist = hamming_distance(reduced[i], y_red);
    if (dist < best) {
      best = dist;
      best_index = i;
      distinct_tie = false;
    } else if (dist == best && reduced[i] != reduced[best_index]) {
      distinct_tie = true;
    }
  }
  if (distinct_tie) return DecodeOutcome::failed(DecodeFailure::distance_tie);

  // Stage 2: the punctured winner must extend to exactly one codeword.
  std::size_t completions = 0, winner = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i] == reduced[best_index]) {
      ++completions;
      winner = i;
    }
  }
  if (completions != 1) return DecodeOutcome::failed(DecodeFailure::ambiguous_completion);
  return DecodeOutcome::decoded(code.words()[winner]);
}

namespace {

GvPipelineReport pipeline_common(int n, bigint dict_size, bool virtual_dict, double alpha,
                                 const NoiseProfile& profile, double eps) {
  if (profile.n() != n) throw std::invalid_argument("profile length does not match");
  GvPipelineReport report;
  report.n = n;
  report.dict_size = std::move(dict_size);
  report.virtual_dict = virtual_dict;
  report.alpha = alpha;
  report.stats = channel_stats(profile, eps);
  report.d = report.stats.t + 1;
  report.feasible = report.d <= n;
  report.hypothesis_ok = report.stats.p_eff < 0.5;
  if (report.feasible)
    report.guarantee = ceil_div(report.dict_size, ball_volume(n, static_cast<int>(report.d) - 1, 2));
  if (report.stats.p_eff <= 1.0)
    report.target_rate = alpha - binary_entropy(report.stats.p_eff);
  return report;
}

}  // namespace

GvPipelineReport gv_rate_pipeline(const Dictionary& dict, const NoiseProfile& profile,
                                  double eps) {
  if (dict.size() == 0) throw std::invalid_argument("pipeline needs a nonempty dictionary");
  if (dict.alphabet().size() != 2)
    throw std::invalid_argument("the rate pipeline is defined over binary dictionaries");
  const double alpha = std::log2(static_cast<double>(dict.size())) / dict.n();
  GvPipelineReport report =
      pipeline_common(dict.n(), bigint(dict.size()), false, alpha, profile, eps);
  if (report.feasible) {
    report.construction = greedy_gv_construct(dict, static_cast<int>(report.d));
    report.achieved_rate =
        std::log2(static_cast<double>(report.construction->achieved_size)) / dict.n();
  }
  return report;
}

GvPipelineReport gv_rate_pipeline(const FullSpaceDictionary& dict, const NoiseProfile& profile,
                                  double eps) {
  if (dict.n < 1) throw std::invalid_argument("word length must be positive");
  return pipeline_common(dict.n, bigint(1) << dict.n, true, 1.0, profile, eps);
}

}  // namespace dictcode
