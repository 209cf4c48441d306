#pragma once

#include <cstdint>
#include <optional>

#include "dictcode/channel.hpp"
#include "dictcode/core.hpp"

namespace dictcode {

/// Result of the greedy distance-d construction together with the size floor
/// ceil(#D / ball_volume(n, d-1, N)) that any maximal construction satisfies.
struct GVConstructionReport {
  Code code;
  int d;
  bigint guarantee;
  std::size_t achieved_size;
};

/// Scans the dictionary in insertion order and admits a word exactly when its
/// distance to every admitted word is at least d.  The admitted set is maximal:
/// every rejected word sits within d-1 of some admitted word.
GVConstructionReport greedy_gv_construct(const Dictionary& dict, int d);

enum class DecodeFailure : std::uint8_t { distance_tie, ambiguous_completion };

/// Tagged decode result: either a codeword or a named failure.
class DecodeOutcome {
 public:
  static DecodeOutcome decoded(Word w) { return DecodeOutcome(std::move(w)); }
  static DecodeOutcome failed(DecodeFailure f) { return DecodeOutcome(f); }

  bool ok() const { return word_.has_value(); }
  const Word& word() const { return *word_; }
  DecodeFailure failure() const { return failure_; }
  const char* reason() const;

 private:
  explicit DecodeOutcome(Word w) : word_(std::move(w)), failure_{} {}
  explicit DecodeOutcome(DecodeFailure f) : failure_(f) {}
  std::optional<Word> word_;
  DecodeFailure failure_;
};

/// Erasure-then-distance decoder.  Stage 1 punctures every codeword at the
/// erased positions of y and collects the set of distinct punctured words at
/// minimum distance from the punctured y; anything but a singleton is a
/// distance_tie.  Stage 2 demands a unique codeword completing that punctured
/// word; anything else is an ambiguous_completion.  If x was sent and
/// 2 * substitutions + erasures <= d - 1, the outcome is x.
///
/// Requires min_distance(code) >= d for the guarantee; a fully erased y
/// decodes only when the code has a single word and is a distance_tie otherwise.
DecodeOutcome two_stage_decode(const Code& code, int d, const ReceivedWord& y);

/// Stand-in for the full binary word space {0,1}^n when materializing it is
/// pointless; pipelines over it report statistics without constructing a code.
struct FullSpaceDictionary {
  int n;
};

/// End-to-end report: channel statistics, matched distance budget, construction
/// results and the rate pair (achieved vs alpha - H(p_eff)).
struct GvPipelineReport {
  int n = 0;
  bigint dict_size;
  bool virtual_dict = false;
  ChannelStats stats{};
  std::int64_t d = 0;
  double alpha = 0.0;               // log2(#D) / n
  bool feasible = false;            // d <= n
  bool hypothesis_ok = false;       // p_eff < 1/2
  bigint guarantee;                 // valid when feasible
  std::optional<GVConstructionReport> construction;
  std::optional<double> achieved_rate;  // log2(#C) / n when constructed
  std::optional<double> target_rate;    // alpha - H(p_eff) when p_eff <= 1
};

/// Derives the distance budget d = t + 1 from the profile, runs the greedy
/// construction when d <= n, and reports both rates.  p_eff >= 1/2 is flagged
/// (the rate guarantee is void) but does not stop the construction.
GvPipelineReport gv_rate_pipeline(const Dictionary& dict, const NoiseProfile& profile,
                                  double eps);

/// Statistics-only variant over the implicit full space {0,1}^n.
GvPipelineReport gv_rate_pipeline(const FullSpaceDictionary& dict, const NoiseProfile& profile,
                                  double eps);

}  // namespace dictcode
