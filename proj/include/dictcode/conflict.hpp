#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dictcode/entropy.hpp"

namespace dictcode {

/// Discrete memoryless channel: a row-stochastic transition matrix whose rows are
/// inputs and columns are outputs.  Symbols are their indices.
class DMC {
 public:
  explicit DMC(Eigen::MatrixXd transition);

  int input_size() const { return static_cast<int>(t_.rows()); }
  int output_size() const { return static_cast<int>(t_.cols()); }
  double p(int x, int y) const { return t_(x, y); }
  const Eigen::MatrixXd& matrix() const { return t_; }

 private:
  Eigen::MatrixXd t_;
};

enum class ProbableSetStrategy : std::uint8_t {
  greedy_mass,  // most probable outputs first until mass >= 1 - eps
  full_row,     // every output
};

/// For each input x a set D(x) of outputs carrying conditional mass >= 1 - eps,
/// plus the exact reverse map C(y) = { x : y in D(x) } and the two degrees
/// d_l = max |D(x)| and d_r = max |C(y)|.
struct ProbableSetFamily {
  double eps = 0.0;
  int input_size = 0;
  int output_size = 0;
  std::vector<std::vector<std::int32_t>> probable;  // per input, ascending outputs
  std::vector<std::vector<std::int32_t>> conflict;  // per output, ascending inputs
  int d_l = 0;
  int d_r = 0;

  /// True when output y lies in D(x).
  bool probable_contains(std::int32_t x, std::int32_t y) const;
};

ProbableSetFamily build_probable_sets(const DMC& channel, double eps,
                                      ProbableSetStrategy strategy);

/// Picks m inputs with pairwise disjoint probable sets by scanning inputs in
/// ascending order and discarding everything that shares an output with a pick.
/// Requires m >= 1 and m * d_l * d_r < input_size; each pick discards at most
/// d_l * d_r inputs, so the scan cannot run dry.
std::vector<std::int32_t> greedy_disjoint_code(const ProbableSetFamily& family, std::int64_t m);

/// Conflict-set rule: if y lies in D(x_j) for a unique codeword x_j and no other
/// codeword appears in C(y), returns x_j; otherwise returns the fallback code[0].
std::int32_t conflict_decode(const ProbableSetFamily& family,
                             std::span<const std::int32_t> code, std::int32_t y);

/// Decoded code position (index into `code`) for every output, fallback = 0.
std::vector<std::int32_t> conflict_decode_table(const ProbableSetFamily& family,
                                                std::span<const std::int32_t> code);

struct ExactErrorReport {
  std::vector<double> per_word;
  double max_error = 0.0;
};

/// Exact per-codeword error: the summed channel mass of every output the rule
/// does not decode back to the codeword.  Capped at input*output <= 10^7 cells.
ExactErrorReport exact_error_probability(const DMC& channel, const ProbableSetFamily& family,
                                         std::span<const std::int32_t> code);

/// Product-space typicality structure over words of length n.  Words are encoded
/// as ids (big-endian digits); all sets are kept in ascending id order.  The
/// membership bands use one shared per-symbol log table, so uniform fixtures
/// land on their thresholds exactly.
struct TypicalSets {
  int n = 0;
  double eps = 0.0;
  int input_alphabet = 0;
  int output_alphabet = 0;
  double base = 0.0;  // logarithm base of every entropy and threshold
  EntropySet symbol_entropies{};

  std::vector<std::uint32_t> a1;  // typical inputs
  std::vector<std::uint32_t> a2;  // typical outputs
  // CSR rows over a1: for the i-th typical input, its probable outputs
  // (the typical outputs forming a jointly typical pair with it).
  std::vector<std::size_t> d_offset;
  std::vector<std::uint32_t> d_list;
  std::vector<double> conditional_mass;  // per a1 member: sum of p(y|x) over its row
  std::vector<std::uint32_t> b;          // a1 members with conditional_mass >= 1 - eps
  double typical_mass = 0.0;             // exact probability of the jointly typical set

  std::optional<std::size_t> a1_position(std::uint32_t x) const;
  std::optional<std::size_t> a2_position(std::uint32_t y) const;
  std::span<const std::uint32_t> probable_row(std::size_t a1_pos) const;
};

/// Enumerates the three bands (inputs, outputs, joint pairs) exactly, derives the
/// per-input probable sets and the high-mass core b.  Capped at
/// input_alphabet^n + output_alphabet^n <= 2^24 enumerated words.
TypicalSets build_typical_sets(const Distribution& px, const DMC& per_symbol, int n, double eps);

/// Digits of a word id, big-endian, length n.
std::vector<std::uint8_t> id_digits(std::uint32_t id, int n, int alphabet);

enum class SubsetSelector : std::uint8_t { canonical_prefix, seeded_random };

/// End-to-end rate experiment on the product channel: typicality structure,
/// dictionary cut from the high-mass core, disjoint packing at the largest
/// admissible size, and exact error accounting (outputs outside the typical
/// output set count as errors).
struct ConflictRateReport {
  int n = 0;
  double eps = 0.0;
  double alpha = 0.0;
  double base = 0.0;
  EntropySet symbol_entropies{};
  std::size_t a1_size = 0, a2_size = 0, b_size = 0;
  double typical_mass = 0.0;
  std::uint64_t dict_target = 0;
  bool shortfall = false;  // the core was smaller than the dictionary target
  std::vector<std::uint32_t> dict;
  std::size_t n0 = 0;  // dictionary size actually used
  int d_l = 0, d_r = 0;
  double d_l_bound = 0.0, d_r_bound = 0.0;  // base^{n (H(Y|X) + 2 eps)} and dual
  std::size_t m = 0;                        // largest integer below n0 / (d_l d_r)
  std::vector<std::uint32_t> code_ids;
  std::vector<double> per_word_error;
  double max_error = 0.0;
  std::optional<double> achieved_rate;  // log_base(m) / n when a code exists
  double target_rate = 0.0;             // alpha - H(Y|X) - H(X|Y) - 7 eps
};

ConflictRateReport conflict_rate_pipeline(const Distribution& px, const DMC& per_symbol, int n,
                                          double eps, double alpha, SubsetSelector selector,
                                          std::uint64_t seed);

}  // namespace dictcode
