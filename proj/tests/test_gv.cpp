#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dictcode/entropy.hpp"
#include "dictcode/gv.hpp"
#include "dictcode/rng.hpp"
#include "helpers.hpp"

using namespace dictcode;
using testutil::word_from;

namespace {

Dictionary full_binary_space(int n) {
  Dictionary dict(n, Alphabet::binary());
  for (std::uint32_t id = 0; id < (1u << n); ++id) {
    std::vector<std::uint8_t> symbols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      symbols[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((id >> (n - 1 - i)) & 1u);
    dict.add(Word(std::move(symbols)));
  }
  return dict;
}

bigint ceil_div_oracle(const bigint& a, const bigint& b) { return (a + b - 1) / b; }

}  // namespace

TEST_CASE("greedy construction follows file order: hand-traced admissions") {
  Dictionary dict(3, Alphabet::binary());
  dict.add(word_from("000"));
  dict.add(word_from("001"));
  dict.add(word_from("011"));
  dict.add(word_from("111"));
  const GVConstructionReport report = greedy_gv_construct(dict, 3);
  REQUIRE(report.achieved_size == 2);
  CHECK(report.code.words()[0] == word_from("000"));
  CHECK(report.code.words()[1] == word_from("111"));
  CHECK(report.d == 3);
}

TEST_CASE("distance one admits the whole dictionary") {
  const Dictionary dict = testutil::random_binary_dictionary(8, 60, 11);
  const GVConstructionReport report = greedy_gv_construct(dict, 1);
  CHECK(report.achieved_size == dict.size());
  CHECK(report.code.words() == dict.words());
}

TEST_CASE("full 7-bit space at distance 3 meets the size floor") {
  const Dictionary dict = full_binary_space(7);
  const GVConstructionReport report = greedy_gv_construct(dict, 3);
  CHECK(report.guarantee == 5);  // ceil(128 / 29)
  CHECK(report.achieved_size >= 5);
  CHECK(min_distance(report.code) >= 3);

  // maximality: every rejected word is within d-1 of an admitted word
  for (const Word& w : dict.words()) {
    if (report.code.contains(w)) continue;
    bool covered = false;
    for (const Word& c : report.code.words())
      if (hamming_distance(w, c) <= 2) {
        covered = true;
        break;
      }
    CHECK(covered);
  }
}

TEST_CASE("size floor holds over random dictionaries and distances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 10 + static_cast<int>(seed % 5);
    const Dictionary dict = testutil::random_binary_dictionary(n, 400, 300 + seed);
    for (int d : {1, 3, 5}) {
      const GVConstructionReport report = greedy_gv_construct(dict, d);
      const bigint floor_size =
          ceil_div_oracle(dict.size(), testutil::ball_oracle(n, d - 1, 2));
      CHECK(bigint(report.achieved_size) >= floor_size);
      CHECK(report.guarantee == floor_size);
      if (report.achieved_size >= 2) CHECK(min_distance(report.code) >= d);
    }
  }
}

TEST_CASE("construction is deterministic") {
  const Dictionary dict = testutil::random_binary_dictionary(12, 500, 901);
  const GVConstructionReport a = greedy_gv_construct(dict, 5);
  const GVConstructionReport b = greedy_gv_construct(dict, 5);
  CHECK(a.code.words() == b.code.words());
}

TEST_CASE("decoder hand traces on the two-word code") {
  Code code(3, Alphabet::binary());
  code.add(word_from("000"));
  code.add(word_from("111"));

  SUBCASE("one erasure, no substitutions: unique completion") {
    const DecodeOutcome outcome = two_stage_decode(code, 3, testutil::received_from("0e0"));
    REQUIRE(outcome.ok());
    CHECK(outcome.word() == word_from("000"));
  }
  SUBCASE("one substitution plus one erasure: reduced distances tie") {
    const DecodeOutcome outcome = two_stage_decode(code, 3, testutil::received_from("01e"));
    REQUIRE(!outcome.ok());
    CHECK(outcome.failure() == DecodeFailure::distance_tie);
    CHECK(std::string(outcome.reason()) == "distance_tie");
  }
  SUBCASE("everything erased ties unless the code is a singleton") {
    const DecodeOutcome outcome = two_stage_decode(code, 3, testutil::received_from("eee"));
    REQUIRE(!outcome.ok());
    CHECK(outcome.failure() == DecodeFailure::distance_tie);

    Code single(3, Alphabet::binary());
    single.add(word_from("000"));
    const DecodeOutcome sole = two_stage_decode(single, 1, testutil::received_from("eee"));
    REQUIRE(sole.ok());
    CHECK(sole.word() == word_from("000"));
  }
}

TEST_CASE("stage two reports ambiguity when two codewords share the reduction") {
  Code code(2, Alphabet::binary());
  code.add(word_from("00"));
  code.add(word_from("01"));
  const DecodeOutcome outcome = two_stage_decode(code, 1, testutil::received_from("0e"));
  REQUIRE(!outcome.ok());
  CHECK(outcome.failure() == DecodeFailure::ambiguous_completion);
  CHECK(std::string(outcome.reason()) == "ambiguous_completion");
}

TEST_CASE("noise within budget always decodes to the sender (exhaustive, n = 7)") {
  const Dictionary dict = full_binary_space(7);
  const GVConstructionReport report = greedy_gv_construct(dict, 3);
  const int d = 3;
  for (const Word& sent : report.code.words()) {
    int patterns = 0;
    for (unsigned f_mask = 0; f_mask < 128; ++f_mask) {
      const int f = __builtin_popcount(f_mask);
      if (2 * f > d - 1) continue;
      for (unsigned e_mask = 0; e_mask < 128; ++e_mask) {
        if ((e_mask & f_mask) != 0) continue;
        const int e = __builtin_popcount(e_mask);
        if (2 * f + e > d - 1) continue;
        NoiseRealization w;
        w.actions.assign(7, Noise::clean);
        for (int i = 0; i < 7; ++i) {
          if (f_mask & (1u << i)) w.actions[static_cast<std::size_t>(i)] = Noise::substitute;
          if (e_mask & (1u << i)) w.actions[static_cast<std::size_t>(i)] = Noise::erase;
        }
        const DecodeOutcome outcome = two_stage_decode(report.code, d, transmit(sent, w));
        REQUIRE(outcome.ok());
        REQUIRE(outcome.word() == sent);
        ++patterns;
      }
    }
    // 2#F + #E <= 2 over 7 positions: 29 substitution-free + 7 single-flip
    CHECK(patterns == 36);
  }
}

TEST_CASE("decoded words are always code members") {
  const Dictionary dict = testutil::random_binary_dictionary(9, 120, 5150);
  const GVConstructionReport report = greedy_gv_construct(dict, 3);
  const NoiseProfile profile = NoiseProfile::uniform(9, 0.25, 0.25);
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    auto rng = stream_rng(61, trial);
    const Word& sent = report.code.words()[uniform_below(rng, report.code.words().size())];
    const ReceivedWord y = transmit(sent, sample_noise(profile, rng));
    const DecodeOutcome outcome = two_stage_decode(report.code, 3, y);
    if (outcome.ok()) CHECK(report.code.contains(outcome.word()));
  }
}

TEST_CASE("noiseless pipeline returns the dictionary at rate alpha") {
  const Dictionary dict = testutil::random_binary_dictionary(8, 100, 321);
  const GvPipelineReport report =
      gv_rate_pipeline(dict, NoiseProfile::uniform(8, 0.0, 0.0), 0.1);
  CHECK(report.d == 1);
  CHECK(report.feasible);
  CHECK(report.hypothesis_ok);
  REQUIRE(report.construction.has_value());
  CHECK(report.construction->achieved_size == dict.size());
  REQUIRE(report.achieved_rate.has_value());
  REQUIRE(report.target_rate.has_value());
  CHECK(*report.achieved_rate == doctest::Approx(report.alpha).epsilon(1e-12));
  CHECK(*report.target_rate == doctest::Approx(report.alpha).epsilon(1e-12));
}

TEST_CASE("implicit full-space pipeline reports statistics without construction") {
  const GvPipelineReport report = gv_rate_pipeline(
      FullSpaceDictionary{100}, NoiseProfile::uniform(100, 0.05, 0.0), 0.1);
  CHECK(report.virtual_dict);
  CHECK(report.dict_size == (bigint(1) << 100));
  CHECK(report.alpha == 1.0);
  CHECK(report.stats.p_eff == 0.1);
  // t = floor(100 * 0.1 * 1.2) = 12, d = 13
  CHECK(report.stats.t == 12);
  CHECK(report.d == 13);
  CHECK(report.feasible);
  CHECK(!report.construction.has_value());
  REQUIRE(report.target_rate.has_value());
  CHECK(*report.target_rate ==
        doctest::Approx(1.0 - binary_entropy(0.1)).epsilon(1e-12));
}

TEST_CASE("random-half dictionary at n = 15 beats the guarantee logarithmically") {
  const Dictionary dict = testutil::random_binary_dictionary(15, 1 << 14, 777);
  const GvPipelineReport report =
      gv_rate_pipeline(dict, NoiseProfile::uniform(15, 0.02, 0.02), 0.1);
  // mu_f = mu_e = 0.3, p_eff = 0.06, t = floor(15 * 0.06 * 1.2) = 1, d = 2
  CHECK(report.stats.t == 1);
  CHECK(report.d == 2);
  REQUIRE(report.construction.has_value());
  CHECK(bigint(report.construction->achieved_size) >= report.guarantee);
  const double log_guarantee =
      std::log2(report.guarantee.convert_to<double>());
  REQUIRE(report.achieved_rate.has_value());
  CHECK(*report.achieved_rate >= log_guarantee / 15.0);
}

TEST_CASE("infeasible budgets are flagged, not crashed") {
  SUBCASE("distance exceeding the length") {
    const GvPipelineReport report = gv_rate_pipeline(
        FullSpaceDictionary{2}, NoiseProfile::uniform(2, 0.45, 0.1), 0.5);
    // mu_f = 0.9, mu_e = 0.2, p_eff = (1.8 + 0.2) / 2 = 1;
    // t = floor(2 * 1 * (1 + 2 * 0.5)) = 4, so d = 5 > n = 2
    CHECK(report.d == 5);
    CHECK(!report.feasible);
    CHECK(!report.hypothesis_ok);
  }
  SUBCASE("noise above one half voids the rate guarantee but not construction") {
    const Dictionary dict = testutil::random_binary_dictionary(10, 50, 99);
    const GvPipelineReport report =
        gv_rate_pipeline(dict, NoiseProfile::uniform(10, 0.3, 0.0), 0.1);
    CHECK(report.stats.p_eff == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(!report.hypothesis_ok);
    if (report.feasible) CHECK(report.construction.has_value());
  }
}

TEST_CASE("decoder input validation") {
  Code code(3, Alphabet::binary());
  code.add(word_from("000"));
  CHECK_THROWS_AS(two_stage_decode(code, 1, testutil::received_from("0e")),
                  std::invalid_argument);
  Code empty(3, Alphabet::binary());
  CHECK_THROWS_AS(two_stage_decode(empty, 1, testutil::received_from("000")),
                  std::invalid_argument);
  const Dictionary dict = testutil::random_binary_dictionary(4, 5, 1);
  CHECK_THROWS_AS(greedy_gv_construct(dict, 0), std::invalid_argument);
}
