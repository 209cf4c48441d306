// Command-line workbench: dictionary-constrained code construction, two-stage
// decoding, Monte Carlo error estimation, rate pipelines, and CSV emission.
//
// Exit codes: 0 success; 1 I/O or parse failure; 2 infeasible or semantically
// invalid parameters.  Every byte written to stdout or --out is a pure
// function of the invocation (timings go to stderr).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dictcode/channel.hpp"
#include "dictcode/conflict.hpp"
#include "dictcode/core.hpp"
#include "dictcode/entropy.hpp"
#include "dictcode/errors.hpp"
#include "dictcode/gv.hpp"
#include "dictcode/io.hpp"
#include "dictcode/simulate.hpp"

namespace {

using namespace dictcode;

const char* yesno(bool b) { return b ? "yes" : "no"; }

void deliver(const std::string& text, const std::optional<std::string>& out_path) {
  if (!out_path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*out_path);
  if (!out) throw parse_error(*out_path, 0, "cannot open file for writing");
  out << text;
  out.flush();
  if (!out) throw parse_error(*out_path, 0, "write failed");
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = token.size() + 1;
    }
    if (used != token.size())
      throw parse_error(flag + ": expected a comma-separated number list, got '" + text + "'");
    values.push_back(value);
  }
  if (values.empty()) throw parse_error(flag + ": empty list");
  return values;
}

std::string render_id(std::uint32_t id, int n, const Alphabet& alphabet) {
  const auto digits = id_digits(id, n, alphabet.size());
  std::string text(static_cast<std::size_t>(n), '?');
  for (int i = 0; i < n; ++i)
    text[static_cast<std::size_t>(i)] = alphabet.symbol(digits[static_cast<std::size_t>(i)]);
  return text;
}

// ---------------------------------------------------------------- construct-gv

int run_construct_gv(const std::string& dict_path, int d,
                     const std::optional<std::string>& out_path) {
  const Dictionary dict = load_dictionary(dict_path);
  const GVConstructionReport result = greedy_gv_construct(dict, d);

  std::ostringstream code_text;
  save_code(result.code, d, code_text);

  std::ostringstream report;
  report << "n=" << dict.n() << "\n";
  report << "alphabet=" << dict.alphabet().size() << "\n";
  report << "dict_size=" << dict.size() << "\n";
  report << "d=" << d << "\n";
  report << "code_size=" << result.achieved_size << "\n";
  report << "guarantee=" << result.guarantee << "\n";
  const double rate = std::log(static_cast<double>(result.achieved_size)) /
                      (dict.n() * std::log(static_cast<double>(dict.alphabet().size())));
  report << "rate=" << fixed6(rate) << "\n";

  if (out_path) {
    deliver(code_text.str(), out_path);
    std::cout << report.str();
  } else {
    std::cout << code_text.str();
    std::cerr << report.str();
  }
  return 0;
}

// ---------------------------------------------------------------------- decode

int run_decode(const std::string& code_path, const std::string& received_path,
               const std::optional<std::string>& out_path) {
  const auto [code, d] = load_code(code_path);
  const auto received = load_received(received_path, code.n());

  std::ostringstream out;
  for (const ReceivedWord& y : received) {
    const DecodeOutcome outcome = two_stage_decode(code, d, y);
    if (outcome.ok())
      out << "decoded " << to_string(outcome.word(), code.alphabet()) << "\n";
    else
      out << "error " << outcome.reason() << "\n";
  }
  deliver(out.str(), out_path);
  return 0;
}

// -------------------------------------------------------------------- simulate

int run_simulate(const std::string& code_path, const std::string& profile_path,
                 std::int64_t trials, std::uint64_t seed,
                 const std::optional<std::string>& out_path) {
  const auto [code, d] = load_code(code_path);
  const NoiseProfile profile = load_profile(profile_path);
  const SimulationReport report = simulate(code, d, profile, trials, seed);

  std::ostringstream out;
  out << "n=" << report.n << "\n";
  out << "code_size=" << report.code_size << "\n";
  out << "d=" << report.d << "\n";
  out << "trials=" << report.trials << "\n";
  out << "seed=" << report.seed << "\n";
  for (std::size_t w = 0; w < report.per_word.size(); ++w) {
    const auto& entry = report.per_word[w];
    out << "word=" << w << " symbols=" << to_string(code.words()[w], code.alphabet())
        << " errors=" << entry.errors << " estimate=" << fixed6(entry.estimate)
        << " wilson_low=" << fixed6(entry.interval.low)
        << " wilson_high=" << fixed6(entry.interval.high) << "\n";
  }
  out << "max_estimate=" << fixed6(report.max_estimate) << "\n";

  deliver(out.str(), out_path);
  std::cerr << "wall_seconds=" << fixed6(report.wall_seconds) << "\n";
  return 0;
}

// -------------------------------------------------------------------- theorem1

void format_gv_pipeline(std::ostream& out, const GvPipelineReport& report) {
  out << "n=" << report.n << "\n";
  out << "dict_size=" << report.dict_size << "\n";
  out << "virtual=" << yesno(report.virtual_dict) << "\n";
  out << "alpha=" << fixed6(report.alpha) << "\n";
  out << "mu_f=" << fixed6(report.stats.mu_f) << "\n";
  out << "mu_e=" << fixed6(report.stats.mu_e) << "\n";
  out << "p_eff=" << fixed6(report.stats.p_eff) << "\n";
  out << "eps=" << fixed6(report.stats.eps) << "\n";
  out << "t=" << report.stats.t << "\n";
  out << "d=" << report.d << "\n";
  out << "feasible=" << yesno(report.feasible) << "\n";
  out << "hypothesis_ok=" << yesno(report.hypothesis_ok) << "\n";
  if (report.feasible) out << "guarantee=" << report.guarantee << "\n";
  if (report.construction) {
    out << "code_size=" << report.construction->achieved_size << "\n";
    out << "achieved_rate=" << fixed6(*report.achieved_rate) << "\n";
  }
  if (report.target_rate) out << "target_rate=" << fixed6(*report.target_rate) << "\n";
}

int run_theorem1(const std::optional<std::string>& dict_path, std::optional<int> full_space,
                 const std::string& profile_path, double eps,
                 const std::optional<std::string>& out_path) {
  const NoiseProfile profile = load_profile(profile_path);

  GvPipelineReport report;
  if (dict_path) {
    const Dictionary dict = load_dictionary(*dict_path);
    report = gv_rate_pipeline(dict, profile, eps);
  } else {
    report = gv_rate_pipeline(FullSpaceDictionary{*full_space}, profile, eps);
  }

  std::ostringstream out;
  format_gv_pipeline(out, report);
  deliver(out.str(), out_path);

  if (!report.feasible) {
    std::cerr << "infeasible: d > n (d=" << report.d << ", n=" << report.n << ")\n";
    return 2;
  }
  if (!report.hypothesis_ok) {
    std::cerr << "infeasible: p_eff >= 1/2 (p_eff=" << fixed6(report.stats.p_eff) << ")\n";
    return 2;
  }
  return 0;
}

// -------------------------------------------------------------------- theorem3

int run_theorem3(const std::string& channel_path, int n, double eps,
                 std::optional<double> alpha, const std::optional<std::string>& px_text,
                 const std::string& selector_name, std::uint64_t seed,
                 const std::optional<std::string>& out_path) {
  const DMC channel(load_channel_matrix(channel_path));
  const int base = channel.input_size();
  Distribution px = Distribution::uniform(base, static_cast<double>(base));
  if (px_text) {
    const auto values = parse_double_list(*px_text, "--px");
    Eigen::ArrayXd p(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
      p[static_cast<Eigen::Index>(i)] = values[i];
    px = Distribution(std::move(p), static_cast<double>(base));
  }
  if (px.size() != channel.input_size())
    throw validation_error("--px length does not match the channel input alphabet");
  const double alpha_value = alpha ? *alpha : entropy(px);
  const SubsetSelector selector = selector_name == "random" ? SubsetSelector::seeded_random
                                                            : SubsetSelector::canonical_prefix;

  const ConflictRateReport report =
      conflict_rate_pipeline(px, channel, n, eps, alpha_value, selector, seed);

  const Alphabet alphabet = Alphabet::with_size(channel.input_size());
  std::ostringstream out;
  out << "n=" << report.n << "\n";
  out << "eps=" << fixed6(report.eps) << "\n";
  out << "alpha=" << fixed6(report.alpha) << "\n";
  out << "base=" << fixed6(report.base) << "\n";
  out << "h_x=" << fixed6(report.symbol_entropies.hx) << "\n";
  out << "h_y=" << fixed6(report.symbol_entropies.hy) << "\n";
  out << "h_xy=" << fixed6(report.symbol_entropies.hxy) << "\n";
  out << "h_y_given_x=" << fixed6(report.symbol_entropies.hy_given_x) << "\n";
  out << "h_x_given_y=" << fixed6(report.symbol_entropies.hx_given_y) << "\n";
  out << "a1_size=" << report.a1_size << "\n";
  out << "a2_size=" << report.a2_size << "\n";
  out << "b_size=" << report.b_size << "\n";
  out << "typical_mass=" << fixed6(report.typical_mass) << "\n";
  out << "dict_target=" << report.dict_target << "\n";
  out << "shortfall=" << yesno(report.shortfall) << "\n";
  out << "n0=" << report.n0 << "\n";
  out << "d_l=" << report.d_l << "\n";
  out << "d_r=" << report.d_r << "\n";
  out << "d_l_bound=" << fixed6(report.d_l_bound) << "\n";
  out << "d_r_bound=" << fixed6(report.d_r_bound) << "\n";
  out << "m=" << report.m << "\n";
  out << "code_size=" << report.code_ids.size() << "\n";
  if (!report.code_ids.empty()) {
    out << "code=";
    for (std::size_t i = 0; i < report.code_ids.size(); ++i) {
      if (i) out << ',';
      out << render_id(report.code_ids[i], report.n, alphabet);
    }
    out << "\n";
    out << "per_word_error=";
    for (std::size_t i = 0; i < report.per_word_error.size(); ++i) {
      if (i) out << ',';
      out << fixed6(report.per_word_error[i]);
    }
    out << "\n";
    out << "max_error=" << fixed6(report.max_error) << "\n";
  }
  if (report.achieved_rate) out << "achieved_rate=" << fixed6(*report.achieved_rate) << "\n";
  out << "target_rate=" << fixed6(report.target_rate) << "\n";

  deliver(out.str(), out_path);
  return 0;
}

// --------------------------------------------------------------------- figure1

int run_figure1(const std::string& deltas_text, double p_max, double p_step,
                const std::optional<std::string>& out_path) {
  if (p_step <= 0.0) throw validation_error("--p-step must be positive");
  if (p_max < 0.0) throw validation_error("--p-max must be nonnegative");
  const auto deltas = parse_double_list(deltas_text, "--deltas");

  const int count = static_cast<int>(std::floor(p_max / p_step + 1e-9)) + 1;
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = i * p_step;

  std::vector<RatePoint> points;
  points.reserve(deltas.size() * grid.size());
  for (double delta : deltas) {
    const auto curve = rate_curve(delta, grid);
    points.insert(points.end(), curve.begin(), curve.end());
  }

  std::ostringstream out;
  write_rate_curve_csv(points, out);
  deliver(out.str(), out_path);
  return 0;
}

// --------------------------------------------------------------- conflict-build

int run_conflict_build(const std::string& channel_path, double eps, std::optional<std::int64_t> m,
                       const std::string& strategy_name,
                       const std::optional<std::string>& out_path) {
  const DMC channel(load_channel_matrix(channel_path));
  const ProbableSetStrategy strategy = strategy_name == "full" ? ProbableSetStrategy::full_row
                                                               : ProbableSetStrategy::greedy_mass;
  const ProbableSetFamily family = build_probable_sets(channel, eps, strategy);

  const std::int64_t degree_product =
      static_cast<std::int64_t>(family.d_l) * static_cast<std::int64_t>(family.d_r);
  const std::int64_t m_max = (family.input_size - 1) / degree_product;
  const std::int64_t m_value = m ? *m : m_max;
  if (m_value < 1) {
    char msg[128];
    std::snprintf(msg, sizeof msg, "no admissible code size: d_l * d_r = %lld >= inputs = %d",
                  static_cast<long long>(degree_product), family.input_size);
    throw capacity_error(msg, degree_product);
  }

  const auto code = greedy_disjoint_code(family, m_value);
  const auto errors = exact_error_probability(channel, family, code);

  std::ostringstream out;
  out << "inputs=" << family.input_size << "\n";
  out << "outputs=" << family.output_size << "\n";
  out << "eps=" << fixed6(eps) << "\n";
  out << "strategy=" << (strategy == ProbableSetStrategy::full_row ? "full" : "greedy") << "\n";
  out << "d_l=" << family.d_l << "\n";
  out << "d_r=" << family.d_r << "\n";
  out << "m_max=" << m_max << "\n";
  out << "m=" << m_value << "\n";
  out << "code=";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out << ',';
    out << code[i];
  }
  out << "\n";
  out << "per_word_error=";
  for (std::size_t i = 0; i < errors.per_word.size(); ++i) {
    if (i) out << ',';
    out << fixed6(errors.per_word[i]);
  }
  out << "\n";
  out << "max_error=" << fixed6(errors.max_error) << "\n";

  deliver(out.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dictionary-constrained channel-coding workbench"};
  app.require_subcommand(1);
  int exit_code = 0;

  // construct-gv
  auto* gv = app.add_subcommand("construct-gv", "Greedy distance-d code from a dictionary");
  std::string gv_dict;
  int gv_d = 1;
  std::optional<std::string> gv_out;
  gv->add_option("--dict", gv_dict, "dictionary file")->required()->check(CLI::ExistingFile);
  gv->add_option("--d", gv_d, "minimum distance to enforce")->required();
  gv->add_option("--out", gv_out, "write the code file here (report then goes to stdout)");
  gv->callback([&] { exit_code = run_construct_gv(gv_dict, gv_d, gv_out); });

  // decode
  auto* dec = app.add_subcommand("decode", "Two-stage decode received words against a code");
  std::string dec_code, dec_received;
  std::optional<std::string> dec_out;
  dec->add_option("--code", dec_code, "code file")->required()->check(CLI::ExistingFile);
  dec->add_option("--received", dec_received, "received-word file (symbols 0, 1, e)")
      ->required()
      ->check(CLI::ExistingFile);
  dec->add_option("--out", dec_out, "output path (default stdout)");
  dec->callback([&] { exit_code = run_decode(dec_code, dec_received, dec_out); });

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo worst-word decoding error estimate");
  std::string sim_code, sim_profile;
  std::int64_t sim_trials = 10000;
  std::uint64_t sim_seed = 0;
  std::optional<std::string> sim_out;
  sim->add_option("--code", sim_code, "code file")->required()->check(CLI::ExistingFile);
  sim->add_option("--profile", sim_profile, "noise profile file")
      ->required()
      ->check(CLI::ExistingFile);
  sim->add_option("--trials", sim_trials, "trials per code word (default 10000)");
  sim->add_option("--seed", sim_seed, "base seed (default 0)");
  sim->add_option("--out", sim_out, "output path (default stdout)");
  sim->callback(
      [&] { exit_code = run_simulate(sim_code, sim_profile, sim_trials, sim_seed, sim_out); });

  // theorem1
  auto* t1 = app.add_subcommand(
      "theorem1", "Rate pipeline: channel stats, distance budget, greedy construction");
  std::optional<std::string> t1_dict;
  std::optional<int> t1_full;
  std::string t1_profile;
  double t1_eps = 0.0;
  std::optional<std::string> t1_out;
  auto* t1_dict_opt =
      t1->add_option("--dict", t1_dict, "dictionary file")->check(CLI::ExistingFile);
  auto* t1_full_opt = t1->add_option(
      "--full-space", t1_full, "use the implicit full binary dictionary of this length");
  t1_dict_opt->excludes(t1_full_opt);
  t1->add_option("--profile", t1_profile, "noise profile file")
      ->required()
      ->check(CLI::ExistingFile);
  t1->add_option("--eps", t1_eps, "concentration slack (> 0)")->required();
  t1->add_option("--out", t1_out, "output path (default stdout)");
  t1->callback([&] {
    if (!t1_dict && !t1_full)
      throw CLI::RequiredError("theorem1 needs --dict or --full-space");
    exit_code = run_theorem1(t1_dict, t1_full, t1_profile, t1_eps, t1_out);
  });

  // theorem3
  auto* t3 = app.add_subcommand(
      "theorem3", "Typical-set pipeline: probable sets, disjoint packing, exact error");
  std::string t3_channel;
  int t3_n = 0;
  double t3_eps = 0.0;
  std::optional<double> t3_alpha;
  std::optional<std::string> t3_px;
  std::string t3_selector = "canonical";
  std::uint64_t t3_seed = 0;
  std::optional<std::string> t3_out;
  t3->add_option("--channel", t3_channel, "per-symbol channel file")
      ->required()
      ->check(CLI::ExistingFile);
  t3->add_option("--n", t3_n, "block length")->required();
  t3->add_option("--eps", t3_eps, "typicality slack (0 < eps < 1)")->required();
  t3->add_option("--alpha", t3_alpha, "dictionary exponent (default: input entropy)");
  t3->add_option("--px", t3_px, "input distribution as comma-separated probabilities");
  t3->add_option("--selector", t3_selector, "dictionary subset rule (default canonical)")
      ->check(CLI::IsMember({"canonical", "random"}));
  t3->add_option("--seed", t3_seed, "seed for --selector random (default 0)");
  t3->add_option("--out", t3_out, "output path (default stdout)");
  t3->callback([&] {
    exit_code =
        run_theorem3(t3_channel, t3_n, t3_eps, t3_alpha, t3_px, t3_selector, t3_seed, t3_out);
  });

  // figure1
  auto* fig = app.add_subcommand("figure1", "Achievable-rate curves for asymmetric channels");
  std::string fig_deltas = "0,0.025,0.05,0.1";
  double fig_pmax = 0.25;
  double fig_pstep = 0.001;
  std::optional<std::string> fig_out;
  fig->add_option("--deltas", fig_deltas, "comma-separated flip-gap values (default 0,0.025,0.05,0.1)");
  fig->add_option("--p-max", fig_pmax, "largest p on the grid (default 0.25)");
  fig->add_option("--p-step", fig_pstep, "grid step (default 0.001)");
  fig->add_option("--out", fig_out, "CSV path (default stdout)");
  fig->callback([&] { exit_code = run_figure1(fig_deltas, fig_pmax, fig_pstep, fig_out); });

  // conflict-build
  auto* cb = app.add_subcommand(
      "conflict-build", "Probable sets, greedy disjoint packing and exact error for one channel");
  std::string cb_channel;
  double cb_eps = 0.0;
  std::optional<std::int64_t> cb_m;
  std::string cb_strategy = "greedy";
  std::optional<std::string> cb_out;
  cb->add_option("--channel", cb_channel, "channel file")->required()->check(CLI::ExistingFile);
  cb->add_option("--eps", cb_eps, "probable-set slack (0 < eps < 1)")->required();
  cb->add_option("--m", cb_m, "code size (default: largest admissible)");
  cb->add_option("--strategy", cb_strategy, "probable-set strategy (default greedy)")
      ->check(CLI::IsMember({"greedy", "full"}));
  cb->add_option("--out", cb_out, "output path (default stdout)");
  cb->callback(
      [&] { exit_code = run_conflict_build(cb_channel, cb_eps, cb_m, cb_strategy, cb_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
