#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dictcode/channel.hpp"
#include "dictcode/core.hpp"
#include "dictcode/entropy.hpp"

namespace dictcode {

/// Text formats. Blank lines and lines starting with '#' are ignored.
///
///   dictionary   header `n=<length> N=<alphabet size>` then one word per line
///   code         the same, plus a second header line `d=<claimed min distance>`
///   profile      header `n=<length>` then either one `uniform p_f=<v> p_e=<v>`
///                line or exactly n lines `i p_f p_e` with 1-based indices
///   received     one word per line over {0,1,e}; `e` marks an erased position
///   channel      header `X=<inputs> Y=<outputs>` then X whitespace-separated
///                row-stochastic rows
///
/// Lexical problems (unreadable file, malformed numbers, missing headers)
/// raise parse_error; semantically invalid content (duplicate words, bad
/// probabilities, wrong claimed distance) raises validation_error.

Dictionary load_dictionary(const std::filesystem::path& path);

/// Loads a code file and returns the code with its claimed minimum distance.
/// A claim exceeding the actual minimum distance is rejected.
std::pair<Code, int> load_code(const std::filesystem::path& path);

void save_code(const Code& code, int claimed_distance, std::ostream& out);
void save_code(const Code& code, int claimed_distance, const std::filesystem::path& path);

NoiseProfile load_profile(const std::filesystem::path& path);

/// Reads received words (one per line) checked against the expected length.
std::vector<ReceivedWord> load_received(const std::filesystem::path& path, int n);

/// Parses the matrix only; wrap it in DMC to enforce row-stochasticity.
Eigen::MatrixXd load_channel_matrix(const std::filesystem::path& path);

void write_rate_curve_csv(std::span<const RatePoint> points, std::ostream& out);

/// Fixed six-decimal rendering used by every report and CSV writer, so that
/// identical runs emit identical bytes.
std::string fixed6(double value);

}  // namespace dictcode
