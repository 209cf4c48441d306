#pragma once

// Test-local oracles and fixture builders.  The oracles deliberately use
// different algorithms from the library (Pascal's triangle instead of the
// multiplicative binomial, direct long-double sums instead of Eigen) so that
// agreement is evidence, not tautology.

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "dictcode/core.hpp"
#include "dictcode/rng.hpp"

namespace testutil {

/// C(n, k) by Pascal's triangle (addition only).
inline dictcode::bigint binomial_oracle(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<dictcode::bigint> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)];
}

/// Hamming-ball size by the oracle binomials.
inline dictcode::bigint ball_oracle(int n, int r, int alphabet) {
  dictcode::bigint total = 0;
  dictcode::bigint power = 1;
  for (int i = 0; i <= std::min(r, n); ++i) {
    total += binomial_oracle(n, i) * power;
    power *= alphabet - 1;
  }
  return total;
}

/// Shannon entropy in the given base by direct long-double summation.
inline double entropy_oracle(std::span<const double> p, double base) {
  long double h = 0.0L;
  for (double v : p)
    if (v > 0.0) h -= static_cast<long double>(v) * std::log(static_cast<long double>(v));
  return static_cast<double>(h / std::log(static_cast<long double>(base)));
}

inline dictcode::Word word_from(const std::string& bits) {
  std::vector<std::uint8_t> symbols(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) symbols[i] = static_cast<std::uint8_t>(bits[i] - '0');
  return dictcode::Word(std::move(symbols));
}

/// Received word from characters 0, 1, e.
inline dictcode::ReceivedWord received_from(const std::string& text) {
  std::vector<std::int16_t> values(text.size());
  for (std::size_t i = 0; i < text.size(); ++i)
    values[i] = text[i] == 'e' ? dictcode::ReceivedWord::kErased
                               : static_cast<std::int16_t>(text[i] - '0');
  return dictcode::ReceivedWord(std::move(values));
}

inline dictcode::Word random_binary_word(int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> symbols(static_cast<std::size_t>(n));
  for (auto& s : symbols) s = static_cast<std::uint8_t>(dictcode::uniform_below(rng, 2));
  return dictcode::Word(std::move(symbols));
}

/// `count` distinct random binary words in generation order.
inline dictcode::Dictionary random_binary_dictionary(int n, std::size_t count, std::uint64_t seed) {
  auto rng = dictcode::stream_rng(seed);
  dictcode::Dictionary dict(n, dictcode::Alphabet::binary());
  while (dict.size() < count) {
    dictcode::Word w = random_binary_word(n, rng);
    if (!dict.contains(w)) dict.add(std::move(w));
  }
  return dict;
}

/// Scratch directory unique to this process, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    auto rng = dictcode::stream_rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            (tag + "-" + std::to_string(rng()) + "-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace testutil
