#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dictcode {

using bigint = boost::multiprecision::cpp_int;

/// Ordered set of distinct single-character symbols, plus an optional erasure mark
/// that is never one of the symbols.
class Alphabet {
 public:
  Alphabet(std::string symbols, std::optional<char> erasure);

  /// {'0','1'} with erasure mark 'e'.
  static Alphabet binary();
  /// First `size` characters of 0-9a-z; erasure mark 'e' while it does not collide.
  static Alphabet with_size(int size);

  int size() const { return static_cast<int>(symbols_.size()); }
  char symbol(int index) const { return symbols_.at(static_cast<std::size_t>(index)); }
  std::optional<int> index_of(char c) const;
  std::optional<char> erasure() const { return erasure_; }

 private:
  std::string symbols_;
  std::optional<char> erasure_;
  std::array<std::int8_t, 256> lookup_{};
};

/// Fixed-length sequence of alphabet indices.  Immutable once built.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {}

  int length() const { return static_cast<int>(symbols_.size()); }
  std::uint8_t operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint8_t> symbols() const { return symbols_; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<std::uint8_t> symbols_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

/// Channel output: per position either an alphabet index or the erasure mark.
class ReceivedWord {
 public:
  static constexpr std::int16_t kErased = -1;

  ReceivedWord() = default;
  explicit ReceivedWord(std::vector<std::int16_t> entries) : entries_(std::move(entries)) {}

  int length() const { return static_cast<int>(entries_.size()); }
  std::int16_t operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  bool erased(int i) const { return entries_[static_cast<std::size_t>(i)] == kErased; }
  /// 0-based positions carrying the erasure mark, ascending.
  std::vector<int> erased_positions() const;
  int erasure_count() const;

  bool operator==(const ReceivedWord&) const = default;

 private:
  std::vector<std::int16_t> entries_;
};

/// Finite list of distinct words of one length; iteration order is insertion order.
class Dictionary {
 public:
  Dictionary(int n, Alphabet alphabet);

  /// Appends a word; rejects length/symbol violations and duplicates.
  void add(Word w);

  int n() const { return n_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  bool contains(const Word& w) const { return seen_.contains(w); }

 private:
  int n_;
  Alphabet alphabet_;
  std::vector<Word> words_;
  std::unordered_set<Word, WordHash> seen_;
};

/// Ordered list of distinct codewords of one length.
class Code {
 public:
  Code(int n, Alphabet alphabet);

  void add(Word w);

  int n() const { return n_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  bool contains(const Word& w) const { return seen_.contains(w); }

 private:
  int n_;
  Alphabet alphabet_;
  std::vector<Word> words_;
  std::unordered_set<Word, WordHash> seen_;
};

/// Number of positions where two equal-length words differ.
int hamming_distance(const Word& a, const Word& b);

/// Smallest pairwise distance of a code with at least two words.
int min_distance(const Code& code);

/// Exact number of words within radius r of a fixed word of length n over an
/// alphabet of the given size: sum over i <= r of C(n,i) * (size-1)^i.
bigint ball_volume(int n, int r, int alphabet_size);

/// Copy of w with the given 0-based positions removed (duplicates tolerated).
Word puncture(const Word& w, std::span<const int> positions);

/// Word formed by the non-erased entries of y after removing the given positions;
/// every kept entry must be non-erased.
Word puncture_received(const ReceivedWord& y, std::span<const int> positions);

std::string to_string(const Word& w, const Alphabet& alphabet);
std::string to_string(const ReceivedWord& y, const Alphabet& alphabet);

}  // namespace dictcode
