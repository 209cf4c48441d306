#include "dictcode/core.hpp"

#include <algorithm>
#include <stdexcept>

#include "dictcode/errors.hpp"

namespace dictcode {

namespace {
constexpr const char* kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
}

Alphabet::Alphabet(std::string symbols, std::optional<char> erasure)
    : symbols_(std::move(symbols)), erasure_(erasure) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet needs at least one symbol");
  lookup_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto c = static_cast<unsigned char>(symbols_[i]);
    if (lookup_[c] != -1) throw std::invalid_argument("alphabet symbols must be distinct");
    lookup_[c] = static_cast<std::int8_t>(i);
  }
  if (erasure_ && lookup_[static_cast<unsigned char>(*erasure_)] != -1)
    throw std::invalid_argument("erasure mark collides with an alphabet symbol");
}

Alphabet Alphabet::binary() { return with_size(2); }

Alphabet Alphabet::with_size(int size) {
  if (size < 2 || size > 36) throw std::invalid_argument("alphabet size must be in [2, 36]");
  std::string symbols(kDigits, static_cast<std::size_t>(size));
  std::optional<char> erasure;
  if (symbols.find('e') == std::string::npos) erasure = 'e';
  return Alphabet(std::move(symbols), erasure);
}

std::optional<int> Alphabet::index_of(char c) const {
  const std::int8_t i = lookup_[static_cast<unsigned char>(c)];
  if (i < 0) return std::nullopt;
  return static_cast<int>(i);
}

std::size_t WordHash::operator()(const Word& w) const {
  // FNV-1a over the symbol bytes.
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t s : w.symbols()) {
    h ^= s;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> ReceivedWord::erased_positions() const {
  std::vector<int> out;
  for (int i = 0; i < length(); ++i)
    if (erased(i)) out.push_back(i);
  return out;
}

int ReceivedWord::erasure_count() const {
  int c = 0;
  for (int i = 0; i < length(); ++i) c += erased(i);
  return c;
}

namespace {

void check_word(const Word& w, int n, const Alphabet& alphabet) {
  if (w.length() != n) throw std::invalid_argument("word length does not match");
  for (std::uint8_t s : w.symbols())
    if (s >= alphabet.size()) throw std::invalid_argument("word symbol outside the alphabet");
}

}  // namespace

Dictionary::Dictionary(int n, Alphabet alphabet) : n_(n), alphabet_(std::move(alphabet)) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
}

void Dictionary::add(Word w) {
  check_word(w, n_, alphabet_);
  if (!seen_.insert(w).second) throw validation_error("duplicate word in dictionary");
  words_.push_back(std::move(w));
}

Code::Code(int n, Alphabet alphabet) : n_(n), alphabet_(std::move(alphabet)) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
}

void Code::add(Word w) {
  check_word(w, n_, alphabet_);
  if (!seen_.insert(w).second) throw validation_error("duplicate word in code");
  words_.push_back(std::move(w));
}

int hamming_distance(const Word& a, const Word& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("hamming distance needs equal lengths");
  int d = 0;
  for (int i = 0; i < a.length(); ++i) d += a[i] != b[i];
  return d;
}

int min_distance(const Code& code) {
  if (code.size() < 2) throw std::invalid_argument("min distance needs at least two words");
  const auto& words = code.words();
  int best = code.n();
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, hamming_distance(words[i], words[j]));
  return best;
}

bigint ball_volume(int n, int r, int alphabet_size) {
  if (n < 1) throw std::invalid_argument("ball volume needs positive length");
  if (r < 0 || r > n) throw std::invalid_argument("ball radius must be in [0, n]");
  if (alphabet_size < 2) throw std::invalid_argument("alphabet size must be at least 2");
  bigint total = 1;   // i = 0 term
  bigint choose = 1;  // C(n, i), updated exactly
  bigint power = 1;   // (alphabet_size - 1)^i
  for (int i = 1; i <= r; ++i) {
    choose = choose * (n - i + 1) / i;
    power *= alphabet_size - 1;
    total += choose * power;
  }
  return total;
}

namespace {

std::vector<char> removal_mask(int n, std::span<const int> positions) {
  std::vector<char> drop(static_cast<std::size_t>(n), 0);
  for (int p : positions) {
    if (p < 0 || p >= n) throw std::invalid_argument("puncture position out of range");
    drop[static_cast<std::size_t>(p)] = 1;
  }
  return drop;
}

}  // namespace

Word puncture(const Word& w, std::span<const int> positions) {
  const auto drop = removal_mask(w.length(), positions);
  std::vector<std::uint8_t> kept;
  kept.reserve(static_cast<std::size_t>(w.length()));
  for (int i = 0; i < w.length(); ++i)
    if (!drop[static_cast<std::size_t>(i)]) kept.push_back(w[i]);
  return Word(std::move(kept));
}

Word puncture_received(const ReceivedWord& y, std::span<const int> positions) {
  const auto drop = removal_mask(y.length(), positions);
  std::vector<std::uint8_t> kept;
  kept.reserve(static_cast<std::size_t>(y.length()));
  for (int i = 0; i < y.length(); ++i) {
    if (drop[static_cast<std::size_t>(i)]) continue;
    if (y.erased(i)) throw std::invalid_argument("kept position carries the erasure mark");
    kept.push_back(static_cast<std::uint8_t>(y[i]));
  }
  return Word(std::move(kept));
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  std::string out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (int i = 0; i < w.length(); ++i) out.push_back(alphabet.symbol(w[i]));
  return out;
}

std::string to_string(const ReceivedWord& y, const Alphabet& alphabet) {
  std::string out;
  out.reserve(static_cast<std::size_t>(y.length()));
  for (int i = 0; i < y.length(); ++i) {
    if (y.erased(i)) {
      if (!alphabet.erasure()) throw std::invalid_argument("alphabet has no erasure mark");
      out.push_back(*alphabet.erasure());
    } else {
      out.push_back(alphabet.symbol(y[i]));
    }
  }
  return out;
}

}  // namespace dictcode
