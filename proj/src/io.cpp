#include "dictcode/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "dictcode/errors.hpp"

namespace dictcode {

namespace {

struct Line {
  int number;
  std::string text;
};

/// Reads significant lines (blank lines and '#' comments dropped), keeping
/// original line numbers for error messages.
std::vector<Line> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path.string(), 0, "cannot open file");
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    const auto last = text.find_last_not_of(" \t");
    lines.push_back({number, text.substr(first, last - first + 1)});
  }
  return lines;
}

std::vector<std::string> split_fields(const std::string& text) {
  std::vector<std::string> fields;
  std::istringstream in(text);
  std::string field;
  while (in >> field) fields.push_back(std::move(field));
  return fields;
}

/// Strips `key=` from a field like `n=12`; nullopt when the key differs.
std::optional<std::string> keyed_value(const std::string& field, const std::string& key) {
  if (field.size() <= key.size() + 1 || field.compare(0, key.size(), key) != 0 ||
      field[key.size()] != '=')
    return std::nullopt;
  return field.substr(key.size() + 1);
}

long long parse_int(const std::string& token, const std::filesystem::path& path, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw parse_error(path.string(), line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size())
    throw parse_error(path.string(), line, "expected an integer, got '" + token + "'");
  return value;
}

double parse_double(const std::string& token, const std::filesystem::path& path, int line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw parse_error(path.string(), line, "expected a number, got '" + token + "'");
  }
  if (used != token.size())
    throw parse_error(path.string(), line, "expected a number, got '" + token + "'");
  return value;
}

struct WordHeader {
  int n;
  int alphabet_size;
};

WordHeader parse_word_header(const Line& line, const std::filesystem::path& path) {
  const auto fields = split_fields(line.text);
  if (fields.size() != 2)
    throw parse_error(path.string(), line.number, "expected header 'n=<length> N=<alphabet size>'");
  const auto n_text = keyed_value(fields[0], "n");
  const auto size_text = keyed_value(fields[1], "N");
  if (!n_text || !size_text)
    throw parse_error(path.string(), line.number, "expected header 'n=<length> N=<alphabet size>'");
  const long long n = parse_int(*n_text, path, line.number);
  const long long alphabet_size = parse_int(*size_text, path, line.number);
  if (n < 1) throw validation_error("word length must be at least 1");
  if (alphabet_size < 2 || alphabet_size > 36)
    throw validation_error("alphabet size must lie in [2, 36]");
  return {static_cast<int>(n), static_cast<int>(alphabet_size)};
}

Word parse_word(const Line& line, const Alphabet& alphabet, int n,
                const std::filesystem::path& path) {
  if (std::cmp_not_equal(line.text.size(), n))
    throw validation_error(path.string() + ":" + std::to_string(line.number) +
                           ": word length " + std::to_string(line.text.size()) +
                           " does not match n=" + std::to_string(n));
  std::vector<std::uint8_t> symbols(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto idx = alphabet.index_of(line.text[static_cast<std::size_t>(i)]);
    if (!idx)
      throw parse_error(path.string(), line.number,
                        std::string("symbol '") + line.text[static_cast<std::size_t>(i)] +
                            "' is not in the alphabet");
    symbols[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(*idx);
  }
  return Word(std::move(symbols));
}

}  // namespace

Dictionary load_dictionary(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw parse_error(path.string(), 0, "missing dictionary header");
  const WordHeader header = parse_word_header(lines[0], path);
  Dictionary dict(header.n, Alphabet::with_size(header.alphabet_size));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Word word = parse_word(lines[i], dict.alphabet(), header.n, path);
    if (dict.contains(word))
      throw validation_error(path.string() + ":" + std::to_string(lines[i].number) +
                             ": duplicate word '" + lines[i].text + "'");
    dict.add(word);
  }
  if (dict.size() == 0) throw validation_error(path.string() + ": dictionary has no words");
  return dict;
}

std::pair<Code, int> load_code(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  if (lines.size() < 2) throw parse_error(path.string(), 0, "missing code headers");
  const WordHeader header = parse_word_header(lines[0], path);
  const auto fields = split_fields(lines[1].text);
  const auto d_text = fields.size() == 1 ? keyed_value(fields[0], "d") : std::nullopt;
  if (!d_text)
    throw parse_error(path.string(), lines[1].number, "expected header 'd=<claimed min distance>'");
  const long long claimed = parse_int(*d_text, path, lines[1].number);
  if (claimed < 1) throw validation_error("claimed minimum distance must be at least 1");

  Code code(header.n, Alphabet::with_size(header.alphabet_size));
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Word word = parse_word(lines[i], code.alphabet(), header.n, path);
    if (code.contains(word))
      throw validation_error(path.string() + ":" + std::to_string(lines[i].number) +
                             ": duplicate word '" + lines[i].text + "'");
    code.add(word);
  }
  if (code.size() == 0) throw validation_error(path.string() + ": code has no words");
  if (code.size() >= 2) {
    const int actual = min_distance(code);
    if (actual < claimed)
      throw validation_error(path.string() + ": claimed minimum distance " +
                             std::to_string(claimed) + " exceeds the actual distance " +
                             std::to_string(actual));
  }
  return {std::move(code), static_cast<int>(claimed)};
}

void save_code(const Code& code, int claimed_distance, std::ostream& out) {
  out << "n=" << code.n() << " N=" << code.alphabet().size() << "\n";
  out << "d=" << claimed_distance << "\n";
  for (const Word& word : code.words()) out << to_string(word, code.alphabet()) << "\n";
}

void save_code(const Code& code, int claimed_distance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw parse_error(path.string(), 0, "cannot open file for writing");
  save_code(code, claimed_distance, out);
  if (!out) throw parse_error(path.string(), 0, "write failed");
}

NoiseProfile load_profile(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw parse_error(path.string(), 0, "missing profile header");
  const auto header_fields = split_fields(lines[0].text);
  const auto n_text =
      header_fields.size() == 1 ? keyed_value(header_fields[0], "n") : std::nullopt;
  if (!n_text) throw parse_error(path.string(), lines[0].number, "expected header 'n=<length>'");
  const long long n = parse_int(*n_text, path, lines[0].number);
  if (n < 1) throw validation_error("profile length must be at least 1");

  const auto check_probabilities = [&](double p_f, double p_e, int line_number) {
    if (p_f < 0.0 || p_e < 0.0 || p_f + p_e > 1.0)
      throw validation_error(path.string() + ":" + std::to_string(line_number) +
                             ": need p_f >= 0, p_e >= 0, p_f + p_e <= 1");
  };

  if (lines.size() == 2) {
    const auto fields = split_fields(lines[1].text);
    if (fields.size() == 3 && fields[0] == "uniform") {
      const auto pf_text = keyed_value(fields[1], "p_f");
      const auto pe_text = keyed_value(fields[2], "p_e");
      if (!pf_text || !pe_text)
        throw parse_error(path.string(), lines[1].number,
                          "expected 'uniform p_f=<value> p_e=<value>'");
      const double p_f = parse_double(*pf_text, path, lines[1].number);
      const double p_e = parse_double(*pe_text, path, lines[1].number);
      check_probabilities(p_f, p_e, lines[1].number);
      return NoiseProfile::uniform(static_cast<int>(n), p_f, p_e);
    }
  }

  if (std::cmp_not_equal(lines.size(), n + 1))
    throw parse_error(path.string(), 0,
                      "expected " + std::to_string(n) + " position lines, found " +
                          std::to_string(lines.size() - 1));
  Eigen::ArrayXd p_f(n), p_e(n);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i].text);
    if (fields.size() != 3)
      throw parse_error(path.string(), lines[i].number, "expected 'i p_f p_e'");
    const long long index = parse_int(fields[0], path, lines[i].number);
    if (index < 1 || index > n)
      throw validation_error(path.string() + ":" + std::to_string(lines[i].number) +
                             ": position " + std::to_string(index) + " outside 1.." +
                             std::to_string(n));
    if (seen[static_cast<std::size_t>(index - 1)])
      throw validation_error(path.string() + ":" + std::to_string(lines[i].number) +
                             ": position " + std::to_string(index) + " listed twice");
    seen[static_cast<std::size_t>(index - 1)] = 1;
    const double f = parse_double(fields[1], path, lines[i].number);
    const double e = parse_double(fields[2], path, lines[i].number);
    check_probabilities(f, e, lines[i].number);
    p_f[index - 1] = f;
    p_e[index - 1] = e;
  }
  return NoiseProfile(std::move(p_f), std::move(p_e));
}

std::vector<ReceivedWord> load_received(const std::filesystem::path& path, int n) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw validation_error(path.string() + ": no received words");
  std::vector<ReceivedWord> received;
  received.reserve(lines.size());
  for (const Line& line : lines) {
    if (std::cmp_not_equal(line.text.size(), n))
      throw validation_error(path.string() + ":" + std::to_string(line.number) +
                             ": word length " + std::to_string(line.text.size()) +
                             " does not match n=" + std::to_string(n));
    std::vector<std::int16_t> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const char c = line.text[static_cast<std::size_t>(i)];
      if (c == '0' || c == '1')
        values[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(c - '0');
      else if (c == 'e')
        values[static_cast<std::size_t>(i)] = ReceivedWord::kErased;
      else
        throw parse_error(path.string(), line.number,
                          std::string("symbol '") + c + "' is not one of 0, 1, e");
    }
    received.emplace_back(std::move(values));
  }
  return received;
}

Eigen::MatrixXd load_channel_matrix(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw parse_error(path.string(), 0, "missing channel header");
  const auto fields = split_fields(lines[0].text);
  const auto x_text = fields.size() == 2 ? keyed_value(fields[0], "X") : std::nullopt;
  const auto y_text = fields.size() == 2 ? keyed_value(fields[1], "Y") : std::nullopt;
  if (!x_text || !y_text)
    throw parse_error(path.string(), lines[0].number, "expected header 'X=<inputs> Y=<outputs>'");
  const long long inputs = parse_int(*x_text, path, lines[0].number);
  const long long outputs = parse_int(*y_text, path, lines[0].number);
  if (inputs < 1 || outputs < 1)
    throw validation_error("channel needs at least one input and one output");
  if (std::cmp_not_equal(lines.size(), inputs + 1))
    throw parse_error(path.string(), 0,
                      "expected " + std::to_string(inputs) + " matrix rows, found " +
                          std::to_string(lines.size() - 1));
  Eigen::MatrixXd matrix(inputs, outputs);
  for (long long x = 0; x < inputs; ++x) {
    const Line& line = lines[static_cast<std::size_t>(x + 1)];
    const auto row = split_fields(line.text);
    if (std::cmp_not_equal(row.size(), outputs))
      throw parse_error(path.string(), line.number,
                        "expected " + std::to_string(outputs) + " entries, found " +
                            std::to_string(row.size()));
    for (long long y = 0; y < outputs; ++y)
      matrix(x, y) = parse_double(row[static_cast<std::size_t>(y)], path, line.number);
  }
  return matrix;
}

void write_rate_curve_csv(std::span<const RatePoint> points, std::ostream& out) {
  out << "p,delta,rate\n";
  for (const RatePoint& point : points)
    out << fixed6(point.p) << ',' << fixed6(point.delta) << ',' << fixed6(point.rate) << '\n';
}

std::string fixed6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

}  // namespace dictcode
