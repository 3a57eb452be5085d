#include "ktdist/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace ktdist {

std::string format_matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

BigInt parse_entry(const Token& t, std::size_t line) {
  auto value = BigInt::parse(t.text);
  if (!value) throw ParseError(line, t.column, "expected an integer, found \"" + std::string(t.text) + "\"");
  return *value;
}

}  // namespace

IntMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }

  std::size_t at = 0;
  auto next_content_line = [&]() -> std::size_t {
    while (at < lines.size() && tokenize(lines[at]).empty()) ++at;
    return at;
  };

  if (next_content_line() == lines.size()) throw ParseError(1, 1, "empty input, expected \"rows cols\"");
  const std::size_t header_line = at + 1;
  const auto header = tokenize(lines[at]);
  if (header.size() != 2) {
    throw ParseError(header_line, header.size() > 2 ? header[2].column : lines[at].size() + 1,
                     "header must be exactly \"rows cols\"");
  }
  const BigInt rows = parse_entry(header[0], header_line);
  const BigInt cols = parse_entry(header[1], header_line);
  if (rows < BigInt(1) || cols < BigInt(1) || rows > BigInt(100000) || cols > BigInt(100000)) {
    throw ParseError(header_line, header[rows < BigInt(1) || rows > BigInt(100000) ? 0 : 1].column,
                     "dimensions must be positive");
  }
  ++at;

  const Index r = rows.to_int64();
  const Index c = cols.to_int64();
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    if (next_content_line() == lines.size()) {
      throw ParseError(lines.size(), 1, "expected " + std::to_string(r) + " rows, found " + std::to_string(i));
    }
    const auto tokens = tokenize(lines[at]);
    const std::size_t line_no = at + 1;
    if (static_cast<Index>(tokens.size()) != c) {
      const std::size_t column = static_cast<Index>(tokens.size()) > c ? tokens[c].column : lines[at].size() + 1;
      throw ParseError(line_no, column,
                       "expected " + std::to_string(c) + " entries, found " + std::to_string(tokens.size()));
    }
    for (Index j = 0; j < c; ++j) m(i, j) = parse_entry(tokens[j], line_no);
    ++at;
  }
  if (next_content_line() != lines.size()) {
    throw ParseError(at + 1, tokenize(lines[at]).front().column, "unexpected data after the last row");
  }
  return m;
}

nlohmann::json bigint_to_json(const BigInt& x) {
  if (x.fits_int64()) return x.to_int64();
  return x.to_string();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    if (auto v = BigInt::parse(j.get<std::string>())) return *v;
  }
  throw std::invalid_argument("expected an integer, found " + j.dump());
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(bigint_to_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data") ||
      !j["rows"].is_number_integer() || !j["cols"].is_number_integer() || !j["data"].is_array()) {
    throw std::invalid_argument("matrix JSON: expected {\"rows\": r, \"cols\": c, \"data\": [[...], ...]}");
  }
  const auto r = j["rows"].get<Index>();
  const auto c = j["cols"].get<Index>();
  if (r < 1 || c < 1) throw std::invalid_argument("matrix JSON: dimensions must be positive");
  const auto& data = j["data"];
  if (static_cast<Index>(data.size()) != r) throw std::invalid_argument("matrix JSON: row count differs from \"rows\"");
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    const auto& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) {
      throw std::invalid_argument("matrix JSON: row " + std::to_string(i + 1) + " does not have " +
                                  std::to_string(c) + " entries");
    }
    for (Index k = 0; k < c; ++k) m(i, k) = bigint_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

IntMatrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      // byte offsets are 1-based and point just past the failure
      const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
      const auto before = text.substr(0, std::min(offset, text.size()));
      const std::size_t line = 1 + static_cast<std::size_t>(std::count(before.begin(), before.end(), '\n'));
      const auto nl = before.rfind('\n');
      const std::size_t column = nl == std::string_view::npos ? before.size() + 1 : before.size() - nl;
      throw ParseError(line, column, "invalid JSON");
    }
    try {
      return matrix_from_json(j);
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, first + 1, e.what());
    }
  }
  return parse_matrix_text(text);
}

std::string format_matrix_csv(const IntMatrix& m, std::span<const Clique> labels) {
  std::ostringstream out;
  if (!labels.empty()) {
    const bool separated = std::any_of(labels.begin(), labels.end(), [](const Clique& c) {
      return !c.members().empty() && c.members().back() >= 10;
    });
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) out << ',';
      out << labels[i].label(separated);
    }
    out << '\n';
  }
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json snf_to_json(const Snf& s) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : s.invariant_factors) factors.push_back(bigint_to_json(f));
  nlohmann::json j = {{"factors", std::move(factors)}, {"rank", s.rank}};
  j["det_sign"] = s.det_sign ? nlohmann::json(*s.det_sign) : nlohmann::json(nullptr);
  return j;
}

std::string format_factors(std::span<const BigInt> factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += ' ';
    out += factors[i].to_string();
  }
  return out;
}

}  // namespace ktdist
