#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ktdist/graph.hpp"
#include "ktdist/matrix.hpp"
#include "ktdist/smith.hpp"

namespace ktdist {

// Malformed matrix input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Text format: "rows cols" on the first line, then one line of
// whitespace-separated integers per row.
std::string format_matrix_text(const IntMatrix& m);
IntMatrix parse_matrix_text(std::string_view text);

// {"rows": r, "cols": c, "data": [[...], ...]}.
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

// Dispatches on the first non-blank character: '{' selects JSON.
IntMatrix parse_matrix(std::string_view text);

// One CSV row per matrix row; with labels, a leading header row of clique
// labels (concatenated ids, dash-separated once any id has two digits).
std::string format_matrix_csv(const IntMatrix& m, std::span<const Clique> labels = {});

// Integers that fit in 64 bits become JSON numbers, larger ones decimal
// strings; the reader accepts both.
nlohmann::json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const nlohmann::json& j);

// {"factors": [...], "rank": r, "det_sign": s}; det_sign is null for
// non-square inputs.
nlohmann::json snf_to_json(const Snf& s);

// Space-separated factors; "" for rank 0.
std::string format_factors(std::span<const BigInt> factors);

}  // namespace ktdist
