#include "ktdist/bigint.hpp"

#include <limits>

namespace ktdist {

std::optional<BigInt> BigInt::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return std::nullopt;
  Rep value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') return std::nullopt;
    value *= 10;
    value += c - '0';
  }
  if (negative) value = -value;
  return BigInt(std::move(value));
}

bool BigInt::fits_int64() const {
  return v_ >= std::numeric_limits<std::int64_t>::min() &&
         v_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t BigInt::to_int64() const { return v_.convert_to<std::int64_t>(); }

}  // namespace ktdist
