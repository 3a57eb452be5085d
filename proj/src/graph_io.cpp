#include "ktdist/graph_io.hpp"

#include <stdexcept>
#include <vector>

namespace ktdist {

namespace {

constexpr int kBias = 63;
constexpr std::size_t kSmallLimit = 62;
constexpr std::size_t kMediumLimit = 258047;

void append_size(std::string& out, std::size_t n) {
  if (n <= kSmallLimit) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  int groups = 3;
  out.push_back(126);
  if (n > kMediumLimit) {
    out.push_back(126);
    groups = 6;
  }
  for (int g = groups - 1; g >= 0; --g) {
    out.push_back(static_cast<char>(((n >> (6 * g)) & 0x3f) + kBias));
  }
}

}  // namespace

std::string to_graph6(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  int value = 0;
  int filled = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kBias));
        value = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
  return out;
}

SimpleGraph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw std::invalid_argument("graph6: byte " + std::to_string(c) + " at offset " +
                                  std::to_string(i) + " outside 63..126");
    }
  }

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - kBias);
    pos = 1;
  } else {
    int groups = 3;
    pos = 1;
    if (text.size() > 1 && text[1] == 126) {
      groups = 6;
      pos = 2;
    }
    if (text.size() < pos + groups) throw std::invalid_argument("graph6: truncated size header");
    for (int g = 0; g < groups; ++g) n = (n << 6) | static_cast<std::size_t>(text[pos++] - kBias);
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw std::invalid_argument("graph6: body has " + std::to_string(text.size() - pos) +
                                " bytes, expected " + std::to_string(expected) + " for n=" +
                                std::to_string(n));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = text[pos + k / 6] - kBias;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return SimpleGraph(n, edges);
}

nlohmann::json to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON: expected an object with \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
    throw std::invalid_argument("graph JSON: \"n\" must be a non-negative integer");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw std::invalid_argument("graph JSON: each edge must be a pair of non-negative integers");
    }
    edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
  }
  return SimpleGraph(j["n"].get<std::size_t>(), edges);
}

}  // namespace ktdist
