#pragma once

// graph6 and edge-list codecs.
//
// graph6 (McKay): N(n) followed by the upper triangle of the adjacency
// matrix, column by column ((0,1), (0,2), (1,2), (0,3), ...), packed six bits
// per byte, most significant first, each byte offset by 63. The last byte is
// padded with zero bits. N(n) is the single byte n+63 for n <= 62 and
// 126 followed by three 6-bit bytes for 63 <= n <= 258047.
//
// Edge list: an optional "n <count>" line, then one "a b" pair per line with
// 0-based ids. Blank lines and lines starting with '#' are ignored.

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hhnum/errors.hpp"
#include "hhnum/graph.hpp"

namespace hhnum {

enum class GraphFormat { kGraph6, kEdgeList };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

inline int parse_int(std::string_view token, int line_no) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                     std::string(token) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// graph6

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw PreconditionError("graph6 encoding supports n <= 258047");
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

inline Graph decode_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) {
      throw ParseError("graph6: byte " + std::to_string(u) +
                       " outside the printable range 63..126");
    }
  }
  auto value = [&](std::size_t i) {
    return static_cast<int>(static_cast<unsigned char>(text[i])) - 63;
  };
  int n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    if (value(1) == 63) {
      throw ParseError("graph6: 8-byte size headers are not supported");
    }
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n < 63) throw ParseError("graph6: non-canonical size header");
    pos = 4;
  }
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != want) {
    throw ParseError("graph6: expected " + std::to_string(want) +
                     " data bytes for n=" + std::to_string(n) + ", found " +
                     std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = value(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) edges.push_back(Edge{i, j});
    }
  }
  if (k % 6 != 0) {
    int last = value(pos + want - 1);
    int pad_mask = (1 << (6 - k % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6: nonzero padding bits");
  }
  if (n == 0) throw ParseError("graph6: graphs need at least one vertex");
  return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Edge list

// `n` overrides a missing "n <count>" line; without either, n is one more
// than the largest id seen.
inline Graph parse_edge_list(std::string_view text,
                             std::optional<int> n = std::nullopt) {
  std::optional<int> declared;
  std::vector<Edge> edges;
  int max_id = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto tokens = detail::split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two tokens, found " +
                       std::to_string(tokens.size()));
    }
    if (tokens[0] == "n") {
      if (declared || !edges.empty()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": the 'n' line must come first and only once");
      }
      declared = detail::parse_int(tokens[1], line_no);
      continue;
    }
    int a = detail::parse_int(tokens[0], line_no);
    int b = detail::parse_int(tokens[1], line_no);
    if (a < 0 || b < 0) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": vertex ids must be non-negative");
    }
    max_id = std::max({max_id, a, b});
    edges.push_back(Edge{a, b});
  }
  int count = declared ? *declared : n ? *n : max_id + 1;
  if (count < 1) throw ParseError("edge list: no vertices");
  return Graph(count, edges);
}

inline std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const Edge& e : g.edges()) out << e.a << " " << e.b << "\n";
  return out.str();
}

inline Graph parse_graph(std::string_view text, GraphFormat format,
                         std::optional<int> n = std::nullopt) {
  return format == GraphFormat::kGraph6 ? decode_graph6(text)
                                        : parse_edge_list(text, n);
}

inline std::string render_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? encode_graph6(g) + "\n"
                                        : render_edge_list(g);
}

// Format is chosen by extension: ".g6" or ".edges".
inline GraphFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".g6") return GraphFormat::kGraph6;
  if (ext == ".edges") return GraphFormat::kEdgeList;
  throw ParseError("unrecognized graph file extension '" + ext +
                   "' (expected .g6 or .edges)");
}

inline Graph load_graph(const std::filesystem::path& path) {
  GraphFormat format = format_for_path(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (format == GraphFormat::kGraph6) {
    // first non-empty line holds the graph
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (!detail::trim(line).empty()) return decode_graph6(line);
    }
    throw ParseError(path.string() + ": no graph6 line");
  }
  return parse_edge_list(text);
}

}  // namespace hhnum
