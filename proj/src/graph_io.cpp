#include "booldim/graph_io.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "booldim/error.hpp"

namespace booldim {

namespace {

constexpr char kOffset = 63;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::size_t six_bits(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
  const char c = text[pos];
  if (c < 63 || c > 126) throw ParseError("graph6: character outside 63..126", pos);
  return static_cast<std::size_t>(c - kOffset);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) pos = header.size();
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;
  text = text.substr(0, end);

  std::size_t n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("graph6: orders above 258047 are not supported", pos);
    n = (six_bits(text, pos + 1) << 12) | (six_bits(text, pos + 2) << 6) | six_bits(text, pos + 3);
    if (n < 63) throw ParseError("graph6: long-form order below 63", pos);
    pos += 4;
  } else {
    n = six_bits(text, pos);
    pos += 1;
  }
  if (n > kMaxOrder) throw CapacityError("graph6: order " + std::to_string(n) + " exceeds 64");

  const std::size_t pair_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t payload = (pair_bits + 5) / 6;
  if (text.size() - pos < payload) throw ParseError("graph6: truncated payload", text.size());
  if (text.size() - pos > payload) throw ParseError("graph6: unexpected bytes after payload", pos + payload);

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + k / 6;
      const std::size_t bits = six_bits(text, byte);
      if ((bits >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  for (std::size_t b = pos + k / 6; b < pos + payload; ++b) six_bits(text, b);
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> declared;
  std::size_t max_index = 0;
  bool any = false;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::size_t> values;
    std::size_t i = 0;
    while (i < line.size()) {
      if (is_space(line[i])) {
        ++i;
        continue;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      const auto consumed = static_cast<std::size_t>(ptr - (line.data() + i));
      if (ec != std::errc{} || consumed == 0 || (i + consumed < line.size() && !is_space(line[i + consumed])))
        throw ParseError("edge list: expected a non-negative integer", line_start + i);
      values.push_back(value);
      i += consumed;
    }

    if (values.size() == 1) {
      if (declared) throw ParseError("edge list: vertex count declared twice", line_start);
      declared = values[0];
    } else if (values.size() == 2) {
      if (values[0] == values[1]) throw ParseError("edge list: loop edge", line_start);
      edges.emplace_back(values[0], values[1]);
      max_index = std::max({max_index, values[0], values[1]});
      any = true;
    } else if (!values.empty()) {
      throw ParseError("edge list: expected \"u v\" on each line", line_start);
    }
    line_start = line_end + 1;
  }

  std::size_t n = any ? max_index + 1 : 0;
  if (declared) {
    if (any && *declared <= max_index) throw InputError("edge list: vertex index exceeds the declared count");
    n = *declared;
  }
  if (n > kMaxOrder) throw CapacityError("edge list: order " + std::to_string(n) + " exceeds 64");
  return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace booldim
