#include "booldim/graph.hpp"

#include <string>

#include "booldim/error.hpp"

namespace booldim {

Graph::Graph(std::size_t n) : n_(n) {
  if (n > kMaxOrder) throw CapacityError("graph order " + std::to_string(n) + " exceeds 64");
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_rows(std::span<const Word> rows) {
  Graph g(rows.size());
  const Word mask = low_bits(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] & ~mask) != 0) throw InputError("adjacency row has bits beyond the graph order");
    if ((rows[i] >> i) & 1) throw InputError("graph has a loop at vertex " + std::to_string(i));
    g.adj_[i] = rows[i];
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (g.adjacent(i, j) != g.adjacent(j, i)) throw InputError("adjacency rows are not symmetric");
  return g;
}

void Graph::check_pair(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_)
    throw InputError("vertex out of range in edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  adj_[u] &= ~singleton(v);
  adj_[v] &= ~singleton(u);
}

void Graph::toggle_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  adj_[u] ^= singleton(v);
  adj_[v] ^= singleton(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t i = 0; i < n_; ++i) twice += static_cast<std::size_t>(std::popcount(adj_[i]));
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (Word rest = adj_[u] & ~low_bits(u + 1); rest != 0; rest &= rest - 1)
      out.emplace_back(u, static_cast<std::size_t>(std::countr_zero(rest)));
  return out;
}

VertexSet Graph::non_isolated() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (adj_[i] != 0) s |= singleton(i);
  return s;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<std::size_t, kMaxOrder> index{};
  std::size_t m = 0;
  for (VertexSet rest = keep; rest != 0; rest &= rest - 1) index[m++] = static_cast<std::size_t>(std::countr_zero(rest));
  Graph out(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (adjacent(index[a], index[b])) out.adj_[a] |= singleton(b);
  return out;
}

Graph Graph::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw InputError("relabeling has the wrong length");
  VertexSet seen = 0;
  for (std::size_t p : perm) {
    if (p >= n_ || (seen & singleton(p))) throw InputError("relabeling is not a permutation");
    seen |= singleton(p);
  }
  Graph out(n_);
  for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

void CliqueFamily::validate() const {
  if (n > kMaxOrder) throw CapacityError("clique family ground set exceeds 64");
  for (VertexSet c : cliques)
    if ((c & ~low_bits(n)) != 0) throw InputError("clique reaches outside the ground set");
}

std::vector<Word> CliqueFamily::as_representation() const {
  if (cliques.size() > 64) throw CapacityError("representation width exceeds 64");
  std::vector<Word> f(n, 0);
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (VertexSet rest = cliques[i]; rest != 0; rest &= rest - 1)
      f[static_cast<std::size_t>(std::countr_zero(rest))] |= singleton(i);
  return f;
}

CliqueFamily CliqueFamily::from_representation(std::size_t n, std::span<const Word> f, std::size_t width) {
  CliqueFamily family{n, std::vector<VertexSet>(width, 0)};
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < width; ++i)
      if ((f[v] >> i) & 1) family.cliques[i] |= singleton(v);
  return family;
}

Graph boolean_sum(std::span<const Graph> graphs) {
  if (graphs.empty()) return Graph(0);
  const std::size_t n = graphs.front().order();
  std::array<Word, kMaxOrder> rows{};
  for (const Graph& g : graphs) {
    if (g.order() != n) throw InputError("boolean_sum: graphs have different vertex counts");
    for (std::size_t i = 0; i < n; ++i) rows[i] ^= g.neighbors(i);
  }
  return Graph::from_rows({rows.data(), n});
}

Graph boolean_sum(const Graph& a, const Graph& b) {
  const std::array<Graph, 2> pair{a, b};
  return boolean_sum(pair);
}

Graph clique_graph(std::size_t n, VertexSet x) {
  Graph g(n);
  if ((x & ~low_bits(n)) != 0) throw InputError("clique vertex out of range");
  std::array<Word, kMaxOrder> rows{};
  for (VertexSet rest = x; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    rows[v] = x & ~singleton(v);
  }
  return Graph::from_rows({rows.data(), n});
}

Graph realize(const CliqueFamily& family) {
  family.validate();
  std::array<Word, kMaxOrder> rows{};
  for (VertexSet c : family.cliques)
    for (VertexSet rest = c; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      rows[v] ^= c & ~singleton(v);
    }
  return Graph::from_rows({rows.data(), family.n});
}

std::optional<std::pair<std::size_t, std::size_t>> find_duo(const Graph& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      const VertexSet outside = ~(singleton(a) | singleton(b));
      if ((g.neighbors(a) & outside) == (g.neighbors(b) & outside)) return std::pair{a, b};
    }
  return std::nullopt;
}

Graph nonorthogonality_graph(const F2Matrix& gram) {
  const std::size_t k = gram.order();
  if (k > 6) throw CapacityError("non-orthogonality graph needs k <= 6");
  const std::size_t n = std::size_t{1} << k;
  Graph g(n);
  for (std::size_t x = 0; x < n; ++x) {
    // gram * x, as a vector
    Word gx = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (parity(gram.row(i) & x)) gx |= singleton(i);
    for (std::size_t y = x + 1; y < n; ++y)
      if (parity(gx & y)) g.add_edge(x, y);
  }
  return g;
}

Graph ortho_graph(std::size_t k) {
  if (k > 5) throw CapacityError("ortho_graph supports k <= 5");
  return nonorthogonality_graph(F2Matrix::identity(k));
}

std::vector<Word> even_weight_vectors(std::size_t k) {
  std::vector<Word> out;
  for (Word x = 0; x < (Word{1} << (k + 1)); ++x)
    if (!parity(x)) out.push_back(x);
  return out;
}

Graph ortho_graph_H(std::size_t k) {
  if (k % 2 != 0) throw InputError("ortho_graph_H needs an even k");
  if (k > 4) throw CapacityError("ortho_graph_H supports k <= 4");
  const std::vector<Word> vs = even_weight_vectors(k);
  Graph g(vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (parity(vs[a] & vs[b])) g.add_edge(a, b);
  return g;
}

bool validate_representation(const Graph& g, std::span<const Word> f) {
  if (f.size() != g.order()) return false;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != parity(f[u] & f[v])) return false;
  return true;
}

Graph eliminate_vertex(const Graph& g, std::size_t x) {
  if (x >= g.order()) throw InputError("eliminate_vertex: vertex out of range");
  Graph sum = boolean_sum(g, clique_graph(g.order(), g.neighbors(x)));
  return sum.induced(g.vertices() & ~singleton(x));
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(std::size_t n) { return clique_graph(n, low_bits(n)); }

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph triangle_with_pendants() {
  const std::pair<std::size_t, std::size_t> edges[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};
  return Graph::from_edges(6, edges);
}

namespace {

void grow_clique(const Graph& g, VertexSet candidates, std::size_t size, std::size_t& best) {
  if (candidates == 0) {
    if (size > best) best = size;
    return;
  }
  if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
  const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
  grow_clique(g, candidates & g.neighbors(v), size + 1, best);
  grow_clique(g, candidates & ~singleton(v), size, best);
}

}  // namespace

std::size_t max_clique_size(const Graph& g) {
  std::size_t best = 0;
  grow_clique(g, g.vertices(), 0, best);
  return best;
}

}  // namespace booldim
