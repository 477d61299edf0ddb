#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "booldim/graph.hpp"
#include "booldim/tournament.hpp"

namespace booldim::testing {

// Labeled graph on n vertices whose i<j pairs (row-major) are read from `bits`.
inline Graph graph_from_pair_bits(std::size_t n, Word bits) {
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if ((bits >> k) & 1) g.add_edge(i, j);
  return g;
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Word bits = 0; bits < (Word{1} << pair_count(n)); ++bits) out.push_back(graph_from_pair_bits(n, bits));
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Tournament on n vertices: pair (i<j) bit set means j -> i, else i -> j.
inline Tournament tournament_from_pair_bits(std::size_t n, Word bits) {
  Tournament t = Tournament::transitive(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if ((bits >> k) & 1) t.orient(j, i);
  return t;
}

inline Tournament random_tournament(std::mt19937_64& rng, std::size_t n) {
  return tournament_from_pair_bits(n, rng() & low_bits(pair_count(n)));
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = 1, frontier = 1;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(static_cast<std::size_t>(std::countr_zero(f)));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

inline bool is_path(const Graph& g) {
  if (!is_connected(g) || g.edge_count() + 1 != g.order()) return false;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace booldim::testing
