#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "booldim/f2matrix.hpp"

namespace booldim {

/// Subset of {0..63} as a bit mask.
using VertexSet = Word;

constexpr VertexSet singleton(std::size_t v) { return VertexSet{1} << v; }

/// Undirected loopless graph on vertices 0..n-1, one adjacency word per vertex.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n. Throws CapacityError if n > kMaxOrder.
  explicit Graph(std::size_t n);

  /// Throws InputError on a loop or an out-of-range endpoint.
  static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);
  /// Adjacency rows must be symmetric with zero diagonal.
  static Graph from_rows(std::span<const Word> rows);

  std::size_t order() const { return n_; }
  VertexSet vertices() const { return low_bits(n_); }

  bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1; }
  VertexSet neighbors(std::size_t u) const { return adj_[u]; }
  std::size_t degree(std::size_t u) const { return static_cast<std::size_t>(std::popcount(adj_[u])); }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);
  void toggle_edge(std::size_t u, std::size_t v);

  std::span<const Word> rows() const { return {adj_.data(), n_}; }

  /// Vertices of positive degree.
  VertexSet non_isolated() const;

  /// Subgraph induced on `keep`, relabeled to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const;

  /// Same graph with vertex v renamed perm[v].
  Graph relabeled(std::span<const std::size_t> perm) const;

  F2Matrix adjacency() const { return F2Matrix::from_rows(rows()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.adj_[i] != b.adj_[i]) return false;
    return true;
  }

 private:
  void check_pair(std::size_t u, std::size_t v) const;

  std::size_t n_ = 0;
  std::array<Word, kMaxOrder> adj_{};
};

/// Vertex subsets C_1..C_k of a common ground set 0..n-1.
struct CliqueFamily {
  std::size_t n = 0;
  std::vector<VertexSet> cliques;

  std::size_t size() const { return cliques.size(); }
  /// Throws InputError if a clique reaches outside 0..n-1.
  void validate() const;
  /// The representation v -> {i : v in C_i}; requires size() <= 64.
  std::vector<Word> as_representation() const;
  /// Inverse of as_representation.
  static CliqueFamily from_representation(std::size_t n, std::span<const Word> f, std::size_t width);
};

/// Edge-wise XOR. Throws InputError when orders differ.
Graph boolean_sum(std::span<const Graph> graphs);
Graph boolean_sum(const Graph& a, const Graph& b);

/// K^V_X: all pairs inside X. Throws InputError if X leaves 0..n-1.
Graph clique_graph(std::size_t n, VertexSet x);

/// Boolean sum of the cliques of F.
Graph realize(const CliqueFamily& family);

/// Lexicographically least two-element module, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_duo(const Graph& g);

/// Non-orthogonality graph of the symmetric form `gram` on F2^k: vertices are
/// the 2^k vectors (vertex index = vector bits), x ~ y iff x^T gram y = 1.
/// Requires k <= 6.
Graph nonorthogonality_graph(const F2Matrix& gram);

/// Non-orthogonality graph of the standard scalar product on F2^k, k <= 5.
Graph ortho_graph(std::size_t k);

/// Non-orthogonality graph on the even-weight vectors of F2^(k+1) (the
/// symplectic space H(k)). Vertex i is the i-th even-weight vector in
/// increasing numeric order. Requires k even and k <= 4.
Graph ortho_graph_H(std::size_t k);

/// The even-weight vectors of F2^(k+1) in the vertex order of ortho_graph_H.
std::vector<Word> even_weight_vectors(std::size_t k);

/// True iff for all distinct u, v: u ~ v exactly when |f(u) & f(v)| is odd.
bool validate_representation(const Graph& g, std::span<const Word> f);

/// G^x: delete x and toggle every pair inside N(x). The result is relabeled
/// onto the remaining n-1 vertices in increasing order.
Graph eliminate_vertex(const Graph& g, std::size_t x);

/// Common families.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
/// Triangle {0,1,2} with pendant vertices 3,4,5 attached to 0,1,2.
Graph triangle_with_pendants();

std::size_t max_clique_size(const Graph& g);

}  // namespace booldim
