#pragma once

// Tournaments, inversions and the inversion index.
//
// Inverting X reverses every arc with both ends in X, so a sequence of
// inversions reverses exactly the arcs lying in an odd number of the X_i: it
// is the Boolean sum of T with the graph realized by the X_i as cliques. The
// inversion index is therefore the least Boolean dimension of a disagreement
// graph between T and some linear order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "booldim/graph.hpp"
#include "booldim/search.hpp"

namespace booldim {

class Tournament {
 public:
  Tournament() = default;
  /// The transitive tournament 0 -> 1 -> ... -> n-1 (arc i -> j for i < j).
  static Tournament transitive(std::size_t n);
  /// Row i holds the out-neighbours of i. Throws InputError unless the
  /// diagonal is zero and every pair carries exactly one arc.
  static Tournament from_rows(std::span<const Word> rows);

  std::size_t order() const { return n_; }
  VertexSet vertices() const { return low_bits(n_); }
  bool arc(std::size_t from, std::size_t to) const { return (out_[from] >> to) & 1; }
  VertexSet out_neighbors(std::size_t v) const { return out_[v]; }
  std::size_t out_degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(out_[v])); }
  std::span<const Word> rows() const { return {out_.data(), n_}; }

  /// Reverses the arc between u and v.
  void reverse(std::size_t u, std::size_t v);
  /// Orients the pair {from, to} as from -> to.
  void orient(std::size_t from, std::size_t to);

  /// Subtournament induced on `keep`, relabeled in increasing order.
  Tournament induced(VertexSet keep) const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.out_[i] != b.out_[i]) return false;
    return true;
  }

 private:
  explicit Tournament(std::size_t n);

  std::size_t n_ = 0;
  std::array<Word, kMaxOrder> out_{};
};

struct InversionCertificate {
  std::vector<VertexSet> subsets;     // X_0, X_1, ... applied in order
  std::vector<std::size_t> order;     // topological order of the result
};

struct InversionResult {
  std::size_t index = 0;
  InversionCertificate certificate;
};

/// Reverses all arcs inside X. Throws InputError if X leaves the vertex set.
Tournament invert(const Tournament& t, VertexSet x);

/// Applies the subsets one after another.
Tournament invert_sequence(const Tournament& t, std::span<const VertexSet> subsets);

/// Reverses every arc whose pair is an edge of g (the Boolean sum T + G).
Tournament boolean_sum(const Tournament& t, const Graph& g);

/// The topological order (source first) when T is acyclic, else nullopt.
std::optional<std::vector<std::size_t>> is_acyclic(const Tournament& t);

/// Pairs whose arc runs against `order` (order[0] first). Throws InputError
/// unless `order` is a permutation of the vertices.
Graph disagreement_graph(const Tournament& t, std::span<const std::size_t> order);

/// Replays the certificate and checks the result is acyclic with the stored
/// order.
bool replay(const Tournament& t, const InversionCertificate& cert);

/// Exact inversion index by branch and bound over vertex orders. Requires
/// n <= 9 (10 with a budget). Result and certificate do not depend on the
/// number of workers: the certificate is the lexicographically least optimal
/// order.
InversionResult inversion_index(const Tournament& t, const SearchLimits& limits = {});

/// Direct search over sets of inverted subsets (size >= 2, pairwise
/// distinct). Requires n <= 5 and m_max <= 2.
std::optional<std::size_t> inversion_index_oracle(const Tournament& t, std::size_t m_max);

/// n three-cycles placed along a transitive tournament: block i is
/// {3i, 3i+1, 3i+2} with 3i -> 3i+1 -> 3i+2 -> 3i, and every vertex of block i
/// beats every vertex of block j > i.
Tournament gen_c3_sum(std::size_t n);

/// Arcs i -> i+1 and j -> i for j > i + 1.
Tournament gen_strong_path(std::size_t n);

/// gen_strong_path(n) with the arc between n-1 and 0 reversed (n >= 3).
Tournament gen_antichain_cn(std::size_t n);

/// Number of directed 3-cycles through each vertex.
std::vector<std::size_t> three_cycle_counts(const Tournament& t);

/// Is S isomorphic to an induced subtournament of T? Requires |T| <= 10.
bool embeds(const Tournament& s, const Tournament& t);

/// Lexicographically least upper-triangle bit string over all relabelings,
/// packed most-significant-first. Requires n <= 8.
std::uint64_t canonical_code(const Tournament& t);

/// All tournaments on n vertices up to isomorphism, sorted by canonical code.
/// Requires n <= 7.
std::vector<Tournament> enumerate_tournaments(std::size_t n);

/// Optional memo for per-tournament indices in table sweeps, keyed by the
/// canonical code.
class IndexCache {
 public:
  virtual ~IndexCache() = default;
  virtual std::optional<std::size_t> lookup(std::size_t n, std::uint64_t code) = 0;
  virtual void store(std::size_t n, std::uint64_t code, std::size_t index) = 0;
};

struct TableResult {
  std::size_t max_index = 0;
  std::size_t tournament_count = 0;  // isomorphism classes examined
  Tournament attaining;              // first class (by code) with max_index
};

/// i(n): the largest inversion index over all n-vertex tournaments. Requires
/// n <= 6. Throws std::logic_error if the counting bounds
/// ceil((n-1)/2 - log2 n) <= i(n) <= n - 4 fail for n >= 6.
TableResult max_inversion_table(std::size_t n, const SearchLimits& limits = {}, IndexCache* cache = nullptr);

/// Text format: first line n, then n lines of n characters '0'/'1'; entry
/// (i, j) = 1 means the arc i -> j.
Tournament parse_tournament(std::string_view text);
std::string write_tournament(const Tournament& t);

}  // namespace booldim
