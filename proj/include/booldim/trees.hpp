#pragma once

// Optimal star decompositions of trees. m(T) is the least value of
// t + 2s over decompositions of E(T) into edge-disjoint stars, where t counts
// single-edge stars and s the larger ones. It is computed by peeling either a
// cherry (a star whose leaves are leaves of T) or a leaf hanging off a degree-2
// vertex, found at the end of a longest path.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "booldim/graph.hpp"
#include "booldim/search.hpp"

namespace booldim {

class Tree {
 public:
  /// Throws InputError unless g is connected with n - 1 edges and n >= 1.
  explicit Tree(Graph g);

  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  std::size_t degree(std::size_t v) const { return degree_[v]; }

 private:
  Graph graph_;
  std::vector<std::size_t> degree_;
};

struct Star {
  std::size_t center = 0;
  VertexSet leaves = 0;

  std::size_t edge_count() const { return static_cast<std::size_t>(std::popcount(leaves)); }
  bool trivial() const { return edge_count() == 1; }
};

struct StarDecomposition {
  std::vector<Star> stars;

  std::size_t trivial_count() const;
  std::size_t nontrivial_count() const;
  std::size_t value() const { return trivial_count() + 2 * nontrivial_count(); }
};

/// Edge-disjoint stars, each centred on its shared vertex, covering E(T).
bool is_valid_decomposition(const Tree& t, const StarDecomposition& sigma);

struct BaseCase {};
struct Cherry {
  std::size_t center = 0;
  VertexSet leaves = 0;          // neighbours of degree 1
  VertexSet subtree_roots = 0;   // remaining neighbours
};
struct Deg2 {
  std::size_t y = 0;  // degree-2 vertex
  std::size_t z = 0;  // its leaf neighbour
};
using Reduction = std::variant<BaseCase, Cherry, Deg2>;

/// Classifies the second-to-last vertex of a longest path (BFS from the least
/// vertex, then from the least farthest vertex). Trees with <= 2 vertices are
/// the base case.
Reduction find_reduction(const Tree& t);

struct MStarResult {
  std::size_t value = 0;
  StarDecomposition witness;
};

MStarResult m_star(const Tree& t);

/// Each single-edge star becomes its edge; a star with centre c and leaves
/// L > 1 becomes the two cliques {c} + L and L. Throws InputError if sigma is
/// not a valid decomposition of t.
CliqueFamily decomposition_to_cliques(const Tree& t, const StarDecomposition& sigma);

struct TreeTheoremValues {
  std::size_t ind = 0;
  std::size_t boolean = 0;
  std::size_t m = 0;

  bool holds() const { return ind == boolean && boolean == m; }
};

/// ind_mod2, boolean_dim and m_star, each computed by its own route.
TreeTheoremValues tree_theorem_values(const Tree& t, const SearchLimits& limits = {});
bool verify_tree_theorem(const Tree& t, const SearchLimits& limits = {});

/// Centre-rooted AHU encoding; equal iff the trees are isomorphic.
std::string canonical_form(const Tree& t);

/// All trees on n vertices up to isomorphism, sorted by canonical form.
std::vector<Tree> enumerate_trees(std::size_t n);

/// Spider with `legs` paths of `leg_length` edges each joined at vertex 0.
Tree spider(std::size_t legs, std::size_t leg_length);

}  // namespace booldim
