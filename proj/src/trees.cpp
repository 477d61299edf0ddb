#include "booldim/trees.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "booldim/dims.hpp"
#include "booldim/error.hpp"

namespace booldim {

namespace {

std::size_t lowest(VertexSet s) { return static_cast<std::size_t>(std::countr_zero(s)); }

// Vertices reachable from `start` inside `alive`.
VertexSet component(const Graph& g, VertexSet alive, std::size_t start) {
  VertexSet seen = singleton(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest != 0; rest &= rest - 1) next |= g.neighbors(lowest(rest));
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

struct Bfs {
  std::array<std::size_t, kMaxOrder> parent{};
  std::size_t farthest = 0;
};

// BFS inside `alive`; `farthest` is the least-index vertex at maximum depth.
Bfs bfs(const Graph& g, VertexSet alive, std::size_t root) {
  Bfs out;
  out.parent[root] = root;
  VertexSet seen = singleton(root);
  VertexSet layer = seen;
  while (true) {
    VertexSet next = 0;
    for (VertexSet rest = layer; rest != 0; rest &= rest - 1) {
      const std::size_t u = lowest(rest);
      for (VertexSet nb = g.neighbors(u) & alive & ~seen & ~next; nb != 0; nb &= nb - 1) {
        out.parent[lowest(nb)] = u;
        next |= singleton(lowest(nb));
      }
    }
    if (next == 0) break;
    seen |= next;
    layer = next;
  }
  out.farthest = lowest(layer);
  return out;
}

Reduction reduce(const Graph& g, VertexSet alive) {
  if (std::popcount(alive) <= 2) return BaseCase{};
  const std::size_t a = bfs(g, alive, lowest(alive)).farthest;
  const Bfs from_a = bfs(g, alive, a);
  const std::size_t b = from_a.farthest;
  const std::size_t x = from_a.parent[b];
  const VertexSet nbrs = g.neighbors(x) & alive;
  if (std::popcount(nbrs) == 2) return Deg2{x, b};
  VertexSet leaves = 0;
  for (VertexSet rest = nbrs; rest != 0; rest &= rest - 1) {
    const std::size_t u = lowest(rest);
    if (std::popcount(g.neighbors(u) & alive) == 1) leaves |= singleton(u);
  }
  return Cherry{x, leaves, nbrs & ~leaves};
}

void decompose(const Graph& g, VertexSet alive, StarDecomposition& out) {
  const int count = std::popcount(alive);
  if (count <= 1) return;
  if (count == 2) {
    const std::size_t u = lowest(alive);
    out.stars.push_back({u, alive & ~singleton(u)});
    return;
  }
  const Reduction r = reduce(g, alive);
  if (const auto* cherry = std::get_if<Cherry>(&r)) {
    out.stars.push_back({cherry->center, cherry->leaves | cherry->subtree_roots});
    const VertexSet rest = alive & ~singleton(cherry->center);
    for (VertexSet roots = cherry->subtree_roots; roots != 0; roots &= roots - 1)
      decompose(g, component(g, rest, lowest(roots)), out);
  } else if (const auto* d = std::get_if<Deg2>(&r)) {
    decompose(g, alive & ~singleton(d->z), out);
    out.stars.push_back({d->y, singleton(d->z)});
  }
}

}  // namespace

Tree::Tree(Graph g) : graph_(std::move(g)) {
  const std::size_t n = graph_.order();
  if (n == 0) throw InputError("a tree needs at least one vertex");
  if (graph_.edge_count() != n - 1) throw InputError("not a tree: edge count is not n - 1");
  if (component(graph_, graph_.vertices(), 0) != graph_.vertices()) throw InputError("not a tree: graph is disconnected");
  for (std::size_t v = 0; v < n; ++v) degree_.push_back(graph_.degree(v));
}

std::size_t StarDecomposition::trivial_count() const {
  return static_cast<std::size_t>(std::count_if(stars.begin(), stars.end(), [](const Star& s) { return s.trivial(); }));
}

std::size_t StarDecomposition::nontrivial_count() const { return stars.size() - trivial_count(); }

bool is_valid_decomposition(const Tree& t, const StarDecomposition& sigma) {
  const Graph& g = t.graph();
  std::array<Word, kMaxOrder> covered{};
  for (const Star& s : sigma.stars) {
    if (s.center >= t.order() || s.leaves == 0) return false;
    if ((s.leaves & ~g.neighbors(s.center)) != 0) return false;
    for (VertexSet rest = s.leaves; rest != 0; rest &= rest - 1) {
      const std::size_t u = lowest(rest);
      if (covered[s.center] & singleton(u)) return false;
      covered[s.center] |= singleton(u);
      covered[u] |= singleton(s.center);
    }
  }
  for (std::size_t v = 0; v < t.order(); ++v)
    if (covered[v] != g.neighbors(v)) return false;
  return true;
}

Reduction find_reduction(const Tree& t) { return reduce(t.graph(), t.graph().vertices()); }

MStarResult m_star(const Tree& t) {
  MStarResult out;
  decompose(t.graph(), t.graph().vertices(), out.witness);
  out.value = out.witness.value();
  return out;
}

CliqueFamily decomposition_to_cliques(const Tree& t, const StarDecomposition& sigma) {
  if (!is_valid_decomposition(t, sigma)) throw InputError("not a star decomposition of this tree");
  CliqueFamily family{t.order(), {}};
  for (const Star& s : sigma.stars) {
    if (s.trivial()) {
      family.cliques.push_back(singleton(s.center) | s.leaves);
    } else {
      family.cliques.push_back(singleton(s.center) | s.leaves);
      family.cliques.push_back(s.leaves);
    }
  }
  return family;
}

TreeTheoremValues tree_theorem_values(const Tree& t, const SearchLimits& limits) {
  TreeTheoremValues v;
  v.ind = ind_mod2(t.graph(), limits).value;
  v.boolean = boolean_dim(t.graph(), SweepOptions{limits}).value;
  v.m = m_star(t).value;
  return v;
}

bool verify_tree_theorem(const Tree& t, const SearchLimits& limits) { return tree_theorem_values(t, limits).holds(); }

namespace {

std::string encode(const Graph& g, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (VertexSet nb = g.neighbors(v); nb != 0; nb &= nb - 1)
    if (lowest(nb) != parent) children.push_back(encode(g, lowest(nb), v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

}  // namespace

std::string canonical_form(const Tree& t) {
  const Graph& g = t.graph();
  VertexSet alive = g.vertices();
  // Strip leaves until one or two centres remain.
  while (std::popcount(alive) > 2) {
    VertexSet leaves = 0;
    for (VertexSet rest = alive; rest != 0; rest &= rest - 1)
      if (std::popcount(g.neighbors(lowest(rest)) & alive) <= 1) leaves |= singleton(lowest(rest));
    alive &= ~leaves;
  }
  const std::size_t none = kMaxOrder;
  std::string best = encode(g, lowest(alive), none);
  if (std::popcount(alive) == 2) best = std::min(best, encode(g, lowest(alive & (alive - 1)), none));
  return best;
}

std::vector<Tree> enumerate_trees(std::size_t n) {
  if (n == 0) return {};
  if (n > kMaxOrder) throw CapacityError("enumerate_trees supports n <= 64");
  std::vector<Tree> level{Tree(Graph(1))};
  for (std::size_t m = 2; m <= n; ++m) {
    std::map<std::string, Tree> next;
    for (const Tree& t : level)
      for (std::size_t v = 0; v + 1 < m; ++v) {
        Graph g(m);
        for (auto [a, b] : t.graph().edges()) g.add_edge(a, b);
        g.add_edge(v, m - 1);
        Tree grown(g);
        next.try_emplace(canonical_form(grown), grown);
      }
    level.clear();
    for (auto& [key, tree] : next) level.push_back(tree);
  }
  return level;
}

Tree spider(std::size_t legs, std::size_t leg_length) {
  Graph g(1 + legs * leg_length);
  std::size_t next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < leg_length; ++i, ++next) {
      g.add_edge(prev, next);
      prev = next;
    }
  }
  return Tree(g);
}

}  // namespace booldim
