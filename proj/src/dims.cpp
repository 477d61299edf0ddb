#include "booldim/dims.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <future>
#include <limits>
#include <string>

#include "booldim/error.hpp"

namespace booldim {

std::string_view to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::AllEqual: return "ALL_EQUAL";
    case Trichotomy::GeoSympEqBoolMinus1: return "GEO_SYMP_EQ_BOOL_MINUS_1";
    case Trichotomy::GeoEqBoolLtSymp: return "GEO_EQ_BOOL_LT_SYMP";
  }
  return "?";
}

std::optional<Trichotomy> classify(std::size_t geometric, std::size_t symplectic, std::size_t boolean) {
  if (geometric == symplectic && symplectic == boolean) return Trichotomy::AllEqual;
  if (geometric == symplectic && boolean == geometric + 1) return Trichotomy::GeoSympEqBoolMinus1;
  if (geometric == boolean && boolean < symplectic) return Trichotomy::GeoEqBoolLtSymp;
  return std::nullopt;
}

namespace {

// The non-isolated part of a graph. Isolated vertices never change any of the
// dimensions: they contribute zero rows to A, and a diagonal bit on one only
// adds an independent unit row.
struct Core {
  Graph graph;
  std::vector<std::size_t> index;  // core vertex -> original vertex
};

Core core_of(const Graph& g) {
  Core c;
  const VertexSet keep = g.non_isolated();
  for (VertexSet rest = keep; rest != 0; rest &= rest - 1) c.index.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  c.graph = g.induced(keep);
  return c;
}

Word lift_mask(const Core& c, Word core_mask) {
  Word out = 0;
  for (std::size_t a = 0; a < c.index.size(); ++a)
    if ((core_mask >> a) & 1) out |= singleton(c.index[a]);
  return out;
}

void check_sweep_capacity(std::size_t m, std::size_t cap) {
  if (m > cap || m >= 63)
    throw CapacityError("diagonal sweep over " + std::to_string(m) + " non-isolated vertices exceeds the cap of " +
                        std::to_string(std::min<std::size_t>(cap, 62)));
}

struct Best {
  std::size_t value = std::numeric_limits<std::size_t>::max();
  Word mask = 0;
};

// Least-mask minimum of rank(A + D) over nonzero D in [begin, end). Stops as
// soon as rank 1 is reached (no nonzero diagonal gives rank 0).
Best sweep_nonzero(std::span<const Word> rows, Word begin, Word end, const SearchLimits& limits,
                   std::atomic<Word>& first_unit) {
  Best best;
  BudgetTicker ticker(limits);
  for (Word d = begin; d < end; ++d) {
    if ((d & 0xffffu) == 0 && d > first_unit.load(std::memory_order_relaxed)) break;
    const std::size_t r = rank_with_diagonal(rows, d);
    if (r < best.value) {
      best = {r, d};
      if (r == 1) {
        Word seen = first_unit.load(std::memory_order_relaxed);
        while (d < seen && !first_unit.compare_exchange_weak(seen, d, std::memory_order_relaxed)) {
        }
        break;
      }
    }
    ticker.tick();
  }
  return best;
}

Best sweep_nonzero_parallel(std::span<const Word> rows, const SearchLimits& limits) {
  const std::size_t m = rows.size();
  const Word total = Word{1} << m;
  std::atomic<Word> first_unit{std::numeric_limits<Word>::max()};
  const unsigned workers = std::max(1u, limits.workers);
  if (workers == 1 || total < 4096) return sweep_nonzero(rows, 1, total, limits, first_unit);

  const Word chunk = (total - 1 + workers - 1) / workers;
  std::vector<std::future<Best>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    const Word begin = 1 + w * chunk;
    const Word end = std::min(total, begin + chunk);
    if (begin >= end) break;
    parts.push_back(std::async(std::launch::async, [&, begin, end] {
      return sweep_nonzero(rows, begin, end, limits, first_unit);
    }));
  }
  Best best;
  for (auto& part : parts) {
    const Best b = part.get();
    if (b.value < best.value) best = b;  // chunks are in increasing mask order
  }
  return best;
}

struct SweepOutcome {
  std::size_t symplectic = 0;
  std::size_t geometric = 0;
  Word geometric_mask = 0;
  std::size_t boolean = 0;
  Word boolean_mask = 0;
};

SweepOutcome sweep(const Core& c, const SweepOptions& options) {
  const std::size_t m = c.graph.order();
  check_sweep_capacity(m, options.max_order);
  SweepOutcome out;
  if (m == 0) return out;
  const auto rows = c.graph.rows();
  out.symplectic = rank_with_diagonal(rows, 0);
  const std::size_t alternating_cost = out.symplectic == 0 ? 0 : out.symplectic + 1;
  const Best nz = sweep_nonzero_parallel(rows, options.limits);
  if (out.symplectic <= nz.value) {
    out.geometric = out.symplectic;
    out.geometric_mask = 0;
  } else {
    out.geometric = nz.value;
    out.geometric_mask = nz.mask;
  }
  if (alternating_cost <= nz.value) {
    out.boolean = alternating_cost;
    out.boolean_mask = 0;
  } else {
    out.boolean = nz.value;
    out.boolean_mask = nz.mask;
  }
  return out;
}

CliqueFamily boolean_witness(const Graph& g, const Core& c, Word core_mask, std::size_t expected) {
  const std::size_t m = c.graph.order();
  CliqueFamily family{g.order(), {}};
  if (m == 0) return family;
  const F2Matrix gram = add_diagonal(c.graph.adjacency(), DiagonalMask(m, core_mask));
  const InnerFactorization fac = inner_factorization(gram);
  if (fac.width != expected) throw std::logic_error("inner factorization width disagrees with the sweep");
  std::vector<Word> f(g.order(), 0);
  for (std::size_t a = 0; a < m; ++a) f[c.index[a]] = fac.vectors[a];
  family = CliqueFamily::from_representation(g.order(), f, fac.width);
  if (!validate_representation(g, f) || realize(family) != g)
    throw std::logic_error("Boolean dimension witness failed validation");
  return family;
}

}  // namespace

std::size_t symplectic_dim(const Graph& g) { return rank(g.adjacency()); }

GeometricResult geometric_dim(const Graph& g, const SweepOptions& options) {
  const Core c = core_of(g);
  const SweepOutcome s = sweep(c, options);
  return {s.geometric, DiagonalMask(g.order(), lift_mask(c, s.geometric_mask))};
}

BooleanResult boolean_dim(const Graph& g, const SweepOptions& options) {
  const Core c = core_of(g);
  const SweepOutcome s = sweep(c, options);
  return {s.boolean, boolean_witness(g, c, s.boolean_mask, s.boolean)};
}

std::size_t boolean_dim_value(const Graph& g, std::size_t max_order) { return boolean_dim_value(g.rows(), max_order); }

std::size_t boolean_dim_value(std::span<const Word> adjacency, std::size_t max_order) {
  // Compact the non-isolated rows.
  VertexSet keep = 0;
  for (std::size_t v = 0; v < adjacency.size(); ++v)
    if (adjacency[v] != 0) keep |= singleton(v);
  std::array<Word, kMaxOrder> rows{};
  std::size_t m = 0;
  if (keep == low_bits(adjacency.size())) {
    m = adjacency.size();
    check_sweep_capacity(m, max_order);
    std::copy(adjacency.begin(), adjacency.end(), rows.begin());
  } else {
    std::array<std::size_t, kMaxOrder> pos{};
    for (VertexSet rest = keep; rest != 0; rest &= rest - 1) pos[static_cast<std::size_t>(std::countr_zero(rest))] = m++;
    check_sweep_capacity(m, max_order);
    for (VertexSet rest = keep; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      Word row = 0;
      for (VertexSet nb = adjacency[v]; nb != 0; nb &= nb - 1) row |= singleton(pos[static_cast<std::size_t>(std::countr_zero(nb))]);
      rows[pos[v]] = row;
    }
  }
  if (m == 0) return 0;
  const std::span<const Word> view(rows.data(), m);
  const std::size_t r = rank_with_diagonal(view, 0);
  std::size_t best = r + 1;  // r > 0 here
  const Word total = Word{1} << m;
  for (Word d = 1; d < total && best > 1; ++d) best = std::min(best, rank_with_diagonal(view, d));
  return best;
}

std::optional<std::size_t> boolean_dim_oracle(const Graph& g, std::size_t k_max) {
  const std::size_t n = g.order();
  if (n > 6) throw CapacityError("boolean_dim_oracle supports n <= 6");
  if (k_max > 5) throw CapacityError("boolean_dim_oracle supports k_max <= 5");

  // Pair {i<j} -> bit index; a clique becomes the mask of its pairs.
  std::array<std::array<std::size_t, 6>, 6> pair_bit{};
  std::size_t bits = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair_bit[i][j] = bits++;
  auto edge_mask = [&](VertexSet s) {
    Word e = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (((s >> i) & 1) && ((s >> j) & 1)) e |= Word{1} << pair_bit[i][j];
    return e;
  };
  Word target = 0;
  for (auto [u, v] : g.edges()) target |= Word{1} << pair_bit[u][v];

  std::vector<Word> cliques;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
    if (std::popcount(s) >= 2) cliques.push_back(edge_mask(s));

  // Distinct subsets in increasing index order; a repeated subset cancels
  // and would only witness a smaller family.
  auto search = [&](auto&& self, std::size_t start, std::size_t left, Word acc) -> bool {
    if (left == 0) return acc == target;
    for (std::size_t i = start; i + left <= cliques.size(); ++i)
      if (self(self, i + 1, left - 1, acc ^ cliques[i])) return true;
    return false;
  };
  for (std::size_t k = 0; k <= k_max; ++k)
    if (search(search, 0, k, 0)) return k;
  return std::nullopt;
}

DimensionReport dimension_report(const Graph& g, const SweepOptions& options) {
  const Core c = core_of(g);
  const SweepOutcome s = sweep(c, options);
  DimensionReport report;
  report.symplectic = s.symplectic;
  report.geometric = s.geometric;
  report.boolean = s.boolean;
  report.inner = s.boolean;
  const auto kind = classify(s.geometric, s.symplectic, s.boolean);
  if (!kind) throw std::logic_error("dimensions match no case of the trichotomy");
  report.trichotomy_case = *kind;
  report.witness_diagonal = DiagonalMask(g.order(), lift_mask(c, s.geometric_mask));
  report.witness_cliques = boolean_witness(g, c, s.boolean_mask, s.boolean);
  return report;
}

InnerFactorization inner_factorization(const F2Matrix& gram) {
  const std::size_t n = gram.order();
  if (n >= 64) throw CapacityError("inner_factorization supports order <= 63");
  if (!gram.is_symmetric()) throw InputError("inner_factorization needs a symmetric matrix");

  // Formal basis e_0..e_{n-1} with <e_i, e_j> = gram[i][j]. An alternating
  // gram gets an extra unit vector e_n orthogonal to everything, so the space
  // always has a non-isotropic vector to start from.
  const bool extra = is_alternating(gram) && rank(gram) > 0;
  const std::size_t dim = n + (extra ? 1 : 0);
  std::array<Word, kMaxOrder> form{};
  for (std::size_t i = 0; i < n; ++i) form[i] = gram.row(i);
  if (extra) form[n] = singleton(n);

  auto phi = [&](Word x, Word y) {
    bool acc = false;
    for (Word rest = x; rest != 0; rest &= rest - 1) acc ^= parity(form[static_cast<std::size_t>(std::countr_zero(rest))] & y);
    return acc;
  };

  std::vector<Word> pending;
  for (std::size_t i = 0; i < dim; ++i) pending.push_back(singleton(i));
  std::vector<Word> ortho;  // orthonormal vectors, as combinations of the e_i

  while (true) {
    // Drop vectors orthogonal to everything left: they lie in the radical.
    std::erase_if(pending, [&](Word w) {
      return std::none_of(pending.begin(), pending.end(), [&](Word u) { return phi(w, u); });
    });
    if (pending.empty()) break;

    auto it = std::find_if(pending.begin(), pending.end(), [&](Word w) { return phi(w, w); });
    if (it != pending.end()) {
      const Word o = *it;
      pending.erase(it);
      for (Word& w : pending)
        if (phi(w, o)) w ^= o;
      ortho.push_back(o);
      continue;
    }

    // Everything left is isotropic: split off a hyperbolic pair and trade it,
    // together with one orthonormal vector, for three orthonormal vectors.
    std::size_t a = 0, b = 0;
    bool found = false;
    for (a = 0; a < pending.size() && !found; ++a)
      for (b = a + 1; b < pending.size(); ++b)
        if (phi(pending[a], pending[b])) {
          found = true;
          break;
        }
    if (!found) throw std::logic_error("inner_factorization: isotropic remainder without a hyperbolic pair");
    --a;
    const Word w1 = pending[a];
    const Word w2 = pending[b];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(b));
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(a));
    for (Word& w : pending) {
      const bool c1 = phi(w, w1);
      const bool c2 = phi(w, w2);
      if (c2) w ^= w1;
      if (c1) w ^= w2;
    }
    if (ortho.empty()) throw std::logic_error("inner_factorization: no orthonormal vector to absorb a hyperbolic pair");
    const Word o = ortho.back();
    ortho.pop_back();
    ortho.push_back(o ^ w1);
    ortho.push_back(o ^ w2);
    ortho.push_back(o ^ w1 ^ w2);
  }

  InnerFactorization out;
  out.width = ortho.size();
  out.vectors.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k < ortho.size(); ++k)
      if (phi(singleton(v), ortho[k])) out.vectors[v] |= singleton(k);
  return out;
}

bool is_independent_mod2(const Graph& g, VertexSet a) {
  if ((a & ~g.vertices()) != 0) throw InputError("is_independent_mod2: vertex out of range");
  const auto size = static_cast<std::size_t>(std::popcount(a));
  if (size > 20) throw CapacityError("is_independent_mod2 supports |A| <= 20");
  std::array<std::size_t, 20> members{};
  std::size_t k = 0;
  for (VertexSet rest = a; rest != 0; rest &= rest - 1) members[k++] = static_cast<std::size_t>(std::countr_zero(rest));

  // Gray-code walk over nonempty X within A, keeping s = sum of rows of X.
  VertexSet x = 0;
  Word s = 0;
  for (std::uint32_t step = 1; step < (std::uint32_t{1} << size); ++step) {
    const auto flip = members[static_cast<std::size_t>(std::countr_zero(step))];
    x ^= singleton(flip);
    s ^= g.neighbors(flip);
    if ((s & ~x) == 0) return false;
  }
  return true;
}

namespace {

struct IndSearch {
  const Graph& g;
  BudgetTicker ticker;
  std::vector<std::size_t> order;
  std::size_t best = 0;
  VertexSet best_set = 0;

  // Can v join the independent set `a`? Only subsets X containing v are new.
  bool extends(VertexSet a, std::size_t v) {
    std::array<std::size_t, kMaxIndOrder> members{};
    std::size_t k = 0;
    for (VertexSet rest = a; rest != 0; rest &= rest - 1) members[k++] = static_cast<std::size_t>(std::countr_zero(rest));
    VertexSet x = singleton(v);
    Word s = g.neighbors(v);
    if ((s & ~x) == 0) return false;
    for (std::uint32_t step = 1; step < (std::uint32_t{1} << k); ++step) {
      const auto flip = members[static_cast<std::size_t>(std::countr_zero(step))];
      x ^= singleton(flip);
      s ^= g.neighbors(flip);
      if ((s & ~x) == 0) return false;
    }
    return true;
  }

  void run(std::size_t pos, VertexSet a, std::size_t size) {
    ticker.tick();
    if (size > best) {
      best = size;
      best_set = a;
    }
    if (pos == order.size() || size + (order.size() - pos) <= best) return;
    const std::size_t v = order[pos];
    if (extends(a, v)) run(pos + 1, a | singleton(v), size + 1);
    run(pos + 1, a, size);
  }
};

}  // namespace

IndResult ind_mod2(const Graph& g, const SearchLimits& limits) {
  const VertexSet core = g.non_isolated();
  if (std::popcount(core) > static_cast<int>(kMaxIndOrder))
    throw CapacityError("ind_mod2 supports at most 16 non-isolated vertices");
  IndSearch search{g, BudgetTicker(limits), {}, 0, 0};
  for (VertexSet rest = core; rest != 0; rest &= rest - 1) search.order.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](std::size_t u, std::size_t v) { return g.degree(u) > g.degree(v); });
  search.run(0, 0, 0);
  return {search.best, {search.best_set, search.best}};
}

}  // namespace booldim
