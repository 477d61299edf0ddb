#include "booldim/tournament.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "booldim/dims.hpp"
#include "booldim/error.hpp"

namespace booldim {

namespace {

std::size_t lowest(VertexSet s) { return static_cast<std::size_t>(std::countr_zero(s)); }

void check_subset(const Tournament& t, VertexSet x) {
  if ((x & ~t.vertices()) != 0) throw InputError("vertex set reaches outside the tournament");
}

}  // namespace

Tournament::Tournament(std::size_t n) : n_(n) {
  if (n > kMaxOrder) throw CapacityError("tournament order " + std::to_string(n) + " exceeds 64");
}

Tournament Tournament::transitive(std::size_t n) {
  Tournament t(n);
  for (std::size_t i = 0; i < n; ++i) t.out_[i] = low_bits(n) & ~low_bits(i + 1);
  return t;
}

Tournament Tournament::from_rows(std::span<const Word> rows) {
  Tournament t(rows.size());
  const Word mask = low_bits(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] & ~mask) != 0) throw InputError("tournament row has bits beyond the order");
    if ((rows[i] >> i) & 1) throw InputError("tournament has a loop at vertex " + std::to_string(i));
    t.out_[i] = rows[i];
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (t.arc(i, j) == t.arc(j, i))
        throw InputError("pair {" + std::to_string(i) + "," + std::to_string(j) + "} does not carry exactly one arc");
  return t;
}

void Tournament::reverse(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_ || u == v) throw InputError("reverse: invalid vertex pair");
  out_[u] ^= singleton(v);
  out_[v] ^= singleton(u);
}

void Tournament::orient(std::size_t from, std::size_t to) {
  if (!arc(from, to)) reverse(from, to);
}

Tournament Tournament::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<std::size_t> index;
  for (VertexSet rest = keep; rest != 0; rest &= rest - 1) index.push_back(lowest(rest));
  Tournament out(index.size());
  for (std::size_t a = 0; a < index.size(); ++a)
    for (std::size_t b = 0; b < index.size(); ++b)
      if (arc(index[a], index[b])) out.out_[a] |= singleton(b);
  return out;
}

Tournament invert(const Tournament& t, VertexSet x) {
  check_subset(t, x);
  Tournament out = t;
  for (VertexSet a = x; a != 0; a &= a - 1)
    for (VertexSet b = a & (a - 1); b != 0; b &= b - 1) out.reverse(lowest(a), lowest(b));
  return out;
}

Tournament invert_sequence(const Tournament& t, std::span<const VertexSet> subsets) {
  Tournament out = t;
  for (VertexSet x : subsets) out = invert(out, x);
  return out;
}

Tournament boolean_sum(const Tournament& t, const Graph& g) {
  if (g.order() != t.order()) throw InputError("boolean_sum: graph and tournament orders differ");
  Tournament out = t;
  for (auto [u, v] : g.edges()) out.reverse(u, v);
  return out;
}

std::optional<std::vector<std::size_t>> is_acyclic(const Tournament& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> by_score(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t rank = n - 1 - t.out_degree(v);
    if (by_score[rank] != n) return std::nullopt;
    by_score[rank] = v;
  }
  return by_score;
}

Graph disagreement_graph(const Tournament& t, std::span<const std::size_t> order) {
  const std::size_t n = t.order();
  if (order.size() != n) throw InputError("order has the wrong length");
  VertexSet seen = 0;
  for (std::size_t v : order) {
    if (v >= n || (seen & singleton(v))) throw InputError("order is not a permutation of the vertices");
    seen |= singleton(v);
  }
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (t.arc(order[b], order[a])) g.add_edge(order[a], order[b]);
  return g;
}

bool replay(const Tournament& t, const InversionCertificate& cert) {
  for (VertexSet x : cert.subsets)
    if ((x & ~t.vertices()) != 0) return false;
  const auto order = is_acyclic(invert_sequence(t, cert.subsets));
  return order && *order == cert.order;
}

namespace {

// Depth-first search over vertex orders. The disagreement graph restricted to
// an order prefix is already fixed, and Boolean dimension can only grow on
// induced supergraphs, so its value bounds every completion.
class OrderSearch {
 public:
  OrderSearch(const Tournament& t, std::size_t incumbent, std::atomic<std::size_t>& shared, std::size_t floor,
              const SearchLimits& limits)
      : t_(t), n_(t.order()), best_(incumbent), shared_(shared), floor_(floor), ticker_(limits) {}

  void run_from(std::size_t first) {
    prefix_[0] = first;
    rows_[0] = 0;
    descend(1, singleton(first));
  }

  std::size_t best() const { return best_; }
  const std::vector<std::size_t>& best_order() const { return best_order_; }
  bool found() const { return !best_order_.empty(); }

 private:
  bool done() const { return best_ <= floor_; }

  void descend(std::size_t depth, VertexSet used) {
    if (done()) return;
    for (std::size_t v = 0; v < n_ && !done(); ++v) {
      if (used & singleton(v)) continue;
      ticker_.tick();
      prefix_[depth] = v;
      Word row = 0;
      for (std::size_t a = 0; a < depth; ++a) {
        if (t_.arc(v, prefix_[a])) {
          row |= singleton(a);
          rows_[a] |= singleton(depth);
        } else {
          rows_[a] &= ~singleton(depth);
        }
      }
      rows_[depth] = row;
      const std::size_t bound = boolean_dim_value(std::span<const Word>(rows_.data(), depth + 1), kMaxOrder);
      const bool leaf = depth + 1 == n_;
      if (bound < best_ && bound <= shared_.load(std::memory_order_relaxed)) {
        if (leaf) {
          best_ = bound;
          best_order_.assign(prefix_.begin(), prefix_.begin() + static_cast<std::ptrdiff_t>(n_));
          std::size_t seen = shared_.load(std::memory_order_relaxed);
          while (bound < seen && !shared_.compare_exchange_weak(seen, bound, std::memory_order_relaxed)) {
          }
        } else {
          descend(depth + 1, used | singleton(v));
        }
      }
      for (std::size_t a = 0; a < depth; ++a) rows_[a] &= ~singleton(depth);
    }
  }

  const Tournament& t_;
  std::size_t n_;
  std::size_t best_;
  std::atomic<std::size_t>& shared_;
  std::size_t floor_;
  BudgetTicker ticker_;
  std::array<std::size_t, kMaxOrder> prefix_{};
  std::array<Word, kMaxOrder> rows_{};
  std::vector<std::size_t> best_order_;
};

}  // namespace

InversionResult inversion_index(const Tournament& t, const SearchLimits& limits) {
  const std::size_t n = t.order();
  if (n > 10) throw CapacityError("inversion_index supports n <= 10");
  if (auto order = is_acyclic(t)) return {0, {{}, *order}};

  // Seed with the score order; the search then looks for the lexicographically
  // least order whose value is at most the seed's.
  std::vector<std::size_t> seed(n);
  std::iota(seed.begin(), seed.end(), 0);
  std::stable_sort(seed.begin(), seed.end(), [&](std::size_t a, std::size_t b) { return t.out_degree(a) > t.out_degree(b); });
  const std::size_t seed_value = boolean_dim_value(disagreement_graph(t, seed), kMaxOrder);

  std::atomic<std::size_t> shared{seed_value};
  const std::size_t floor = 1;  // not acyclic
  std::vector<std::size_t> value(n, std::numeric_limits<std::size_t>::max());
  std::vector<std::vector<std::size_t>> orders(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t first = next.fetch_add(1); first < n; first = next.fetch_add(1)) {
      OrderSearch search(t, seed_value + 1, shared, floor, limits);
      search.run_from(first);
      if (search.found()) {
        value[first] = search.best();
        orders[first] = search.best_order();
      }
    }
  };
  const unsigned workers = std::min<unsigned>(std::max(1u, limits.workers), static_cast<unsigned>(n));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }

  std::size_t pick = 0;
  for (std::size_t first = 1; first < n; ++first)
    if (value[first] < value[pick]) pick = first;
  if (orders[pick].empty()) throw std::logic_error("inversion_index: search found no order within the seed value");

  const Graph disagreement = disagreement_graph(t, orders[pick]);
  const BooleanResult dim = boolean_dim(disagreement);
  InversionResult result;
  result.index = dim.value;
  for (VertexSet c : dim.witness.cliques)
    if (std::popcount(c) >= 2) result.certificate.subsets.push_back(c);
  result.certificate.order = orders[pick];
  if (result.index != value[pick] || !replay(t, result.certificate))
    throw std::logic_error("inversion certificate failed replay");
  return result;
}

std::optional<std::size_t> inversion_index_oracle(const Tournament& t, std::size_t m_max) {
  const std::size_t n = t.order();
  if (n > 5) throw CapacityError("inversion_index_oracle supports n <= 5");
  if (m_max > 2) throw CapacityError("inversion_index_oracle supports m_max <= 2");
  std::vector<VertexSet> subsets;
  for (VertexSet x = 0; x < (VertexSet{1} << n); ++x)
    if (std::popcount(x) >= 2) subsets.push_back(x);

  if (is_acyclic(t)) return 0;
  if (m_max >= 1)
    for (VertexSet x : subsets)
      if (is_acyclic(invert(t, x))) return 1;
  if (m_max >= 2)
    for (std::size_t a = 0; a < subsets.size(); ++a) {
      const Tournament once = invert(t, subsets[a]);
      for (std::size_t b = a + 1; b < subsets.size(); ++b)
        if (is_acyclic(invert(once, subsets[b]))) return 2;
    }
  return std::nullopt;
}

Tournament gen_c3_sum(std::size_t n) {
  if (n == 0) throw InputError("gen_c3_sum needs n >= 1");
  if (3 * n > kMaxOrder) throw CapacityError("gen_c3_sum: too many blocks");
  Tournament t = Tournament::transitive(3 * n);
  for (std::size_t i = 0; i < n; ++i) t.orient(3 * i + 2, 3 * i);
  return t;
}

Tournament gen_strong_path(std::size_t n) {
  if (n == 0) throw InputError("gen_strong_path needs n >= 1");
  Tournament t = Tournament::transitive(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) t.orient(j, i);
  return t;
}

Tournament gen_antichain_cn(std::size_t n) {
  if (n < 3) throw InputError("gen_antichain_cn needs n >= 3");
  Tournament t = gen_strong_path(n);
  t.reverse(n - 1, 0);
  return t;
}

std::vector<std::size_t> three_cycle_counts(const Tournament& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> count(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const bool cyclic = (t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) || (t.arc(b, a) && t.arc(c, b) && t.arc(a, c));
        if (cyclic) {
          ++count[a];
          ++count[b];
          ++count[c];
        }
      }
  return count;
}

namespace {

struct EmbedSearch {
  const Tournament& s;
  const Tournament& t;
  std::vector<std::size_t> s_cycles, t_cycles;
  std::array<std::size_t, kMaxOrder> image{};

  bool compatible(std::size_t v, std::size_t w) const {
    return s.out_degree(v) <= t.out_degree(w) &&
           s.order() - 1 - s.out_degree(v) <= t.order() - 1 - t.out_degree(w) && s_cycles[v] <= t_cycles[w];
  }

  bool extend(std::size_t v, VertexSet used) {
    if (v == s.order()) return true;
    for (std::size_t w = 0; w < t.order(); ++w) {
      if ((used & singleton(w)) || !compatible(v, w)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = s.arc(u, v) == t.arc(image[u], w);
      if (!ok) continue;
      image[v] = w;
      if (extend(v + 1, used | singleton(w))) return true;
    }
    return false;
  }
};

std::uint64_t code_under(const Tournament& t, std::span<const std::size_t> perm) {
  std::uint64_t code = 0;
  const std::size_t n = t.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (t.arc(perm[i], perm[j]) ? 1u : 0u);
  return code;
}

}  // namespace

bool embeds(const Tournament& s, const Tournament& t) {
  if (t.order() > 10) throw CapacityError("embeds supports host tournaments with <= 10 vertices");
  if (s.order() > t.order()) return false;
  EmbedSearch search{s, t, three_cycle_counts(s), three_cycle_counts(t), {}};
  return search.extend(0, 0);
}

std::uint64_t canonical_code(const Tournament& t) {
  if (t.order() > 8) throw CapacityError("canonical_code supports n <= 8");
  std::vector<std::size_t> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  do {
    best = std::min(best, code_under(t, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Tournament> enumerate_tournaments(std::size_t n) {
  if (n > 7) throw CapacityError("enumerate_tournaments supports n <= 7");
  if (n == 0) return {Tournament::transitive(0)};
  std::vector<Tournament> level{Tournament::transitive(1)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::map<std::uint64_t, Tournament> next;
    for (const Tournament& base : level)
      for (VertexSet beaten = 0; beaten < (VertexSet{1} << (m - 1)); ++beaten) {
        std::array<Word, kMaxOrder> rows{};
        for (std::size_t v = 0; v + 1 < m; ++v) {
          rows[v] = base.out_neighbors(v);
          if (!(beaten & singleton(v))) rows[v] |= singleton(m - 1);
        }
        rows[m - 1] = beaten;
        const Tournament grown = Tournament::from_rows({rows.data(), m});
        next.try_emplace(canonical_code(grown), grown);
      }
    level.clear();
    for (auto& [code, t] : next) level.push_back(t);
  }
  return level;
}

TableResult max_inversion_table(std::size_t n, const SearchLimits& limits, IndexCache* cache) {
  if (n > 6) throw CapacityError("max_inversion_table supports n <= 6");
  const std::vector<Tournament> classes = enumerate_tournaments(n);
  std::vector<std::size_t> index(classes.size(), 0);
  std::vector<std::uint64_t> codes(classes.size(), 0);
  std::vector<bool> known(classes.size(), false);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    codes[i] = canonical_code(classes[i]);
    if (cache)
      if (auto hit = cache->lookup(n, codes[i])) {
        index[i] = *hit;
        known[i] = true;
      }
  }

  SearchLimits inner = limits;
  inner.workers = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < classes.size(); i = next.fetch_add(1))
      if (!known[i]) index[i] = inversion_index(classes[i], inner).index;
  };
  const unsigned workers = std::max(1u, limits.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }
  if (cache)
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (!known[i]) cache->store(n, codes[i], index[i]);

  TableResult result;
  result.tournament_count = classes.size();
  std::size_t pick = 0;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (index[i] > result.max_index) {
      result.max_index = index[i];
      pick = i;
    }
  if (!classes.empty()) result.attaining = classes[pick];

  if (n >= 6) {
    const double lower = std::ceil((static_cast<double>(n) - 1) / 2 - std::log2(static_cast<double>(n)));
    if (static_cast<double>(result.max_index) < lower || result.max_index > n - 4)
      throw std::logic_error("i(n) violates the counting bounds");
  }
  return result;
}

Tournament parse_tournament(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;  // trimmed line, offset
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::size_t a = start, b = end;
    while (a < b && (text[a] == ' ' || text[a] == '\t' || text[a] == '\r')) ++a;
    while (b > a && (text[b - 1] == ' ' || text[b - 1] == '\t' || text[b - 1] == '\r')) --b;
    if (a < b) lines.emplace_back(text.substr(a, b - a), a);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("tournament: empty input", 0);

  std::size_t n = 0;
  for (std::size_t i = 0; i < lines[0].first.size(); ++i) {
    const char c = lines[0].first[i];
    if (c < '0' || c > '9') throw ParseError("tournament: first line must be the vertex count", lines[0].second + i);
    n = n * 10 + static_cast<std::size_t>(c - '0');
    if (n > kMaxOrder) throw CapacityError("tournament order exceeds 64");
  }
  if (lines.size() != n + 1)
    throw ParseError("tournament: expected " + std::to_string(n) + " matrix rows", lines.back().second);

  std::array<Word, kMaxOrder> rows{};
  for (std::size_t i = 0; i < n; ++i) {
    const auto [line, offset] = lines[i + 1];
    if (line.size() != n) throw ParseError("tournament: row " + std::to_string(i) + " has the wrong length", offset);
    for (std::size_t j = 0; j < n; ++j) {
      if (line[j] == '1') {
        rows[i] |= singleton(j);
      } else if (line[j] != '0') {
        throw ParseError("tournament: matrix entries must be 0 or 1", offset + j);
      }
    }
  }
  return Tournament::from_rows({rows.data(), n});
}

std::string write_tournament(const Tournament& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (std::size_t i = 0; i < t.order(); ++i) {
    for (std::size_t j = 0; j < t.order(); ++j) out.push_back(t.arc(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

}  // namespace booldim
