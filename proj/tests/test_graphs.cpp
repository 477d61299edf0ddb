#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "booldim/error.hpp"
#include "booldim/graph.hpp"
#include "booldim/graph_io.hpp"
#include "support.hpp"

using namespace booldim;

namespace {

Graph clique_on(std::size_t n, std::initializer_list<std::size_t> vs) {
  VertexSet x = 0;
  for (std::size_t v : vs) x |= singleton(v);
  return clique_graph(n, x);
}

}  // namespace

TEST_CASE("boolean_sum examples") {
  std::mt19937_64 rng(1);
  const Graph g = testing::random_graph(rng, 9);
  CHECK(boolean_sum(g, g) == Graph(9));

  for (std::size_t m = 1; m <= 6; ++m) {
    VertexSet leaves = low_bits(m + 1) & ~Word{1};
    const Graph s = boolean_sum(clique_graph(m + 1, low_bits(m + 1)), clique_graph(m + 1, leaves));
    CHECK(s == star_graph(m));
  }

  for (std::size_t n = 4; n <= 10; ++n) {
    Graph c(n);
    for (std::size_t i = 0; i + 1 < n - 1; ++i) c.add_edge(i, i + 1);
    c.add_edge(n - 2, 0);
    const Graph tri = clique_on(n, {0, n - 2, n - 1});
    const Graph sum = boolean_sum(c, tri);
    CHECK(sum == cycle_graph(n));
  }
}

TEST_CASE("boolean_sum rejects mismatched orders") {
  CHECK_THROWS_AS(boolean_sum(Graph(3), Graph(4)), InputError);
}

TEST_CASE("boolean_sum is commutative and associative") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const Graph a = testing::random_graph(rng, n), b = testing::random_graph(rng, n), c = testing::random_graph(rng, n);
    CHECK(boolean_sum(a, b) == boolean_sum(b, a));
    CHECK(boolean_sum(boolean_sum(a, b), c) == boolean_sum(a, boolean_sum(b, c)));
    const std::vector<Graph> list{a, b, c};
    CHECK(boolean_sum(list) == boolean_sum(a, boolean_sum(b, c)));
  }
}

TEST_CASE("clique_graph examples") {
  CHECK(clique_graph(5, 0) == Graph(5));
  const Graph e = clique_graph(5, 0b11);
  CHECK(e.edge_count() == 1);
  CHECK(e.adjacent(0, 1));
  CHECK(clique_graph(4, 0b1111).edge_count() == 6);
  CHECK_THROWS_AS(clique_graph(3, 0b1000), InputError);
}

TEST_CASE("realize examples") {
  CHECK(realize(CliqueFamily{6, {}}) == Graph(6));
  CHECK(realize(CliqueFamily{4, {0b1111, 0b1110}}) == star_graph(3));
  CHECK(realize(CliqueFamily{5, {0b11111}}) == complete_graph(5));
}

TEST_CASE("find_duo examples") {
  const auto two = find_duo(Graph(2));
  REQUIRE(two.has_value());
  CHECK(*two == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK_FALSE(find_duo(ortho_graph(3)).has_value());
  CHECK_FALSE(find_duo(path_graph(5)).has_value());

  // diag(1,1,0) has kernel vector a = e_2 (bit 2, index 4): {0, 4} is a module.
  F2Matrix gram(3);
  gram.set(0, 0, true);
  gram.set(1, 1, true);
  const auto duo = find_duo(nonorthogonality_graph(gram));
  REQUIRE(duo.has_value());
  CHECK(*duo == std::pair<std::size_t, std::size_t>{0, 4});
}

TEST_CASE("orthogonality graph examples") {
  const Graph k0 = ortho_graph(0);
  CHECK(k0.order() == 1);
  CHECK(k0.edge_count() == 0);
  const Graph k1 = ortho_graph(1);
  CHECK(k1.order() == 2);
  CHECK(k1.edge_count() == 0);

  const Graph k2 = ortho_graph(2);
  CHECK(k2.order() == 4);
  CHECK(k2.edge_count() == 2);
  CHECK(k2.degree(0) == 0);
  Graph p3 = k2.induced(0b1110);
  CHECK(testing::is_path(p3));

  const Graph h2 = ortho_graph_H(2);
  CHECK(h2.order() == 4);
  CHECK(h2.degree(0) == 0);
  CHECK(h2.induced(0b1110) == complete_graph(3));

  CHECK(ortho_graph_H(4).order() == 16);
  CHECK_THROWS_AS(ortho_graph_H(3), InputError);
  CHECK_THROWS_AS(ortho_graph(6), CapacityError);
}

TEST_CASE("standard and symplectic orthogonality graphs differ in edge count") {
  for (std::size_t k : {2u, 4u}) {
    CAPTURE(k);
    CHECK(ortho_graph(k).edge_count() != ortho_graph_H(k).edge_count());
  }
}

TEST_CASE("validate_representation examples") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + rng() % 11, 0.3);
    const auto edges = g.edges();
    if (edges.size() > 64) continue;
    std::vector<Word> f(g.order(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      f[edges[e].first] |= Word{1} << e;
      f[edges[e].second] |= Word{1} << e;
    }
    CHECK(validate_representation(g, f));
  }

  Graph one_edge(3);
  one_edge.add_edge(0, 2);
  const std::vector<Word> empty(3, 0);
  CHECK_FALSE(validate_representation(one_edge, empty));

  for (std::size_t k = 1; k <= 5; ++k) {
    const Graph o = ortho_graph(k);
    std::vector<Word> f(o.order());
    for (std::size_t v = 0; v < o.order(); ++v) f[v] = v;
    CHECK(validate_representation(o, f));
  }
}

TEST_CASE("CliqueFamily converts to and from representation maps") {
  const CliqueFamily fam{5, {0b00111, 0b11100, 0b10001}};
  const auto f = fam.as_representation();
  CHECK(f[0] == 0b101);
  CHECK(f[2] == 0b011);
  CHECK(CliqueFamily::from_representation(5, f, 3).cliques == fam.cliques);
  CHECK(validate_representation(realize(fam), f));
}

TEST_CASE("eliminate_vertex keeps the remaining order") {
  CHECK(eliminate_vertex(path_graph(5), 2) == path_graph(4));
  CHECK(eliminate_vertex(path_graph(5), 0) == path_graph(4));
  CHECK(eliminate_vertex(star_graph(3), 0) == complete_graph(3));
}

TEST_CASE("graph6 small cases") {
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(Graph(0)) == "?");
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6(">>graph6<<@\n") == Graph(1));
  CHECK(write_graph6(complete_graph(5)) == "D~{");
  CHECK(parse_graph6("D~{") == complete_graph(5));
}

TEST_CASE("graph6 agrees with an independent reference encoder") {
  std::ifstream in(std::string(BOOLDIM_TEST_DATA) + "/graph6_fixtures.txt");
  REQUIRE(in);
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string code, edges;
    std::size_t n = 0;
    fields >> code >> n >> edges;
    Graph expected(n);
    if (edges != ".") {
      std::istringstream es(edges);
      std::string pair;
      while (std::getline(es, pair, ',')) {
        const auto dash = pair.find('-');
        expected.add_edge(std::stoul(pair.substr(0, dash)), std::stoul(pair.substr(dash + 1)));
      }
    }
    CAPTURE(line);
    CHECK(write_graph6(expected) == code);
    CHECK(parse_graph6(code) == expected);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(rng, rng() % 65);
    const std::string s = write_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(write_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 errors carry byte offsets") {
  auto offset_of = [](std::string_view text) -> std::optional<std::size_t> {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::nullopt;
  };
  CHECK(offset_of("") == std::optional<std::size_t>(0));
  CHECK(offset_of("D~") == std::optional<std::size_t>(2));
  CHECK(offset_of("D~{~") == std::optional<std::size_t>(3));
  CHECK(offset_of("D~\x01") == std::optional<std::size_t>(2));
  CHECK(offset_of("D~{") == std::nullopt);
}

TEST_CASE("edge-list format") {
  const Graph g = parse_edge_list("# a path\n0 1\n1 2  # trailing\n\n2 3\n");
  CHECK(g == path_graph(4));
  const Graph h = parse_edge_list("6\n0 1\n");
  CHECK(h.order() == 6);
  CHECK(h.edge_count() == 1);
  CHECK(parse_edge_list(write_edge_list(h)) == h);
  CHECK(parse_edge_list(write_edge_list(Graph(3))) == Graph(3));
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 5\n"), InputError);
}

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(65), CapacityError);
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
  const std::vector<Word> lopsided{0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(lopsided), InputError);
}

TEST_CASE("relabeling and induced subgraphs") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const Graph g = testing::random_graph(rng, n);
    const auto perm = testing::random_permutation(rng, n);
    const Graph h = g.relabeled(perm);
    CHECK(h.edge_count() == g.edge_count());
    for (auto [u, v] : g.edges()) CHECK(h.adjacent(perm[u], perm[v]));
  }
  CHECK(path_graph(5).induced(0b10101).edge_count() == 0);
  CHECK(max_clique_size(complete_graph(7)) == 7);
  CHECK(max_clique_size(cycle_graph(5)) == 2);
}
