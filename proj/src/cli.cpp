#include "booldim/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "booldim/dims.hpp"
#include "booldim/error.hpp"
#include "booldim/graph_io.hpp"
#include "booldim/tournament.hpp"
#include "booldim/trees.hpp"

namespace booldim::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
  bool json = false;
  unsigned workers = 0;
  double budget = 0;
  bool no_cache = false;
  std::string cache_dir;
};

class Session {
 public:
  Session(const Options& opts, std::istream& in, std::ostream& out)
      : opts_(opts), in_(in), out_(out), started_(Clock::now()) {
    limits_ = SearchLimits::with_budget(opts.budget, opts.workers == 0 ? default_workers() : opts.workers);
  }

  const SearchLimits& limits() const { return limits_; }
  SweepOptions sweep() const { return SweepOptions{limits_}; }
  bool json_mode() const { return opts_.json; }
  std::ostream& out() { return out_; }

  std::string read(const std::string& path) {
    if (path == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }

  std::optional<fs::path> cache_dir() const {
    if (opts_.no_cache) return std::nullopt;
    if (!opts_.cache_dir.empty()) return fs::path(opts_.cache_dir);
    if (const char* env = std::getenv("BOOLDIM_CACHE_DIR"); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "booldim";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "booldim";
    return std::nullopt;
  }

  json record(const std::string& command, const std::string& digest, json params, json result, json witness) const {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started_).count();
    return json{{"command", command}, {"input_digest", digest}, {"params", std::move(params)},
                {"result", std::move(result)}, {"witness", std::move(witness)}, {"elapsed_ms", ms},
                {"version", kVersion}};
  }

 private:
  Options opts_;
  std::istream& in_;
  std::ostream& out_;
  Clock::time_point started_;
  SearchLimits limits_;
};

json vertex_list(VertexSet s) {
  json out = json::array();
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

std::string vertex_text(VertexSet s) {
  std::string out = "{";
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    if (rest != s) out += ",";
    out += std::to_string(std::countr_zero(rest));
  }
  return out + "}";
}

void write_cache_file(const fs::path& dir, const std::string& key, const json& record) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;
  const fs::path target = dir / (key + ".json");
  const fs::path tmp = dir / (key + ".json.tmp" + std::to_string(std::random_device{}()));
  {
    std::ofstream f(tmp);
    if (!f) return;
    f << record.dump() << "\n";
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

std::optional<json> read_cache_file(const fs::path& dir, const std::string& key) {
  std::ifstream f(dir / (key + ".json"));
  if (!f) return std::nullopt;
  try {
    return json::parse(f);
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

// Per-class inversion indices for the table sweep, one RunRecord file each.
class FileIndexCache : public IndexCache {
 public:
  FileIndexCache(fs::path dir, const Session& session) : dir_(std::move(dir)), session_(session) {}

  static std::string key(std::size_t n, std::uint64_t code) {
    return sha256_hex("tournament-class\n" + std::to_string(n) + "\n" + std::to_string(code) + "\n");
  }

  std::optional<std::size_t> lookup(std::size_t n, std::uint64_t code) override {
    const auto rec = read_cache_file(dir_, key(n, code));
    if (!rec) return std::nullopt;
    try {
      if (rec->at("params").at("n") != n || rec->at("params").at("canonical_code") != code) return std::nullopt;
      return rec->at("result").at("index").get<std::size_t>();
    } catch (const json::exception&) {
      return std::nullopt;
    }
  }

  void store(std::size_t n, std::uint64_t code, std::size_t index) override {
    const std::string k = key(n, code);
    write_cache_file(dir_, k, session_.record("tournament class-index", k, {{"n", n}, {"canonical_code", code}},
                                              {{"index", index}}, nullptr));
  }

 private:
  fs::path dir_;
  const Session& session_;
};

Graph graph_family(const std::string& family, std::size_t n, std::size_t length) {
  if (family == "path") return path_graph(n);
  if (family == "cycle") return cycle_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "empty") return Graph(n);
  if (family == "star") return star_graph(n);
  if (family == "ortho") return ortho_graph(n);
  if (family == "ortho-h") return ortho_graph_H(n);
  if (family == "triangle-pendants") return triangle_with_pendants();
  if (family == "spider") return spider(n, length).graph();
  throw InputError("unknown graph family '" + family + "'");
}

std::optional<Tournament> tournament_family(const std::string& family, std::size_t n) {
  if (family == "c3sum") return gen_c3_sum(n);
  if (family == "strongpath") return gen_strong_path(n);
  if (family == "antichain") return gen_antichain_cn(n);
  if (family == "transitive") return Tournament::transitive(n);
  return std::nullopt;
}

struct GraphSource {
  std::string graph6;
  std::string edges;

  void attach(CLI::App* cmd) {
    auto* g6 = cmd->add_option("--graph6", graph6, "graph6 input file, '-' for stdin");
    auto* el = cmd->add_option("--edges", edges, "edge-list input file, '-' for stdin");
    g6->excludes(el);
  }

  bool given() const { return !graph6.empty() || !edges.empty(); }

  std::pair<Graph, std::string> load(Session& s) const {
    if (!graph6.empty()) {
      std::string bytes = s.read(graph6);
      return {parse_graph6(bytes), bytes};
    }
    if (!edges.empty()) {
      std::string bytes = s.read(edges);
      return {parse_edge_list(bytes), bytes};
    }
    throw InputError("an input graph is required (--graph6 or --edges)");
  }
};

struct TournamentSource {
  std::string path;
  std::string family;
  std::size_t n = 0;

  std::pair<Tournament, std::string> load(Session& s) const {
    if (!path.empty()) {
      std::string bytes = s.read(path);
      return {parse_tournament(bytes), bytes};
    }
    if (!family.empty()) {
      auto t = tournament_family(family, n);
      if (!t) throw InputError("unknown tournament family '" + family + "'");
      return {*t, write_tournament(*t)};
    }
    throw InputError("a tournament is required (--tournament or --family)");
  }

  json params() const {
    json p = json::object();
    if (!family.empty()) p = {{"family", family}, {"n", n}};
    return p;
  }
};

void emit(Session& s, const json& record, const std::string& text) {
  if (s.json_mode()) {
    s.out() << record.dump(2) << "\n";
  } else {
    s.out() << text;
  }
}

int graph_dims(Session& s, const GraphSource& src) {
  const auto [g, bytes] = src.load(s);
  const DimensionReport r = dimension_report(g, s.sweep());

  const auto f = r.witness_cliques->as_representation();
  if (r.witness_cliques->size() != r.boolean || !validate_representation(g, f))
    throw std::logic_error("clique witness failed re-validation");
  if (rank(add_diagonal(g.adjacency(), *r.witness_diagonal)) != r.geometric)
    throw std::logic_error("diagonal witness failed re-validation");

  json result{{"n", g.order()},         {"edges", g.edge_count()},     {"symplectic", r.symplectic},
              {"geometric", r.geometric}, {"boolean", r.boolean},      {"inner", r.inner},
              {"trichotomy_case", std::string(to_string(r.trichotomy_case))}};
  std::optional<std::size_t> ind;
  if (std::popcount(g.non_isolated()) <= static_cast<int>(kMaxIndOrder)) {
    ind = ind_mod2(g, s.limits()).value;
    result["ind_mod2"] = *ind;
    // Open problem: is ind always equal to the geometric dimension? Reported, never assumed.
    result["ind_lt_geometric"] = *ind < r.geometric;
  }
  json cliques = json::array();
  for (VertexSet c : r.witness_cliques->cliques) cliques.push_back(vertex_list(c));
  json witness{{"diagonal", vertex_list(r.witness_diagonal->bits())}, {"cliques", cliques}};

  std::ostringstream text;
  text << "n: " << g.order() << "  edges: " << g.edge_count() << "\n"
       << "symplectic: " << r.symplectic << "\n"
       << "geometric: " << r.geometric << "\n"
       << "boolean: " << r.boolean << "\n"
       << "inner: " << r.inner << "\n"
       << "case: " << to_string(r.trichotomy_case) << "\n";
  if (ind) text << "ind_mod2: " << *ind << (*ind < r.geometric ? "  (below geometric)" : "") << "\n";
  text << "diagonal witness: " << vertex_text(r.witness_diagonal->bits()) << "\n"
       << "clique witness:";
  for (VertexSet c : r.witness_cliques->cliques) text << " " << vertex_text(c);
  text << "\n";
  emit(s, s.record("graph dims", sha256_hex(bytes), json::object(), result, witness), text.str());
  return kOk;
}

int graph_oracle_check(Session& s, const GraphSource& src, std::size_t exhaustive, std::size_t random_count,
                       std::size_t random_n, std::uint64_t seed) {
  std::vector<Graph> graphs;
  std::string digest_input;
  json params = json::object();
  if (src.given()) {
    auto [g, bytes] = src.load(s);
    graphs.push_back(g);
    digest_input = bytes;
  } else if (exhaustive > 0) {
    if (exhaustive > 5) throw CapacityError("--exhaustive supports n <= 5");
    const std::size_t pairs = exhaustive * (exhaustive - 1) / 2;
    for (Word bits = 0; bits < (Word{1} << pairs); ++bits) {
      Graph g(exhaustive);
      std::size_t k = 0;
      for (std::size_t i = 0; i < exhaustive; ++i)
        for (std::size_t j = i + 1; j < exhaustive; ++j, ++k)
          if ((bits >> k) & 1) g.add_edge(i, j);
      graphs.push_back(g);
    }
    params = {{"exhaustive", exhaustive}};
  } else if (random_count > 0) {
    if (random_n > 6) throw CapacityError("--random supports --n <= 6");
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < random_count; ++c) {
      Graph g(random_n);
      for (std::size_t i = 0; i < random_n; ++i)
        for (std::size_t j = i + 1; j < random_n; ++j)
          if (rng() & 1) g.add_edge(i, j);
      graphs.push_back(g);
    }
    params = {{"random", random_count}, {"n", random_n}, {"seed", seed}};
  } else {
    throw InputError("oracle-check needs an input graph, --exhaustive N or --random COUNT");
  }
  if (digest_input.empty()) digest_input = params.dump();

  json mismatches = json::array();
  std::size_t last_fast = 0;
  std::optional<std::size_t> last_oracle;
  BudgetTicker ticker(s.limits());
  for (const Graph& g : graphs) {
    ticker.tick();
    if (g.order() > 6) throw CapacityError("the oracle supports n <= 6");
    const BooleanResult fast = boolean_dim(g, s.sweep());
    const auto oracle = boolean_dim_oracle(g, std::min<std::size_t>(5, g.order() > 0 ? g.order() - 1 : 0));
    last_fast = fast.value;
    last_oracle = oracle;
    if (!oracle || *oracle != fast.value)
      mismatches.push_back({{"graph6", write_graph6(g)}, {"boolean_dim", fast.value}, {"oracle", oracle ? json(*oracle) : json(nullptr)}});
  }
  json result{{"checked", graphs.size()}, {"mismatches", mismatches}, {"agree", mismatches.empty()}};
  if (graphs.size() == 1) {
    result["boolean_dim"] = last_fast;
    result["oracle"] = last_oracle ? json(*last_oracle) : json(nullptr);
  }
  std::ostringstream text;
  text << "checked: " << graphs.size() << "\n"
       << "mismatches: " << mismatches.size() << "\n";
  if (graphs.size() == 1)
    text << "boolean_dim: " << last_fast << "  oracle: " << (last_oracle ? std::to_string(*last_oracle) : "none") << "\n";
  emit(s, s.record("graph oracle-check", sha256_hex(digest_input), params, result, nullptr), text.str());
  return mismatches.empty() ? kOk : kInternalError;
}

int tree_mstar(Session& s, const GraphSource& src) {
  auto [g, bytes] = src.load(s);
  const Tree t(g);
  const MStarResult r = m_star(t);
  const CliqueFamily cliques = decomposition_to_cliques(t, r.witness);
  if (!is_valid_decomposition(t, r.witness) || realize(cliques) != t.graph() || cliques.size() != r.value)
    throw std::logic_error("star decomposition witness failed re-validation");

  json stars = json::array();
  for (const Star& st : r.witness.stars) stars.push_back({{"center", st.center}, {"leaves", vertex_list(st.leaves)}});
  json clique_list = json::array();
  for (VertexSet c : cliques.cliques) clique_list.push_back(vertex_list(c));
  json result{{"n", t.order()}, {"m", r.value}, {"trivial", r.witness.trivial_count()},
              {"nontrivial", r.witness.nontrivial_count()}};
  std::ostringstream text;
  text << "m: " << r.value << "  (trivial " << r.witness.trivial_count() << ", nontrivial "
       << r.witness.nontrivial_count() << ")\n";
  for (const Star& st : r.witness.stars) text << "star " << st.center << " -> " << vertex_text(st.leaves) << "\n";
  emit(s, s.record("tree mstar", sha256_hex(bytes), json::object(), result, {{"stars", stars}, {"cliques", clique_list}}),
       text.str());
  return kOk;
}

int tree_verify(Session& s, const GraphSource& src, std::size_t all) {
  if (src.given()) {
    auto [g, bytes] = src.load(s);
    const Tree t(g);
    const TreeTheoremValues v = tree_theorem_values(t, s.limits());
    json result{{"n", t.order()}, {"ind", v.ind}, {"boolean", v.boolean}, {"m", v.m}, {"holds", v.holds()}};
    std::ostringstream text;
    text << "ind: " << v.ind << "  boolean: " << v.boolean << "  m: " << v.m << "  holds: " << (v.holds() ? "yes" : "no")
         << "\n";
    emit(s, s.record("tree verify", sha256_hex(bytes), json::object(), result, nullptr), text.str());
    return v.holds() ? kOk : kInternalError;
  }
  if (all == 0) throw InputError("tree verify needs an input tree or --all N");
  if (all > kMaxIndOrder) throw CapacityError("--all supports N <= 16");
  json per_order = json::object();
  json failures = json::array();
  std::size_t total = 0;
  std::ostringstream text;
  for (std::size_t n = 1; n <= all; ++n) {
    const auto trees = enumerate_trees(n);
    for (const Tree& t : trees) {
      const TreeTheoremValues v = tree_theorem_values(t, s.limits());
      if (!v.holds()) failures.push_back({{"graph6", write_graph6(t.graph())}, {"ind", v.ind}, {"boolean", v.boolean}, {"m", v.m}});
    }
    per_order[std::to_string(n)] = trees.size();
    total += trees.size();
    text << "n=" << n << ": " << trees.size() << " trees\n";
  }
  text << "total: " << total << "  failures: " << failures.size() << "\n";
  json params{{"all", all}};
  json result{{"trees", total}, {"per_order", per_order}, {"failures", failures}, {"all_hold", failures.empty()}};
  emit(s, s.record("tree verify", sha256_hex(params.dump()), params, result, nullptr), text.str());
  return failures.empty() ? kOk : kInternalError;
}

json certificate_json(const InversionCertificate& cert) {
  json subsets = json::array();
  for (VertexSet x : cert.subsets) subsets.push_back(vertex_list(x));
  return {{"subsets", subsets}, {"order", cert.order}};
}

int tournament_index(Session& s, const TournamentSource& src) {
  auto [t, bytes] = src.load(s);
  const std::string digest = sha256_hex(bytes);
  const std::string key = sha256_hex("tournament index\n" + write_tournament(t));
  const auto dir = s.cache_dir();

  std::optional<InversionResult> found;
  if (dir) {
    if (auto rec = read_cache_file(*dir, key)) {
      try {
        InversionResult cached;
        cached.index = rec->at("result").at("index").get<std::size_t>();
        for (const auto& x : rec->at("witness").at("subsets")) {
          VertexSet set = 0;
          for (const auto& v : x) set |= singleton(v.get<std::size_t>());
          cached.certificate.subsets.push_back(set);
        }
        cached.certificate.order = rec->at("witness").at("order").get<std::vector<std::size_t>>();
        if (cached.certificate.subsets.size() == cached.index && replay(t, cached.certificate)) found = cached;
      } catch (const json::exception&) {
      }
    }
  }
  if (!found) found = inversion_index(t, s.limits());
  if (!replay(t, found->certificate)) throw std::logic_error("inversion certificate failed re-validation");

  json result{{"n", t.order()}, {"index", found->index}};
  json witness = certificate_json(found->certificate);
  if (dir) write_cache_file(*dir, key, s.record("tournament index", key, json::object(), result, witness));

  std::ostringstream text;
  text << "inversion index: " << found->index << "\n";
  for (VertexSet x : found->certificate.subsets) text << "invert " << vertex_text(x) << "\n";
  text << "acyclic order:";
  for (std::size_t v : found->certificate.order) text << " " << v;
  text << "\n";
  emit(s, s.record("tournament index", digest, src.params(), result, witness), text.str());
  return kOk;
}

int tournament_table(Session& s, std::size_t n) {
  std::optional<FileIndexCache> cache;
  if (auto dir = s.cache_dir()) cache.emplace(*dir, s);
  const TableResult r = max_inversion_table(n, s.limits(), cache ? &*cache : nullptr);
  json result{{"n", n}, {"max_index", r.max_index}, {"classes", r.tournament_count}};
  if (n >= 6) {
    const double lower = std::ceil((static_cast<double>(n) - 1) / 2 - std::log2(static_cast<double>(n)));
    result["lower_bound"] = static_cast<long>(lower);
    result["upper_bound"] = n - 4;
  }
  json params{{"n", n}};
  std::ostringstream text;
  text << "i(" << n << ") = " << r.max_index << "  over " << r.tournament_count << " isomorphism classes\n"
       << "attained by:\n"
       << write_tournament(r.attaining);
  emit(s, s.record("tournament table", sha256_hex(params.dump()), params, result,
                   {{"attaining", write_tournament(r.attaining)}}),
       text.str());
  return kOk;
}

int tournament_embeds(Session& s, const TournamentSource& pattern, const TournamentSource& host) {
  auto [p, pbytes] = pattern.load(s);
  auto [h, hbytes] = host.load(s);
  const bool result = embeds(p, h);
  json params{{"pattern", pattern.params()}, {"host", host.params()}};
  emit(s, s.record("tournament embeds", sha256_hex(pbytes + "\n--\n" + hbytes), params, {{"embeds", result}}, nullptr),
       std::string("embeds: ") + (result ? "yes" : "no") + "\n");
  return kOk;
}

int generate(Session& s, const std::string& family, std::size_t n, std::size_t length, std::string format) {
  std::string text;
  if (auto t = tournament_family(family, n)) {
    if (format.empty()) format = "tournament";
    if (format != "tournament") throw InputError("tournament families only support --format tournament");
    text = write_tournament(*t);
  } else {
    const Graph g = graph_family(family, n, length);
    if (format.empty()) format = "graph6";
    if (format == "graph6") {
      text = write_graph6(g) + "\n";
    } else if (format == "edges") {
      text = write_edge_list(g);
    } else {
      throw InputError("unknown graph format '" + format + "' (graph6 or edges)");
    }
  }
  json params{{"family", family}, {"n", n}, {"format", format}};
  if (family == "spider") params["length"] = length;
  emit(s, s.record("generate", sha256_hex(params.dump()), params, {{"text", text}}, nullptr), text);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Boolean, geometric and symplectic dimensions over F2; star decompositions; inversion index"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options opts;
  app.add_flag("--json", opts.json, "emit a JSON record instead of text");
  app.add_option("--workers", opts.workers, "search threads (default: available parallelism)");
  app.add_option("--budget", opts.budget, "wall-clock budget in seconds for any sweep (0 = unlimited)");
  app.add_option("--cache-dir", opts.cache_dir, "result cache directory (default: $BOOLDIM_CACHE_DIR)");
  app.add_flag("--no-cache", opts.no_cache, "do not read or write the result cache");
  app.fallthrough();

  std::function<int(Session&)> action;

  auto* graph = app.add_subcommand("graph", "graph dimensions");
  graph->require_subcommand(1);
  GraphSource dims_src;
  auto* dims = graph->add_subcommand("dims", "all four dimensions with witnesses");
  dims_src.attach(dims);
  dims->callback([&] { action = [&](Session& s) { return graph_dims(s, dims_src); }; });

  GraphSource oracle_src;
  std::size_t exhaustive = 0, random_count = 0, random_n = 6;
  std::uint64_t seed = 1;
  auto* oracle = graph->add_subcommand("oracle-check", "compare the rank formula with direct clique-family search");
  oracle_src.attach(oracle);
  oracle->add_option("--exhaustive", exhaustive, "check every labeled graph on N <= 5 vertices");
  oracle->add_option("--random", random_count, "check COUNT random graphs");
  oracle->add_option("--n", random_n, "order of the random graphs (<= 6)");
  oracle->add_option("--seed", seed, "random seed");
  oracle->callback([&] {
    action = [&](Session& s) { return graph_oracle_check(s, oracle_src, exhaustive, random_count, random_n, seed); };
  });

  auto* tree = app.add_subcommand("tree", "star decompositions of trees");
  tree->require_subcommand(1);
  GraphSource mstar_src;
  auto* mstar = tree->add_subcommand("mstar", "optimal star decomposition value m(T) with witness");
  mstar_src.attach(mstar);
  mstar->callback([&] { action = [&](Session& s) { return tree_mstar(s, mstar_src); }; });

  GraphSource verify_src;
  std::size_t all_trees = 0;
  auto* verify = tree->add_subcommand("verify", "check ind = boolean = m on a tree or on all small trees");
  verify_src.attach(verify);
  verify->add_option("--all", all_trees, "check every tree with 1..N vertices");
  verify->callback([&] { action = [&](Session& s) { return tree_verify(s, verify_src, all_trees); }; });

  auto* tour = app.add_subcommand("tournament", "inversion index of tournaments");
  tour->require_subcommand(1);
  TournamentSource index_src;
  auto* index = tour->add_subcommand("index", "exact inversion index with certificate");
  index->add_option("--tournament", index_src.path, "tournament text file, '-' for stdin");
  index->add_option("--family", index_src.family, "c3sum | strongpath | antichain | transitive");
  index->add_option("--n", index_src.n, "family parameter");
  index->callback([&] { action = [&](Session& s) { return tournament_index(s, index_src); }; });

  std::size_t table_n = 0;
  auto* table = tour->add_subcommand("table", "maximum inversion index over all n-vertex tournaments");
  table->add_option("--n", table_n, "order (<= 6)")->required();
  table->callback([&] { action = [&](Session& s) { return tournament_table(s, table_n); }; });

  TournamentSource pattern_src, host_src;
  auto* emb = tour->add_subcommand("embeds", "is the pattern an induced subtournament of the host?");
  emb->add_option("--pattern", pattern_src.path, "pattern tournament file");
  emb->add_option("--pattern-family", pattern_src.family, "pattern family");
  emb->add_option("--pattern-n", pattern_src.n, "pattern family parameter");
  emb->add_option("--host", host_src.path, "host tournament file");
  emb->add_option("--host-family", host_src.family, "host family");
  emb->add_option("--host-n", host_src.n, "host family parameter");
  emb->callback([&] { action = [&](Session& s) { return tournament_embeds(s, pattern_src, host_src); }; });

  std::string family, format;
  std::size_t gen_n = 0, length = 2;
  auto* gen = app.add_subcommand("generate", "write a named graph or tournament");
  gen->add_option("--family", family,
                  "path | cycle | complete | empty | star | ortho | ortho-h | triangle-pendants | spider | "
                  "c3sum | strongpath | antichain | transitive")
      ->required();
  gen->add_option("--n", gen_n, "size parameter");
  gen->add_option("--length", length, "spider leg length");
  gen->add_option("--format", format, "graph6 | edges | tournament");
  gen->callback([&] { action = [&](Session& s) { return generate(s, family, gen_n, length, format); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kInputError;
  }

  try {
    Session session(opts, in, out);
    return action(session);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kCapacityError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace booldim::cli
