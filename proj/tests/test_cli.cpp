#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "booldim/cli.hpp"
#include "booldim/graph.hpp"
#include "booldim/graph_io.hpp"

using namespace booldim;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  json record() const { return json::parse(out); }
};

class Sandbox {
 public:
  Sandbox() : dir_(fs::temp_directory_path() / ("booldim-cli-" + std::to_string(std::random_device{}()))) {
    fs::create_directories(dir_);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  fs::path path(const std::string& name) const { return dir_ / name; }
  std::string cache() const { return (dir_ / "cache").string(); }

  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path(name)) << body;
    return path(name).string();
  }

  Run run(std::vector<std::string> args, const std::string& stdin_text = "") const {
    args.insert(args.begin(), {"booldim", "--cache-dir", cache()});
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
  }

 private:
  fs::path dir_;
};

json without_time(json record) {
  record.erase("elapsed_ms");
  return record;
}

}  // namespace

TEST_CASE("sha256_hex") {
  CHECK(cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("graph dims on K5 from standard input") {
  Sandbox box;
  const Run r = box.run({"--json", "graph", "dims", "--graph6", "-"}, write_graph6(complete_graph(5)) + "\n");
  REQUIRE(r.code == cli::kOk);
  const json rec = r.record();
  for (const char* key : {"command", "input_digest", "params", "result", "witness", "elapsed_ms", "version"})
    CHECK(rec.contains(key));
  CHECK(rec.size() == 7);
  CHECK(rec["command"] == "graph dims");
  CHECK(rec["version"] == cli::kVersion);
  CHECK(rec["input_digest"] == cli::sha256_hex("D~{\n"));
  CHECK(rec["result"]["boolean"] == 1);
  CHECK(rec["result"]["geometric"] == 1);
  CHECK(rec["result"]["symplectic"] == 4);
  CHECK(rec["result"]["trichotomy_case"] == "GEO_EQ_BOOL_LT_SYMP");
  CHECK(rec["witness"]["cliques"].size() == 1);
}

TEST_CASE("text output is the default") {
  Sandbox box;
  const Run r = box.run({"graph", "dims", "--edges", box.write("p4.txt", "0 1\n1 2\n2 3\n")});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("boolean: 3") != std::string::npos);
}

TEST_CASE("tree mstar on a 10-vertex path") {
  Sandbox box;
  std::string edges;
  for (int i = 0; i < 9; ++i) edges += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  const Run r = box.run({"--json", "tree", "mstar", "--edges", box.write("path10.txt", edges)});
  REQUIRE(r.code == cli::kOk);
  const json rec = r.record();
  CHECK(rec["result"]["m"] == 9);
  CHECK(rec["witness"]["stars"].size() == 9);
  CHECK(rec["witness"]["cliques"].size() == 9);
}

TEST_CASE("tree verify") {
  Sandbox box;
  const Run all = box.run({"--json", "tree", "verify", "--all", "7"});
  REQUIRE(all.code == cli::kOk);
  CHECK(all.record()["result"]["trees"] == 1 + 1 + 1 + 2 + 3 + 6 + 11);
  CHECK(all.record()["result"]["all_hold"] == true);

  const Run bad = box.run({"tree", "verify", "--edges", box.write("c4.txt", "0 1\n1 2\n2 3\n3 0\n")});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("not a tree") != std::string::npos);
}

TEST_CASE("tournament index with cache reuse") {
  Sandbox box;
  const Run first = box.run({"--json", "tournament", "index", "--family", "c3sum", "--n", "2"});
  REQUIRE(first.code == cli::kOk);
  const json a = first.record();
  CHECK(a["result"]["index"] == 2);
  CHECK(a["witness"]["subsets"].size() == 2);
  CHECK(a["params"]["family"] == "c3sum");
  CHECK(fs::exists(box.cache()));
  CHECK(!fs::is_empty(box.cache()));

  const Run second = box.run({"--json", "--workers", "3", "tournament", "index", "--family", "c3sum", "--n", "2"});
  REQUIRE(second.code == cli::kOk);
  CHECK(without_time(second.record()) == without_time(a));

  const Run uncached = box.run({"--json", "--no-cache", "tournament", "index", "--family", "c3sum", "--n", "2"});
  CHECK(without_time(uncached.record()) == without_time(a));
}

TEST_CASE("a corrupted cache entry is recomputed") {
  Sandbox box;
  const Run first = box.run({"--json", "tournament", "index", "--family", "antichain", "--n", "5"});
  REQUIRE(first.code == cli::kOk);
  for (const auto& entry : fs::directory_iterator(box.cache())) {
    json rec = json::parse(std::ifstream(entry.path()));
    rec["witness"]["subsets"] = json::array();
    rec["result"]["index"] = 0;
    std::ofstream(entry.path()) << rec.dump();
  }
  const Run second = box.run({"--json", "tournament", "index", "--family", "antichain", "--n", "5"});
  REQUIRE(second.code == cli::kOk);
  CHECK(without_time(second.record()) == without_time(first.record()));
}

TEST_CASE("tournament table fills the cache") {
  Sandbox box;
  const Run first = box.run({"--json", "tournament", "table", "--n", "5"});
  REQUIRE(first.code == cli::kOk);
  CHECK(first.record()["result"]["max_index"] == 2);
  CHECK(first.record()["result"]["classes"] == 12);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(box.cache())) ++files;
  CHECK(files == 12);
  const Run second = box.run({"--json", "tournament", "table", "--n", "5"});
  CHECK(without_time(second.record()) == without_time(first.record()));

  const Run six = box.run({"--json", "tournament", "table", "--n", "6"});
  REQUIRE(six.code == cli::kOk);
  CHECK(six.record()["result"]["max_index"] == 2);
  CHECK(six.record()["result"]["upper_bound"] == 2);
  CHECK(six.record()["result"]["lower_bound"] == 0);
}

TEST_CASE("tournament from a file and embeds") {
  Sandbox box;
  const std::string path = box.write("c3.txt", "3\n010\n001\n100\n");
  const Run r = box.run({"--json", "tournament", "index", "--tournament", path});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.record()["result"]["index"] == 1);

  const Run yes = box.run({"--json", "tournament", "embeds", "--pattern", path, "--host-family", "c3sum", "--host-n", "2"});
  REQUIRE(yes.code == cli::kOk);
  CHECK(yes.record()["result"]["embeds"] == true);
  const Run no = box.run({"--json", "tournament", "embeds", "--pattern-family", "antichain", "--pattern-n", "7",
                          "--host-family", "antichain", "--host-n", "8"});
  REQUIRE(no.code == cli::kOk);
  CHECK(no.record()["result"]["embeds"] == false);
}

TEST_CASE("oracle-check modes") {
  Sandbox box;
  const Run ex = box.run({"--json", "graph", "oracle-check", "--exhaustive", "4"});
  REQUIRE(ex.code == cli::kOk);
  CHECK(ex.record()["result"]["checked"] == 64);
  CHECK(ex.record()["result"]["agree"] == true);

  const Run rnd = box.run({"--json", "graph", "oracle-check", "--random", "20", "--n", "6", "--seed", "3"});
  REQUIRE(rnd.code == cli::kOk);
  CHECK(rnd.record()["result"]["checked"] == 20);

  const Run one = box.run({"--json", "graph", "oracle-check", "--graph6", "-"}, write_graph6(path_graph(5)));
  REQUIRE(one.code == cli::kOk);
  CHECK(one.record()["result"]["oracle"] == 4);
}

TEST_CASE("generate") {
  Sandbox box;
  const Run g6 = box.run({"generate", "--family", "cycle", "--n", "5"});
  REQUIRE(g6.code == cli::kOk);
  CHECK(parse_graph6(g6.out) == cycle_graph(5));
  const Run el = box.run({"generate", "--family", "spider", "--n", "3", "--length", "2", "--format", "edges"});
  REQUIRE(el.code == cli::kOk);
  CHECK(parse_edge_list(el.out).order() == 7);
  const Run t = box.run({"generate", "--family", "c3sum", "--n", "1"});
  CHECK(t.out == "3\n010\n001\n100\n");
}

TEST_CASE("exit codes") {
  Sandbox box;
  CHECK(box.run({"graph", "dims", "--graph6", "-"}, "D~").code == cli::kInputError);
  CHECK(box.run({"graph", "dims", "--graph6", box.path("missing.g6").string()}).code == cli::kInputError);
  CHECK(box.run({"graph", "frobnicate"}).code == cli::kInputError);
  CHECK(box.run({"generate", "--family", "nonsense", "--n", "3"}).code == cli::kInputError);
  CHECK(box.run({"graph", "oracle-check", "--exhaustive", "6"}).code == cli::kCapacityError);
  CHECK(box.run({"tournament", "table", "--n", "7"}).code == cli::kCapacityError);
  CHECK(box.run({"--budget", "0.000000001", "--no-cache", "tournament", "index", "--family", "c3sum", "--n", "3"}).code ==
        cli::kCapacityError);
  const Run help = box.run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("tournament") != std::string::npos);
}
