#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "icsi/cli.hpp"
#include "icsi/graph_io.hpp"
#include "support.hpp"

using namespace icsi;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "icsi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (fs::path(ICSI_SOURCE_DIR) / "fixtures" / name).string(); }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "icsi_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

}  // namespace

TEST_CASE("analyze example 1 with oracles") {
  Run r = cli({"analyze", fixture("example1"), "--oracle", "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["disjoint"]["t"] == 1);
  CHECK(j["oracle"]["agrees"] == true);
  CHECK(j["length"]["toj_length"] == 12);
  CHECK(j["code"]["all_decodable"] == true);
}

TEST_CASE("analyze example 5") {
  Run r = cli({"analyze", fixture("example5.graph"), "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["disjoint"]["t"] == 2);
  CHECK(j["length"]["interlocked_bound"] == 25);
  CHECK(j["length"]["savings"] == 1);
  CHECK(j["family"]["central"].size() == 1);
}

TEST_CASE("analyze a structure without outer cycles") {
  fs::path p = scratch("plain.graph");
  write(p, format_structure(testing::complete_inner(3)));
  Run r = cli({"analyze", p.string(), "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["validation"]["condition4"]["holds"] == true);
  CHECK_FALSE(j.contains("family"));
  CHECK(j["length"]["toj_length"] == 1);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* name : {"example3", "example4"}) {
    Run a = cli({"analyze", fixture(name), "--oracle", "--json"});
    Run b = cli({"analyze", fixture(name), "--oracle", "--json"});
    CHECK(a.out == b.out);
    Run c = cli({"analyze", fixture(name)});
    Run d = cli({"analyze", fixture(name)});
    CHECK(c.out == d.out);
  }
}

TEST_CASE("exit codes") {
  fs::path bad = scratch("bad.graph");
  write(bad, "graph 3 2\ninner: 1 2\narc 1 zz\n");
  Run parse = cli({"analyze", bad.string()});
  CHECK(parse.code == kExitParse);
  CHECK(parse.err.find("line 3, column 7") != std::string::npos);

  CHECK(cli({"analyze", scratch("missing").string()}).code == kExitParse);
  CHECK(cli({"analyze"}).code == kExitParse);
  CHECK(cli({"bogus"}).code == kExitParse);

  fs::path invalid = scratch("invalid.graph");
  write(invalid, "graph 3 3\ninner: 1 2 3\narc 1 2\narc 2 3\narc 3 1\n");
  Run inv = cli({"analyze", invalid.string()});
  CHECK(inv.code == kExitInvalid);
  CHECK(inv.out.empty());
  CHECK(inv.err.find("invalid") != std::string::npos);
  CHECK(cli({"validate", invalid.string()}).code == kExitInvalid);
  CHECK(cli({"validate", fixture("example2")}).code == kExitOk);

  Run refused = cli({"analyze", fixture("example4"), "--oracle", "--max-oracle-cycles", "2"});
  CHECK(refused.code == kExitRefused);
  CHECK(cli({"oracle", fixture("example5")}).code == kExitRefused);  // 33 vertices
  Run ok = cli({"oracle", fixture("example2")});
  CHECK(ok.code == kExitOk);
  CHECK(nlohmann::json::parse(ok.out)["max_disjoint"]["size"] == 1);
}

TEST_CASE("analyze skips MAIS above the vertex bound") {
  Run r = cli({"analyze", fixture("example5"), "--oracle", "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["oracle"]["mais"].is_null());
  CHECK(j["notices"].size() == 1);
}

TEST_CASE("dot export") {
  fs::path p = scratch("ex4.dot");
  fs::remove(p);
  CHECK(cli({"analyze", fixture("example4"), "--dot", p.string()}).code == kExitOk);
  const std::string dot = slurp(p);
  CHECK(dot.rfind("digraph G {", 0) == 0);
  CHECK(dot.find("penwidth") != std::string::npos);
  CHECK(cli({"dot", fixture("example1")}).out.find("11 -> 12") != std::string::npos);
}

TEST_CASE("generate is reproducible and round-trips through analyze") {
  const fs::path a = scratch("gen_a");
  const fs::path b = scratch("gen_b");
  std::vector<std::string> args{"generate", "--seed", "7", "--cycles", "3", "--mode", "shared-vertex-all", "--out"};
  auto with = [&](const fs::path& p) {
    auto v = args;
    v.push_back(p.string());
    return v;
  };
  REQUIRE(cli(with(a)).code == kExitOk);
  REQUIRE(cli(with(b)).code == kExitOk);
  CHECK(slurp(a.string() + ".graph") == slurp(b.string() + ".graph"));
  CHECK(slurp(a.string() + ".json") == slurp(b.string() + ".json"));

  auto sidecar = nlohmann::json::parse(slurp(a.string() + ".json"));
  CHECK(sidecar["expected"]["t"] == 1);
  CHECK(sidecar["expected"]["cycles"].size() == 3);

  Run r = cli({"analyze", a.string(), "--json", "--oracle"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["disjoint"]["t"] == sidecar["expected"]["t"]);

  Run stdout_a = cli({"generate", "--seed", "9", "--mode", "chained-through-central"});
  Run stdout_b = cli({"generate", "--seed", "9", "--mode", "chained-through-central"});
  CHECK(stdout_a.code == kExitOk);
  CHECK(stdout_a.out == stdout_b.out);
  CHECK(cli({"generate", "--mode", "nonsense"}).code == kExitParse);
  CHECK(cli({"generate", "--cycles", "5-2"}).code == kExitParse);
}

TEST_CASE("fixtures subcommands") {
  Run list = cli({"fixtures", "list"});
  CHECK(list.out == "example1\nexample2\nexample3\nexample4\nexample5\n");
  fs::path dir = scratch("export");
  REQUIRE(cli({"fixtures", "export", dir.string()}).code == kExitOk);
  for (const char* name : {"example1", "example5"}) {
    CHECK(slurp(dir / (std::string(name) + ".graph")) == slurp(fixture(std::string(name) + ".graph")));
    CHECK(slurp(dir / (std::string(name) + ".json")) == slurp(fixture(std::string(name) + ".json")));
  }
}
