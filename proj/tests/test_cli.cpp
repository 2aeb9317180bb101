#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct CliResult {
  int code;
  std::string out;
};

// Runs the installed binary through the shell; stderr is dropped so tests
// only pin the machine-readable stream.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* bin = std::getenv("CHROMADIA_CLI");
  REQUIRE(bin != nullptr);
  std::string cmd = env_prefix + "'" + bin + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

// Fixture files live in one per-process temp directory.
const std::string& fixture_dir() {
  static const std::string dir = [] {
    auto d = std::filesystem::temp_directory_path() / "chromadia_cli_test";
    std::filesystem::create_directories(d);
    auto put = [&](const char* name, const std::string& text) {
      std::ofstream(d / name) << text;
    };
    put("c4.edges", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    put("k4.edges", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    put("c5.edges", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    put("c6.edges", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    put("k2.edges", "2 1\n0 1\n");
    put("acyclic_cert.json", "{\"schema\":1,\"k\":3,\"colors\":[1,2,3,2]}\n");
    put("lab_cert.json",
        "{\"schema\":1,\"a1\":1,\"a2\":2,\"k\":4,\"labels\":[1,2,3,4]}\n");
    put("good_path.json", "{\"path\":[0,1,2,3]}\n");
    put("bad_path.json", "{\"path\":[0,2,1,3]}\n");
    return d.string();
  }();
  return dir;
}

std::string fx(const char* name) { return "'" + fixture_dir() + "/" + name + "'"; }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("decide subcommands report decisions with reasons") {
  auto lab = run_cli("decide lab --a 1 --b 2 --k 4 " + fx("c4.edges"));
  CHECK(lab.code == 0);
  CHECK(contains(lab.out, "\"decision\":\"yes\""));
  CHECK(contains(lab.out, "\"labels\":[1,2,3,4]"));

  auto dense = run_cli("decide acyclic3-d2 " + fx("k4.edges"));
  CHECK(dense.code == 1);
  CHECK(contains(dense.out, "\"reason\":\"edge bound m>2n-3\""));

  auto sq = run_cli("decide acyclic3-d2 " + fx("c4.edges"));
  CHECK(sq.code == 0);
  CHECK(contains(sq.out, "\"colors\":[1,2,3,2]"));

  auto five = run_cli("decide star3-d3 " + fx("c5.edges"));
  CHECK(five.code == 1);
  CHECK(contains(five.out, "\"reason\":\"5-cycle\""));
  CHECK(contains(five.out, "\"witness\":[0,1,2,3,4]"));
}

TEST_CASE("verify judges certificates under the requested kind") {
  auto ok = run_cli("verify colouring --kind acyclic " + fx("c4.edges") + " " +
                    fx("acyclic_cert.json"));
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "\"valid\":true"));

  auto bad = run_cli("verify colouring --kind injective " + fx("c4.edges") + " " +
                     fx("acyclic_cert.json"));
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "\"violation\":\"bichromatic P3\""));
  CHECK(contains(bad.out, "\"witness\":[1,0,3]"));

  auto lab = run_cli("verify labelling " + fx("c4.edges") + " " + fx("lab_cert.json"));
  CHECK(lab.code == 0);
}

TEST_CASE("oracle subcommands expose the exhaustive searches") {
  auto nb = run_cli("oracle near-bipartite " + fx("k2.edges"));
  CHECK(nb.code == 0);
  CHECK(contains(nb.out, "\"I\":[0]"));

  auto none = run_cli("oracle colouring --k 3 --kind proper " + fx("k4.edges"));
  CHECK(none.code == 1);
  CHECK(contains(none.out, "\"decision\":\"no\""));
}

TEST_CASE("budget override narrows oracle-backed runs") {
  auto blocked =
      run_cli("oracle colouring --k 3 --kind proper " + fx("c4.edges"), "CHROMADIA_BUDGET=3 ");
  CHECK(blocked.code == 2);

  auto junk = run_cli("decide lab --a 1 --b 2 --k 4 " + fx("c4.edges"),
                      "CHROMADIA_BUDGET=soon ");
  CHECK(junk.code == 2);
}

TEST_CASE("gen emits reproducible graph6 lines") {
  const std::string args = "gen --n 8 --diam 2 --count 3 --seed 42";
  auto a = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == "G~ZBlG\nGmUfsW\nGlmphO\n");
  CHECK(run_cli(args).out == a.out);

  CHECK(run_cli("gen --n 2 --diam 3 --seed 1").code == 2);
}

TEST_CASE("gadget subcommands write the graph and a sidecar") {
  std::string out = fixture_dir() + "/dom.g6";
  auto r = run_cli("gadget dominating-clique --t 1 " + fx("c4.edges") + " --out '" + out + "'");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"op\":\"dominating-clique\""));
  CHECK(contains(r.out, "\"n\":5"));
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(out + ".json"));

  auto c6 = run_cli("gadget complete-same-class " + fx("c6.edges") + " --out '" +
                    fixture_dir() + "/c6done.edges'");
  CHECK(c6.code == 0);
  CHECK(contains(c6.out, "added edges: 0"));
  CHECK(contains(c6.out, "diameter check skipped: cross pair (0,3) has no far neighbour"));
}

TEST_CASE("bridge converts between labellings and triangle-free paths") {
  auto fwd = run_cli("gadget bridge --direction lab-to-path " + fx("c4.edges") +
                     " --witness " + fx("lab_cert.json"));
  CHECK(fwd.code == 0);
  CHECK(contains(fwd.out, "\"path\":[0,1,2,3]"));

  auto back = run_cli("gadget bridge --direction path-to-lab " + fx("c4.edges") +
                      " --witness " + fx("good_path.json"));
  CHECK(back.code == 0);
  CHECK(contains(back.out, "\"labels\":[1,2,3,4]"));

  auto bad = run_cli("gadget bridge --direction path-to-lab " + fx("c4.edges") +
                     " --witness " + fx("bad_path.json"));
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "\"valid\":false"));
}

TEST_CASE("bad inputs exit with the error code") {
  CHECK(run_cli("decide acyclic3-d2 '/nonexistent/g.edges'").code == 2);
  CHECK(run_cli("decide star3-d3 " + fx("k2.edges") + " --bogus").code == 2);
}
