#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "bk/datasets.hpp"
#include "bk/io.hpp"
#include "json.hpp"

using namespace bk;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("BIRKHOFF_BIN");
  REQUIRE(bin != nullptr);
  static int seq = 0;
  ++seq;
  std::string out_path = "/tmp/bk_cli_" + std::to_string(seq) + ".out";
  std::string err_path = "/tmp/bk_cli_" + std::to_string(seq) + ".err";
  std::string cmd = std::string(bin) + " " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string data_path(const std::string& name) {
  const char* dir = std::getenv("BIRKHOFF_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("concepts lists every concept of a context") {
  RunResult r = run_cli("concepts " + data_path("uk.cxt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("8 concepts") == 0);
  CHECK(count_occurrences(r.out, " / ") == 8);
}

TEST_CASE("concepts --dot replaces the report with a drawing") {
  RunResult r = run_cli("concepts --dot " + data_path("m3.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph") == 0);
  CHECK(r.out.find("concepts") == std::string::npos);
}

TEST_CASE("basis output parses back to the computed basis") {
  RunResult r = run_cli("basis " + data_path("uk.cxt"));
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("not reduced") != std::string::npos);
  ImplicationBasis basis = canonical_direct_basis(reduce(dataset_uk()));
  CHECK(r.out == basis_text(basis));

  RunResult only = run_cli("basis --distributive-only --quiet " + data_path("uk.cxt"));
  CHECK(only.exit_code == 0);
  CHECK(only.err.empty());
  CHECK(count_occurrences(only.out, "->") == 3);
  CHECK(only.out == basis_text(distributive_part(basis)));

  RunResult marked = run_cli("basis --mark --quiet " + data_path("uk.cxt"));
  CHECK(count_occurrences(marked.out, "  [distributive]") == 3);
  CHECK(count_occurrences(marked.out, "  [non-distributive]") == 5);
}

TEST_CASE("bc reports generators, coincidences, and broken implications") {
  RunResult up = run_cli("bc --up " + data_path("uk.cxt"));
  CHECK(up.exit_code == 0);
  CHECK(up.out.find("up-set completion at context level") == 0);
  CHECK(up.out.find("completed elements: 14") != std::string::npos);
  CHECK(count_occurrences(up.out, "~not:") == 5);
  CHECK(up.out.find("(coincides with Ireland (State))") != std::string::npos);
  CHECK(up.out.find("invalidated implications:") != std::string::npos);

  RunResult down = run_cli("bc --down --json " + data_path("uk.cxt"));
  CHECK(down.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(down.out);
  CHECK(j["direction"] == "down");
  CHECK(j["added_generators"].size() == 7);
  CHECK(j["invalidated"].empty());
  CHECK(j["completed"]["elements"].size() == 12);
}

TEST_CASE("bc --dot with a path writes the file and keeps the report") {
  std::string path = "/tmp/bk_cli_up.dot";
  RunResult r = run_cli("bc --up " + data_path("uk.cxt") + " --dot " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("up-set completion") == 0);
  std::string dot = read_file(path);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("BORDER=\"2\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("bc at lattice level completes a lattice input directly") {
  RunResult r = run_cli("bc --down --json " + data_path("fig4.json"));
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["level"] == "lattice");
  CHECK(j["completed"]["elements"].size() == 8);
  CHECK(j["added_generators"].empty());
}

TEST_CASE("check passes on the bundled inputs") {
  RunResult n5 = run_cli("check " + data_path("n5.json"));
  CHECK(n5.exit_code == 0);
  CHECK(n5.out.find("N5") != std::string::npos);
  CHECK(n5.out.find("all checks passed") != std::string::npos);

  RunResult uk = run_cli("check --json " + data_path("uk.cxt"));
  CHECK(uk.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(uk.out);
  CHECK(j["ok"] == true);

  RunResult fig6 = run_cli("check " + data_path("fig6.json"));
  CHECK(fig6.exit_code == 0);
  CHECK(fig6.out.find("check extension: pass") != std::string::npos);
}

TEST_CASE("render draws the input") {
  RunResult r = run_cli("render " + data_path("m3.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph") == 0);
  CHECK(count_occurrences(r.out, "xlabel") == 5);
}

TEST_CASE("datasets lists the bundled inputs") {
  RunResult r = run_cli("datasets");
  CHECK(r.exit_code == 0);
  for (auto& d : bundled_datasets()) CHECK(r.out.find(d.name + "  (") != std::string::npos);
}

TEST_CASE("bad inputs exit with code 2 and a diagnostic") {
  std::string bad_path = "/tmp/bk_cli_bad.cxt";
  write_file(bad_path, "B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\nX\n");
  RunResult r = run_cli("concepts " + bad_path);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 11") != std::string::npos);
  std::remove(bad_path.c_str());

  CHECK(run_cli("concepts /tmp/definitely_missing.json").exit_code == 2);
  CHECK(run_cli("concepts").exit_code == 2);
  CHECK(run_cli("bc --up --down " + data_path("m3.json")).exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("output is deterministic across runs") {
  RunResult a = run_cli("basis --quiet " + data_path("uk.cxt"));
  RunResult b = run_cli("basis --quiet " + data_path("uk.cxt"));
  CHECK(a.out == b.out);
  RunResult c = run_cli("bc --down --json " + data_path("uk.cxt"));
  RunResult d = run_cli("bc --down --json " + data_path("uk.cxt"));
  CHECK(c.out == d.out);
}
