#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ktdist/graph_io.hpp"
#include "ktdist/matrix_io.hpp"
#include "support.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + std::string(KTDIST_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ktdist_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto path = scratch(name);
  std::ofstream(path) << content;
  return path.string();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kFigure1Json = R"({"n":6,"edges":[[0,1],[0,3],[0,4],[0,5],[1,3],[2,3],[2,5],[3,4],[3,5]]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate prints class counts") {
    CHECK(run("generate -k 2 -n 6").out == "n=2:1 n=3:1 n=4:1 n=5:2 n=6:5\n");
    CHECK(run("generate -k 1 -n 5").out == "n=1:1 n=2:1 n=3:1 n=4:2 n=5:3\n");
    CHECK(run("generate -k 3 -n 4").out == "n=3:1 n=4:1\n");
  }

  TEST_CASE("generate writes one record per class") {
    const auto path = scratch("gen.jsonl");
    CHECK(run("generate -k 2 -n 7 --format json --out " + path.string()).status == 0);
    std::istringstream lines(read_file(path));
    std::string line;
    int records = 0;
    while (std::getline(lines, line)) {
      const auto j = nlohmann::json::parse(line);
      CHECK(j["k"] == 2);
      ++records;
    }
    CHECK(records == 1 + 1 + 1 + 2 + 5 + 12);
    const auto g6 = scratch("gen.g6");
    CHECK(run("generate -k 2 -n 5 --format graph6 --out " + g6.string()).status == 0);
    std::istringstream g6_lines(read_file(g6));
    int g6_records = 0;
    while (std::getline(g6_lines, line)) {
      const auto g = ktdist::from_graph6(line);
      CHECK(g.size() == 2 * g.order() - 3);
      ++g6_records;
    }
    CHECK(g6_records == 1 + 1 + 1 + 2);
  }

  TEST_CASE("unwritable output path is an I/O error") {
    CHECK(run("generate -k 2 -n 5 --out /nonexistent/dir/x.json").status == 2);
  }

  TEST_CASE("dmatrix reproduces the figure-1 matrices") {
    const std::string g = write_file("fig1.json", kFigure1Json);
    const Run d1 = run("dmatrix --in " + g + " -d 1");
    CHECK(d1.status == 0);
    CHECK(ktdist::parse_matrix(d1.out) == oracle::figure1_d1());
    const Run d2 = run("dmatrix --in " + g + " -d 2");
    CHECK(ktdist::parse_matrix(d2.out) == oracle::figure1_d2());
    const Run csv = run("dmatrix --in " + g + " -d 2 --format csv --labels");
    CHECK(csv.out.substr(0, csv.out.find('\n')) == "01,03,04,05,13,23,25,34,35");
    CHECK(run("dmatrix --g6 Bw -d 2").out == "3 3\n0 1 1\n1 0 1\n1 1 0\n");
  }

  TEST_CASE("dmatrix from a trace and from k-tree JSON") {
    const Run t = run("dmatrix --trace 1 -k 2");
    CHECK(ktdist::parse_matrix(t.out) == oracle::figure2_right());
    const std::string tree = write_file("tree.json", R"({"k":2,"trace":[1]})");
    CHECK(ktdist::parse_matrix(run("dmatrix --in " + tree).out) == oracle::figure2_right());
    CHECK(run("dmatrix --trace 9 -k 2").status == 2);
    CHECK(run("dmatrix").status == 2);
  }

  TEST_CASE("disconnected clique graph exits with code 3") {
    // two disjoint triangles
    const std::string g = write_file("two.json", R"({"n":6,"edges":[[0,1],[0,2],[1,2],[3,4],[3,5],[4,5]]})");
    CHECK(run("dmatrix --in " + g + " -d 1").status == 3);
  }

  TEST_CASE("snf and det on matrix files") {
    const std::string g = write_file("fig1b.json", kFigure1Json);
    const auto d2 = scratch("d2.txt");
    CHECK(run("dmatrix --in " + g + " -d 2 --out " + d2.string()).status == 0);
    CHECK(run("snf " + d2.string()).out == "1 1 1 1 1 1 3 3 24\n");
    CHECK(run("det " + d2.string()).out == "216\n");
    const std::string j4 = write_file("j4.txt", "4 4\n0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 0\n");
    CHECK(run("snf " + j4).out == "1 1 1 3\n");
    const std::string p4 = write_file("p4.txt", "4 4\n0 1 2 3\n1 0 1 2\n2 1 0 1\n3 2 1 0\n");
    CHECK(run("det " + p4).out == "-12\n");
    const auto j = nlohmann::json::parse(run("snf " + j4 + " --format json").out);
    CHECK(j["factors"] == nlohmann::json::parse("[1,1,1,3]"));
    CHECK(j["det_sign"] == -1);
  }

  TEST_CASE("matrices written by dmatrix read back identically") {
    const std::string g = write_file("fig1c.json", kFigure1Json);
    for (const std::string format : {"text", "json"}) {
      const auto path = scratch("d2." + format);
      CHECK(run("dmatrix --in " + g + " -d 2 --format " + format + " --out " + path.string()).status == 0);
      CHECK(ktdist::parse_matrix(read_file(path)) == oracle::figure1_d2());
      CHECK(run("snf " + path.string()).out == "1 1 1 1 1 1 3 3 24\n");
      CHECK(run("det " + path.string() + " --format json").out.find("216") != std::string::npos);
    }
  }

  TEST_CASE("malformed matrix file is a usage error") {
    const std::string bad = write_file("bad.txt", "2 2\n1 2\n3 x\n");
    CHECK(run("snf " + bad).status == 2);
    CHECK(run("det " + bad).status == 2);
    CHECK(run("snf /nonexistent/file").status == 2);
  }

  TEST_CASE("predict") {
    CHECK(run("predict -k 2 -n 6").out == "snf: 1 1 1 1 1 1 3 3 24\ndet: 216\n");
    CHECK(run("predict -k 1 -n 5").out == "snf: 1 1 2 2 8\ndet: 32\n");
    CHECK(run("predict -k 3 -n 4").out == "snf: 1 1 1 3\ndet: -3\n");
    CHECK(run("predict -k 3 -n 3").status == 2);
  }

  TEST_CASE("verify subcommands and exit codes") {
    const Run theorem = run("verify theorem -k 2 --nmax 8");
    CHECK(theorem.status == 0);
    CHECK(theorem.out.find("PASS") != std::string::npos);
    const Run survey = run("verify survey -k 2 -d 1 --nmax 8");
    CHECK(survey.status == 0);
    CHECK(survey.out.find("NON-CONSTANT") != std::string::npos);
    CHECK(run("verify theorem -k 1 --nmax 10").status == 0);
    CHECK(run("verify equivalence -k 2 --nmax 7 --seed 5").status == 0);
    CHECK(run("verify theorem -k 2 --nmax 3").status == 2);
    CHECK(run("verify").status == 2);
    CHECK(run("bogus").status == 2);
  }

  TEST_CASE("identical configuration gives byte-identical reports") {
    CHECK(run("verify equivalence -k 2 --nmax 7 --seed 9 --format json --jobs 1").out ==
          run("verify equivalence -k 2 --nmax 7 --seed 9 --format json --jobs 3").out);
    CHECK(run("verify survey -k 2 -d 1 --nmax 7").out == run("verify survey -k 2 -d 1 --nmax 7", "KTDIST_JOBS=2").out);
    CHECK(run("generate -k 2 -n 5", "KTDIST_JOBS=notanumber").status == 2);
  }
}
