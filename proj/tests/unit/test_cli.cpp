#include <doctest.h>

#include "cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sdepth");
  std::ostringstream out, err;
  const int code = sdepth::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("sdepth_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("report") {
  auto r = run({"report", "-n", "5", "-d", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("conjectured=3\n") != std::string::npos);
  CHECK(r.out.find("certified_lower=3\n") != std::string::npos);

  r = run({"report", "-n", "7", "-d", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("conjectured=4\n") != std::string::npos);
  CHECK(r.out.find("certified_lower=4\n") != std::string::npos);
  CHECK(r.out.find("certificate=k3\n") != std::string::npos);

  r = run({"report", "-n", "29", "-d", "1"});
  CHECK(r.code == 10);
  CHECK(r.out.find("upper_bound=15\n") != std::string::npos);
  CHECK(r.out.find("certified_lower=6\n") != std::string::npos);

  r = run({"report", "-n", "5", "-d", "1", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle_exact=3\n") != std::string::npos);

  CHECK(run({"report", "-n", "3", "-d", "4"}).code == 2);
  CHECK(run({"report", "-n", "x", "-d", "1"}).code == 2);
  CHECK(run({"report", "-d", "1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("build and verify") {
  TempDir tmp;
  const auto p = tmp.file("p.txt");
  auto r = run({"build", "-n", "5", "-d", "2", "--out", p});
  CHECK(r.code == 0);
  CHECK(r.out.find("min_upper_size=3") != std::string::npos);
  const std::string text = read_file(p);
  CHECK(text.rfind("n=5 d=2 regime=K1\n", 0) == 0);
  CHECK(r.out.find("intervals=16") != std::string::npos);  // 10 nontrivial + 5 four-sets + [5]

  r = run({"verify", "--in", p});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict=VALID") != std::string::npos);

  r = run({"build", "-n", "7", "-d", "1", "--k3", "--out", tmp.file("k.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find("min_upper_size=4") != std::string::npos);
  CHECK(run({"verify", "--in", tmp.file("k.txt")}).code == 0);

  r = run({"build", "-n", "4", "-d", "2", "--out", tmp.file("t.txt")});
  CHECK(r.code == 0);
  const std::string trivial = read_file(tmp.file("t.txt"));
  std::istringstream lines(trivial);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const auto semi = line.find(';');
    CHECK(line.substr(0, semi) == line.substr(semi + 1));
  }

  CHECK(run({"build", "-n", "6", "-d", "1", "--k3", "--out", tmp.file("x.txt")}).code == 2);
  CHECK(run({"build", "-n", "20", "-d", "2", "--out", tmp.file("x.txt"), "--cap", "1000"}).code == 2);
  CHECK_FALSE(fs::exists(tmp.file("x.txt")));
  CHECK(run({"build", "-n", "5", "-d", "2"}).code == 2);
}

TEST_CASE("verify rejects mutated files") {
  TempDir tmp;
  const auto p = tmp.file("p.txt");
  REQUIRE(run({"build", "-n", "6", "-d", "2", "--out", p}).code == 0);
  const std::string text = read_file(p);
  const auto first_break = text.find('\n');
  const auto second_break = text.find('\n', first_break + 1);
  const std::string first_interval = text.substr(first_break + 1, second_break - first_break);

  write_file(tmp.file("drop.txt"), text.substr(0, first_break + 1) + text.substr(second_break + 1));
  auto r = run({"verify", "--in", tmp.file("drop.txt")});
  CHECK(r.code == 4);
  CHECK(r.out.find("covers: no") != std::string::npos);

  write_file(tmp.file("dup.txt"), text + first_interval);
  r = run({"verify", "--in", tmp.file("dup.txt")});
  CHECK(r.code == 4);
  CHECK(r.out.find("disjoint: no") != std::string::npos);

  write_file(tmp.file("hdr.txt"), "n=5 d=2 regime=K1" + text.substr(first_break));
  r = run({"verify", "--in", tmp.file("hdr.txt")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line") != std::string::npos);

  CHECK(run({"verify", "--in", tmp.file("missing.txt")}).code == 2);
}

TEST_CASE("table") {
  auto r = run({"table", "--d-range", "1..1", "--n-range", "2..6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n,d,regime,conjectured,certified_lower,upper_bound,verified\n"
        "2,1,TrivialRange,1,1,1,yes\n"
        "3,1,K1,2,2,2,yes\n"
        "4,1,K1,2,2,2,yes\n"
        "5,1,K2,3,3,3,yes\n"
        "6,1,K2,3,3,3,yes\n");

  r = run({"table", "--d-range", "2..2", "--n-range", "5..10"});
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::string row;
  std::getline(rows, row);
  int count = 0;
  while (std::getline(rows, row)) {
    ++count;
    std::vector<std::string> cells;
    std::stringstream cs(row);
    for (std::string c; std::getline(cs, c, ',');) cells.push_back(c);
    REQUIRE(cells.size() == 7);
    CHECK(cells[3] == cells[4]);
  }
  CHECK(count == 6);

  r = run({"table", "--d-range", "1..1", "--n-range", "7..9"});
  CHECK(r.out.find("7,1,Large,4,4,4,yes\n") != std::string::npos);
  CHECK(r.out.find("8,1,Large,4,4,4,yes\n") != std::string::npos);
  CHECK(r.out.find("9,1,Large,5,3,5,yes\n") != std::string::npos);

  r = run({"table", "--d-range", "1..2", "--n-range", "3..4"});
  CHECK(r.out.find("3,1,") < r.out.find("4,1,"));
  CHECK(r.out.find("4,1,") < r.out.find("3,2,"));

  r = run({"table", "--d-range", "2..2", "--n-range", "5..6", "--cap", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5,2,K1,3,3,3,yes\n") != std::string::npos);
  CHECK(r.out.find("6,2,K1,3,SKIPPED(cap),3,SKIPPED(cap)\n") != std::string::npos);

  CHECK(run({"table", "--d-range", "2..1", "--n-range", "5..6"}).code == 2);
  CHECK(run({"table", "--d-range", "a..b", "--n-range", "5..6"}).code == 2);
  CHECK(run({"table", "--d-range", "1..2", "--n-range", "5..6", "--format", "json"}).code == 2);
}

TEST_CASE("blocks") {
  auto r = run({"blocks", "-n", "5", "--set", "1,2", "--density", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "B[1..4] G[5..5]\nf=1,2,5\n");
  r = run({"blocks", "-n", "5", "--set", "1", "--density", "2"});
  CHECK(r.out == "B[1..2] G[3..5]\nf=1,3,4,5\n");
  r = run({"blocks", "-n", "7", "--set", "1,4", "--density", "3/2"});
  CHECK(r.code == 0);
  CHECK(run({"blocks", "-n", "5", "--set", "1,2,3", "--density", "2"}).code == 2);
  CHECK(run({"blocks", "-n", "5", "--set", "", "--density", "2"}).code == 2);
  CHECK(run({"blocks", "-n", "5", "--set", "1,9", "--density", "2"}).code == 2);
  CHECK(run({"blocks", "-n", "5", "--set", "1", "--density", "0"}).code == 2);
}
