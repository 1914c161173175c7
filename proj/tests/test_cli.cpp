#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "golden_tables.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("POLYCOUNT_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "POLYCOUNT_CLI must point at the built binary");
  const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("table reproduces the reducible-count table rows") {
  const auto res = run_cli("table --r 3 --nmax 6 --families R");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 7);  // header + n = 1..6
  for (int n = 1; n <= 6; ++n)
    CHECK(lines[static_cast<size_t>(n)] ==
          std::to_string(n) + "\t" + golden::kReducibleR3[static_cast<size_t>(n - 1)]);
}

TEST_CASE("table reproduces the relatively-irreducible block") {
  const auto res = run_cli("table --r 2 --nmax 6 --families E");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 7);
  for (int n = 1; n <= 6; ++n)
    CHECK(lines[static_cast<size_t>(n)] ==
          std::to_string(n) + "\t" + golden::kRelIrred[static_cast<size_t>(n - 1)].poly);
}

TEST_CASE("table with nmax 0") {
  const auto res = run_cli("table --r 2 --nmax 0 --families P");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == "0\t1");
}

TEST_CASE("table output is byte-stable") {
  const auto a = run_cli("table --r 3 --nmax 5 --families PIRQE --s 2");
  const auto b = run_cli("table --r 3 --nmax 5 --families PIRQE --s 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("eval") {
  auto res = run_cli("eval --family R --r 3 --n 2 --q 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "105\n");
  res = run_cli("eval --family E --r 2 --n 2 --q 2");
  CHECK(res.out == "7\n");
  res = run_cli("eval --family R --r 2 --n 1 --q 5");
  CHECK(res.out == "0\n");
  res = run_cli("eval --family Q --r 2 --n 4 --s 3 --q 2");
  CHECK(res.out == "36\n");
  res = run_cli("eval --family A --r 2 --n 1 --q 2");
  CHECK(res.out == "6\n");
  // advisory only: the identity still evaluates at a non-prime-power q
  res = run_cli("eval --family R --r 2 --n 2 --q 6");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "903\n");  // 42*43/2
  res = run_cli("eval --family R --r 2 --n 2 --q 1");
  CHECK(res.exit_code == 2);
}

TEST_CASE("output redirection") {
  const std::string path = "cli_out_test.csv";
  std::remove(path.c_str());
  const auto res = run_cli("table --r 2 --nmax 1 --families P --format csv --out " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 256> buf{};
  const size_t got = fread(buf.data(), 1, buf.size(), f);
  std::fclose(f);
  std::remove(path.c_str());
  const std::string content(buf.data(), got);
  CHECK(content == "family,r,n,s,poly\nP,2,0,,1\nP,2,1,,q^2+q\n");
}

TEST_CASE("check-bounds default grid passes") {
  const auto res = run_cli("check-bounds");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find(" 0 failures") != std::string::npos);
}

TEST_CASE("check-bounds rejects non-prime-power q") {
  const auto res = run_cli("check-bounds --q 6");
  CHECK(res.exit_code == 2);
}

TEST_CASE("oracle matches") {
  auto res = run_cli("oracle --family R --p 2 --r 2 --n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "266 = 266 MATCH\n");
  res = run_cli("oracle --family Q --p 2 --r 2 --n 4 --s 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "36 = 36 MATCH\n");
  res = run_cli("oracle --family E --p 2 --r 2 --n 2");
  CHECK(res.out == "7 = 7 MATCH\n");
}

TEST_CASE("oracle refuses oversized requests") {
  const auto res = run_cli("oracle --family R --p 2 --r 4 --n 6");
  CHECK(res.exit_code == 2);
}

TEST_CASE("partitions listing") {
  auto res = run_cli("partitions --n 5");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  const std::vector<std::string> expect{"5",   "41",   "32",  "311",
                                        "221", "2111", "11111"};
  CHECK(lines == expect);
  res = run_cli("partitions --n 1");
  CHECK(lines_of(res.out) == std::vector<std::string>{"1"});
  res = run_cli("partitions --n 2");
  CHECK(lines_of(res.out) == std::vector<std::string>{"2", "11"});
}

TEST_CASE("validation errors exit with 2") {
  CHECK(run_cli("table --r 1 --nmax 2").exit_code == 2);
  CHECK(run_cli("eval --family X --r 2 --n 2 --q 2").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}
