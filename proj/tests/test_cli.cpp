#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bv/cli.hpp"
#include "bv/diagram.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = bv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eq and eval") {
  auto r = run({"eq", "x2 x0", "x0 x3"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
  r = run({"eq", "x0", "x1"});
  CHECK(r.code == 1);
  CHECK(r.out == "not equal\n");
  r = run({"eq", "x0 x0 x1^-1 x0^-1", "tplus=000,001,01,1 | braid=4: | tminus=00,010,011,1"});
  CHECK(r.out == "equal\n");

  // eval output parses back as the same diagram
  r = run({"eval", "s1 x0 t1^-1"});
  CHECK(r.code == 0);
  const std::string d = r.out.substr(0, r.out.size() - 1);
  auto again = run({"reduce", d});
  CHECK(again.out == r.out);
  CHECK(run({"mul", "x0", "x1"}).out == run({"eval", "x0 x1"}).out);
}

TEST_CASE("info and gen") {
  auto r = run({"info", "t1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N=1\n") == 0);
  CHECK(r.out.find("in_F=no") != std::string::npos);
  r = run({"info", "x0"});
  CHECK(r.out.find("branches=00->0 01->10 1->11") != std::string::npos);
  r = run({"gen", "t", "2"});
  CHECK(r.out.find("word=x0^-1 t1 s1^-1") != std::string::npos);
  CHECK(run({"gen", "s", "0"}).code == 2);
  CHECK(run({"gen", "y", "1"}).code == 2);
}

TEST_CASE("usage and parse errors") {
  auto r = run({"eval", "x0 y1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("at position 3") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  r = run({"reduce", "tplus=0,1 | braid=2: 7 | tminus=0,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position") != std::string::npos);
  CHECK(run({"path", "build", "x0 x0^-1"}).code == 2);
}

TEST_CASE("path build then verify") {
  const std::string file = "cli_test_certificate.txt";
  auto r = run({"path", "build", "s1 x0^-1 x1", "--M", "25", "--C1", "1/3", "--out", file});
  REQUIRE(r.code == 0);
  r = run({"path", "verify", file});
  CHECK(r.code == 0);
  CHECK(r.out.find("certificate OK") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  // corrupt the w4 exponent
  std::ifstream in(file);
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  std::string text = buf.str();
  const auto at = text.find("w4=x0^");
  REQUIRE(at != std::string::npos);
  text.insert(at + 6, "1");
  std::ofstream(file) << text;
  r = run({"path", "verify", file});
  CHECK(r.code == 1);
  CHECK(r.out.find("terminal          FAIL") != std::string::npos);

  std::ofstream(file) << "[path]\ng=x0 zz\n";
  CHECK(run({"path", "verify", file}).code == 2);
  std::remove(file.c_str());
  CHECK(run({"path", "verify", file}).code == 2);
}

TEST_CASE("oracle subcommands") {
  auto r = run({"ball", "1"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);
  CHECK(run({"len", "x0 x1", "--max-r", "3"}).out == "2\n");
  CHECK(run({"len", "x0 x0 x0 x0", "--max-r", "2"}).out == "> 2\n");
  r = run({"spotcheck", "1", "--delta", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("connected=28") != std::string::npos);
  CHECK(run({"spotcheck", "1", "--delta", "1"}).code == 1);
  CHECK(run({"spotcheck", "1", "--delta", "x"}).code == 2);
  r = run({"carets", "1"});
  CHECK(r.out.find("1,3,1") != std::string::npos);
}
