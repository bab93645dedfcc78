#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fpg/cli.hpp"
#include "fpg/jsonio.hpp"

using namespace fpg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
           "/fpg_cli_test_" + std::to_string(counter++) + ".txt";
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parse round-trips to a fixed point") {
  TempFile f("< a, b | a*b*a^-1 = b^2 >");
  Run first = cli({"parse", f.path});
  CHECK(first.code == 0);
  TempFile g(first.out);
  Run second = cli({"parse", g.path});
  CHECK(second.code == 0);
  CHECK(second.out == first.out);

  // JSON input form is accepted too
  TempFile j(to_json(parse_presentation("< a | a^3 >")).dump());
  Run r = cli({"parse", j.path});
  CHECK(r.code == 0);
  CHECK(r.out == "< a | a^3 >\n");
}

TEST_CASE("parse failures exit 3 with position info") {
  TempFile f("< a, b | a*x >");
  Run r = cli({"parse", f.path});
  CHECK(r.code == 3);
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(r.err.find("column") != std::string::npos);

  Run missing = cli({"parse", "/nonexistent/file.txt"});
  CHECK(missing.code == 3);

  Run noargs = cli({"parse"});
  CHECK(noargs.code == 3);

  Run badsub = cli({"frobnicate"});
  CHECK(badsub.code == 3);
}

TEST_CASE("h1 and snf") {
  TempFile hig(
      "< a, b, c, d | a*b*a^-1 = b^2, b*c*b^-1 = c^2, c*d*c^-1 = d^2, "
      "d*a*d^-1 = a^2 >");
  Run r = cli({"h1", hig.path});
  CHECK(r.code == 0);
  CHECK(r.out == "trivial\n");

  TempFile k4("< a, b | a^2, b^2, [a,b] >");
  Run rk = cli({"h1", k4.path});
  CHECK(rk.out == "Z/2 + Z/2\n");

  TempFile m(R"({"rows":2,"cols":2,"entries":["2","4","6","8"]})");
  Run rs = cli({"snf", m.path});
  CHECK(rs.code == 0);
  CHECK(rs.out == "2 4\n");

  TempFile badm(R"({"rows":2,"cols":2,"entries":["2"]})");
  CHECK(cli({"snf", badm.path}).code == 3);
}

TEST_CASE("tc, lowindex and certify exit codes") {
  TempFile p("< a, b | a^2, b^3, (a*b)^3 >");
  Run r = cli({"tc", p.path});
  CHECK(r.code == 0);
  CHECK(r.out == "index 12\n");

  TempFile z2("< a, b | [a,b] >");
  Run stuck = cli({"tc", z2.path, "--subgroup", "a", "--max-cosets", "200"});
  CHECK(stuck.code == 2);

  Run li = cli({"lowindex", p.path, "--max-index", "2", "--format", "json"});
  CHECK(li.code == 0);
  CHECK(Json::parse(li.out)["status"] == "complete");

  TempFile za("< a | >");
  Run refuted = cli({"certify", za.path, "--bound", "2"});
  CHECK(refuted.code == 1);
  CHECK(Json::parse(refuted.out)["status"] == "refuted");

  TempFile tr("< a | a >");
  CHECK(cli({"certify", tr.path, "--bound", "10"}).code == 0);

  TempFile f2("< a, b | >");
  Run unknown = cli({"certify", f2.path, "--bound", "4", "--max-nodes", "1"});
  CHECK(unknown.code == 2);
  CHECK(Json::parse(unknown.out)["status"] == "unknown");
}

TEST_CASE("sc-check and dehn") {
  TempFile g2("< a, b, c, d | [a,b]*[c,d] >");
  Run pass = cli({"sc-check", g2.path});
  CHECK(pass.code == 0);
  CHECK(Json::parse(pass.out)["lambda"] == "1/8");

  TempFile ab3("< a, b | (a*b)^3 >");
  Run fail = cli({"sc-check", ab3.path});
  CHECK(fail.code == 1);
  CHECK(Json::parse(fail.out)["lambda"] == "5/6");

  Run d = cli({"dehn", g2.path, "--word", "[a,b]*[c,d]", "--format", "json"});
  CHECK(d.code == 0);
  CHECK(Json::parse(d.out)["trivial"] == true);

  // dehn on an unverified presentation is an input error
  CHECK(cli({"dehn", ab3.path, "--word", "a"}).code == 3);
}

TEST_CASE("rips json feeds fibre and ns") {
  TempFile q("< a | a >");
  Run r = cli({"rips", q.path});
  REQUIRE(r.code == 0);
  TempFile gamma(r.out);

  Run f = cli({"fibre", "--gamma", gamma.path});
  CHECK(f.code == 0);
  Json fj = Json::parse(f.out);
  CHECK(fj["a"]["label"] == "P");
  CHECK(fj["a"]["generators"].size() == 7);

  Run bad = cli({"ns", "--gamma", gamma.path, "--word", "nu1"});
  CHECK(bad.code == 3);  // the image of nu1 in Q is trivially the identity
}

TEST_CASE("family verdicts through the cli") {
  Run t = cli({"family", "gn", "--seed", "trivial"});
  CHECK(t.code == 0);
  CHECK(Json::parse(t.out)["direct_factor"] == "yes");
}
