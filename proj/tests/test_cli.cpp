#include "doctest.h"

#include "cli.hpp"
#include "liefoliate/export.hpp"

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = liefoliate::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

using liefoliate::json;

TEST_CASE("foliations enumerate emits one JSON record per class") {
  const auto r = run({"foliations", "enumerate", "--space", "SL5", "--format", "json"});
  CHECK(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.size() == 18);
  const auto t = run({"foliations", "enumerate", "--space", "SL5", "--format", "json", "--include-trivial"});
  CHECK(json::parse(t.out).size() == 19);
  const auto c = run({"foliations", "enumerate", "--space", "SL5", "--format", "json", "--codim", "1"});
  CHECK(json::parse(c.out).size() == 3);
}

TEST_CASE("dynkin DOT for F4") {
  const auto r = run({"rootsys", "dynkin", "--family", "F4", "--format", "dot"});
  CHECK(r.status == 0);
  CHECK(count(r.out, " -- ") == 3);
  CHECK(count(r.out, "[label=\"1\"") == 2);
  CHECK(count(r.out, "[label=\"2\"") == 1);
  CHECK(count(r.out, "dir=forward") + count(r.out, "dir=back") == 1);
}

TEST_CASE("exit statuses") {
  CHECK(run({"verify", "--suite", "all"}).status == 0);
  const auto unknown = run({"parabolic", "--space", "Nowhere", "--phi", "1"});
  CHECK(unknown.status == 1);
  CHECK(unknown.out.empty());
  CHECK(unknown.err.find("valid names") != std::string::npos);
  CHECK(run({"parabolic", "--space", "SL5", "--phi", "7"}).status == 1);
  CHECK(run({"foliations", "enumerate"}).status == 2);
  CHECK(run({"nonsense"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"rootsys", "show", "--family", "A", "--rank", "3", "--format", "dot"}).status == 2);
  CHECK(run({"slmodel", "iwasawa", "--matrix", "[[1,0],"}).status == 2);
  CHECK(run({"slmodel", "iwasawa", "--matrix", "[[2,0],[0,1]]"}).status == 1);
  CHECK(run({"rootsys", "show", "--family", "B"}).status == 1);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("subcommand outputs") {
  const auto rs = run({"rootsys", "show", "--family", "E8", "--format", "json"});
  CHECK(json::parse(rs.out)["roots"].size() == 240);
  const auto cat = run({"catalog", "list", "--format", "json", "--max-rank", "2", "--max-n", "2"});
  CHECK(json::parse(cat.out).size() > 10);
  const auto par = run({"parabolic", "--space", "SL5", "--phi", "1,3", "--format", "json"});
  CHECK(json::parse(par.out)["parabolic"]["dim_q_phi"] == 16);
  const auto hor = run({"horospherical", "--space", "Sp_{r,r}/Sp_r Sp_r", "--rank", "2", "--phi", "1", "--format", "json"});
  CHECK(hor.status == 0);
  const auto hj = json::parse(hor.out);
  CHECK(hj["horospherical"]["dim_total"] == hj["dim_M"]);

  const auto iw = run({"slmodel", "iwasawa", "--rank", "1", "--matrix", "[[1,0],[1,1]]"});
  CHECK(iw.status == 0);
  const auto f = json::parse(iw.out);
  CHECK(f["n"][0][1].get<double>() == doctest::Approx(0.5));
  CHECK(f["reconstruction_error"].get<double>() < 1e-10);

  const auto kl = run({"slmodel", "killing", "--x", "[[1,0],[0,-1]]", "--y", "[[1,0],[0,-1]]"});
  CHECK(json::parse(kl.out)["B"].get<double>() == doctest::Approx(8.0));
  const auto kr = run({"slmodel", "killing", "--rank", "3", "--samples", "20"});
  CHECK(json::parse(kr.out)["max_deviation"].get<double>() < 1e-9);

  const auto lt = run({"slmodel", "check-lie-triple", "--basis", "[[[1,0],[0,-1]]]"});
  CHECK(json::parse(lt.out)["holds"] == true);
  const auto bad = run({"slmodel", "check-lie-triple", "--basis", "[[[0,1],[0,0]]]"});
  CHECK(bad.status == 1);

  const auto hp = run({"slmodel", "halfplane", "--orbit", "N", "--samples", "5"});
  const auto pts = json::parse(hp.out)["points"];
  CHECK(pts.size() == 5);
  for (const auto& p : pts) CHECK(p["y"].get<double>() == doctest::Approx(1.0));
  const auto csv = run({"slmodel", "halfplane", "--orbit", "A", "--samples", "4", "--format", "csv"});
  CHECK(count(csv.out, "\n") == 5);
}

TEST_CASE("identical arguments give identical output") {
  const std::vector<std::vector<std::string>> cmds{
      {"slmodel", "killing", "--rank", "2", "--samples", "10"},
      {"foliations", "enumerate", "--space", "E6(6)", "--format", "json"},
      {"verify", "--suite", "slmodel", "--json"}};
  for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
}

TEST_CASE("seed override from the environment") {
  const std::vector<std::string> cmd{"slmodel", "killing", "--rank", "2", "--samples", "3"};
  setenv("LIEFOLIATE_SEED", "5", 1);
  const auto a = run(cmd).out;
  setenv("LIEFOLIATE_SEED", "6", 1);
  const auto b = run(cmd).out;
  setenv("LIEFOLIATE_SEED", "bogus", 1);
  CHECK(run(cmd).status == 2);
  unsetenv("LIEFOLIATE_SEED");
  CHECK(a != b);
}
