#include "doctest.h"

#include "facticity/cli.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using facticity::run_cli;
using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("cli codec round trip") {
  CHECK(cli({"codec", "--encode", "0"}).out == "0100\n");
  CHECK(cli({"codec", "--encode", ""}).out == "1\n");

  const CliResult dec = cli({"codec", "--decode", "01101"});
  REQUIRE(dec.code == 0);
  const json j = json::parse(dec.out);
  CHECK(j["payload"] == "01");
  CHECK(j["rest"] == "");

  CHECK(cli({"codec"}).code == 1);
  CHECK(cli({"codec", "--encode", "0", "--decode", "1"}).code == 1);
  CHECK(cli({"codec", "--decode", "0"}).code == 2);  // truncated frame
}

TEST_CASE("cli run reports one execution") {
  const CliResult r = cli({"run", "--input", "10110"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["output"] == "0110");
  CHECK(j["status"] == "ok");
  CHECK(j["consumed_all"] == true);
  CHECK(j["steps"] == 4);

  const CliResult bad = cli({"run", "--input", "00"});
  REQUIRE(bad.code == 0);
  CHECK(json::parse(bad.out)["status"] == "invalid_index");

  CHECK(cli({"run", "--input", "0a1"}).code == 2);
  CHECK(cli({"run"}).code == 1);  // --input is required
}

TEST_CASE("cli exact single-string reports") {
  const CliResult r =
      cli({"exact", "--max-code-len", "10", "--string", "0000"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["x"] == "0000");
  CHECK(j["n"] == 4);
  CHECK(j["k2"] == 5);
  CHECK(j["phi"] == 0);
  CHECK(j["delta"] == -1);
  CHECK(j["rho"] == 4);
  CHECK(j["certified"] == true);
  CHECK(j["k1"].is_null());
  CHECK(j["label"] == "purely_stochastic");
  CHECK(j["witnesses"][0][0] == 0);
  CHECK(j["witnesses"][0][1] == 4);

  const CliResult c = cli(
      {"exact", "--max-code-len", "10", "--string", "0000", "--csv"});
  REQUIRE(c.code == 0);
  CHECK(c.out == "x,n,k2,phi,k1,delta,rho,certified,label\n"
                 "0000,4,5,0,,-1,4,1,purely_stochastic\n");

  // Uncovered strings fall back to the identity bound, uncertified.
  const CliResult far =
      cli({"exact", "--max-code-len", "10", "--string", "000000000000"});
  REQUIRE(far.code == 0);
  const json fj = json::parse(far.out);
  CHECK(fj["k2"] == 13);
  CHECK(fj["certified"] == false);
}

TEST_CASE("cli exact full-table dumps") {
  const CliResult r = cli({"exact", "--max-code-len", "6", "--all"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("x,n,k2,phi,k1,delta,rho,certified,label\n", 0) == 0);
  CHECK(count_lines(r.out) == 64);  // header + every string shorter than 6
  CHECK(r.out.find("\n,0,1,0,1,-1,0,1,purely_stochastic\n") != std::string::npos);

  const CliResult j = cli({"exact", "--max-code-len", "6", "--all", "--json"});
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out).size() == 63);

  CHECK(cli({"exact", "--max-code-len", "40", "--all"}).code == 1);
  CHECK(cli({"exact", "--max-code-len", "0", "--all"}).code == 1);
  CHECK(cli({"exact", "--max-code-len", "6"}).code == 1);
  CHECK(cli({"exact", "--max-code-len", "6", "--all", "--string", "0"}).code == 1);
  CHECK(cli({"exact", "--max-code-len", "6", "--all", "--json", "--csv"}).code == 1);
}

TEST_CASE("cli estimate reads files") {
  const TempFile f("cli_est_input.txt", "0000000000000000\n0000000000000000\n");
  const CliResult r = cli({"estimate", "--input", f.path});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 32);
  CHECK(j["model"] == "bernoulli");
  CHECK(j["estimated"] == true);
  CHECK(j["phi"] == j["k2"]);

  const TempFile raw("cli_est_raw.bin", std::string(1, static_cast<char>(0xA5)));
  const CliResult rr = cli({"estimate", "--input", raw.path, "--raw"});
  REQUIRE(rr.code == 0);
  const json rj = json::parse(rr.out);
  CHECK(rj["n"] == 8);
  CHECK(rj["model"] == "empty");
  CHECK(rj["phi"] == 0);

  CHECK(cli({"estimate", "--input", "no_such_file_here.txt"}).code == 2);
}

TEST_CASE("cli sweep emits deterministic csv and svg") {
  const std::vector<std::string> args = {"sweep", "--k",    "4", "--grid",
                                         "3",     "--reps", "2", "--seed", "5"};
  const CliResult a = cli(args);
  const CliResult b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind(
            "s,p,rep,n,k2_hat,phi_hat,rho_hat,delta_hat,label,phi_collapse,"
            "threshold_bits\n",
            0) == 0);
  CHECK(count_lines(a.out) == 7);
  CHECK(a.out.find("0.500000") != std::string::npos);

  const std::string svg_path = "cli_sweep_plot.svg";
  std::vector<std::string> with_svg = args;
  with_svg.push_back("--svg");
  with_svg.push_back(svg_path);
  REQUIRE(cli(with_svg).code == 0);
  std::ifstream in(svg_path, std::ios::binary);
  std::ostringstream svg;
  svg << in.rdbuf();
  CHECK(svg.str().rfind("<svg", 0) == 0);
  CHECK(svg.str().find("<polyline") != std::string::npos);
  CHECK(svg.str().find("threshold bits") != std::string::npos);
  std::remove(svg_path.c_str());

  CHECK(cli({"sweep", "--k", "1"}).code == 1);
}

TEST_CASE("cli classify labels a series file") {
  std::string alternating;
  for (int i = 0; i < 128; ++i) alternating += "01";
  std::string series;
  for (int t = 0; t < 5; ++t) series += alternating + "\n";
  const TempFile f("cli_series.txt", series);

  const CliResult r = cli({"classify", "--input", f.path});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["class"] == "reversible");
  CHECK(j["slope_k2"] == 0.0);
  CHECK(j["series"].size() == 5);
  CHECK(j["eta"] > 0.0);

  const CliResult wide = cli({"classify", "--input", f.path, "--eta", "99"});
  REQUIRE(wide.code == 0);
  CHECK(json::parse(wide.out)["eta"] == 99.0);

  const TempFile tiny("cli_series_short.txt", alternating + "\n");
  CHECK(cli({"classify", "--input", tiny.path}).code == 2);
}

TEST_CASE("cli curves tabulates the analytic lines") {
  const std::vector<std::string> args = {"curves", "--k-list", "2,3", "--grid",
                                         "3"};
  const CliResult a = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == cli(args).out);
  CHECK(a.out.rfind("k,s,phi_collapse,threshold_bits,max_bound\n", 0) == 0);
  CHECK(count_lines(a.out) == 7);
  CHECK(a.out.find("2,0.000000,") != std::string::npos);
  CHECK(a.out.find("2,1.000000,") != std::string::npos);
  CHECK(a.out.find("3,0.500000,") != std::string::npos);
  CHECK(a.out.find(",7.000000\n") != std::string::npos);  // max bound at k=2

  CHECK(cli({"curves", "--k-list", "bogus"}).code == 2);
  CHECK(cli({"curves", "--k-list", "25"}).code == 2);
  CHECK(cli({"curves", "--k-list", ""}).code == 2);
}

TEST_CASE("cli rejects empty and unknown invocations") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
  const CliResult help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("facticity") != std::string::npos);
}
