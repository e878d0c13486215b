#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::ordered_json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("sl2relax");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      sl2relax::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classification report") {
  const CliResult r = run_cli(
      {"classify", "--model", "adm", "--gamma", "3", "--grid", "-5:5:4001"});
  REQUIRE(r.code == 0);
  const ordered_json j = ordered_json::parse(r.out);
  CHECK(j["rank_one_convex"] == false);
  CHECK(j["polyconvex"] == false);
  CHECK(j["quasiconvex"] == false);
  CHECK(j["convex_on_sl2"] == false);
  const double msd = j["min_second_difference"].get<double>();
  CHECK(msd < -1.9);
  CHECK(msd > -2.1);
  CHECK(j["grid"] == "-5:5:4001");
  CHECK(j["tolerance"].get<double>() > 0.0);
}

TEST_CASE("relaxed value at a matrix") {
  const CliResult r = run_cli({"relax", "--model", "adm", "--gamma", "3",
                               "--grid", "-5:5:4001", "--F", "1,0;0,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-9\n");
}

TEST_CASE("non-unimodular matrix is refused") {
  const CliResult r = run_cli({"relax", "--model", "adm", "--gamma", "3",
                               "--F", "2,0;0,2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SL(2)") != std::string::npos);
}

TEST_CASE("tabulated rows are deterministic") {
  const std::vector<std::string> args = {"table",  "--model",    "adm",
                                         "--gamma", "3",          "--grid",
                                         "-5:5:4001", "--points", "0,1,2"};
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  const CliResult c = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out ==
        "t,phi,envelope,on_bridge\n"
        "0,-8,-9,true\n"
        "1,-9,-9,false\n"
        "2,0,0,false\n");
  CHECK(b.out == a.out);
  CHECK(c.out == a.out);
}

TEST_CASE("exit codes") {
  // usage problems
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"classify", "--model", "adm", "--gamma", "3", "--grid",
                 "5:1:100"}).code == 1);
  CHECK(run_cli({"classify", "--model", "adm", "--gamma", "3", "--grid",
                 "0:1:2"}).code == 1);
  CHECK(run_cli({"classify", "--model", "adm", "--gamma", "3",
                 "--frobnicate"}).code == 1);
  CHECK(run_cli({"classify", "--model", "adm"}).code == 1);
  CHECK(run_cli({"classify", "--model", "hencky", "--gamma", "3"}).code == 1);
  CHECK(run_cli({"classify", "--model", "adm", "--gamma", "3",
                 "--expr=t^2"}).code == 1);
  CHECK(run_cli({"classify", "--model", "expr", "--expr=t^"}).code == 1);
  CHECK(run_cli({"relax", "--model", "adm", "--gamma", "3", "--F",
                 "1,0;0"}).code == 1);
  CHECK(run_cli({"table", "--model", "adm", "--gamma", "3", "--points",
                 ""}).code == 1);

  // domain problems
  CHECK(run_cli({"classify", "--model", "expr", "--expr=t^3"}).code == 2);
  CHECK(run_cli({"classify", "--model", "expr", "--expr=log(t)"}).code == 2);
  const std::vector<std::string> outside = {
      "relax", "--model", "adm",   "--gamma", "3",
      "--grid", "0:2:201", "--F", "3,0;0,0.3333333333333333"};
  CHECK(run_cli(outside).code == 2);
  std::vector<std::string> extrapolated = outside;
  extrapolated.push_back("--extrapolate");
  CHECK(run_cli(extrapolated).code == 0);

  // numeric problems
  CHECK(run_cli({"relax", "--model", "expr", "--expr=-t^2", "--F",
                 "1,0;0,1"}).code == 3);
}

TEST_CASE("envelope report") {
  const CliResult r = run_cli(
      {"envelope", "--model", "adm", "--gamma", "3", "--grid", "-5:5:4001"});
  REQUIRE(r.code == 0);
  const ordered_json j = ordered_json::parse(r.out);
  CHECK(j["algorithm"] == "convex_envelope_grid");
  REQUIRE(j["bridges"].size() == 1);
  CHECK(j["bridges"][0]["t_left"].get<double>() == -1.0);
  CHECK(j["bridges"][0]["t_right"].get<double>() == 1.0);
  CHECK(std::fabs(j["bridges"][0]["slope"].get<double>()) <= 1e-12);
  CHECK(j["truncation_warning"] == false);
  REQUIRE(j["closed_form_max_error"].is_number());
  CHECK(j["closed_form_max_error"].get<double>() <= 1e-10);
  CHECK(j["hull_vertex_count"].get<std::size_t>() > 100);

  const CliResult h = run_cli(
      {"envelope", "--model", "hencky", "--grid", "geo:0.001:10000:4097"});
  REQUIRE(h.code == 0);
  const ordered_json hj = ordered_json::parse(h.out);
  CHECK(hj["truncation_warning"] == true);
  REQUIRE(hj["closed_form_max_error"].is_number());
  CHECK(hj["closed_form_max_error"].get<double>() > 0.0);

  const CliResult e = run_cli(
      {"envelope", "--model", "expr", "--expr=t^2", "--grid", "-5:5:101"});
  REQUIRE(e.code == 0);
  const ordered_json ej = ordered_json::parse(e.out);
  CHECK(ej["closed_form_max_error"].is_null());
  CHECK(ej["bridges"].empty());
  CHECK(ej["truncation_warning"] == false);
}

TEST_CASE("envelope profile rows") {
  const CliResult r = run_cli({"envelope", "--model", "adm", "--gamma", "3",
                               "--grid", "-5:5:11", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("t,phi,envelope,on_bridge\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 12);  // header + one row per grid point
}

TEST_CASE("verification report") {
  const CliResult r = run_cli({"verify", "--model", "adm", "--gamma", "1.5"});
  REQUIRE(r.code == 0);
  const ordered_json j = ordered_json::parse(r.out);

  const std::vector<std::string> expected_keys = {
      "model",
      "grid",
      "max_abs_diff_hull_vs_chord",
      "max_abs_diff_hull_vs_biconjugate",
      "max_abs_diff_hull_vs_lamination",
      "lamination_iterations",
      "converged",
      "closed_form_max_error",
      "truncation_warning"};
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == expected_keys);

  CHECK(j["max_abs_diff_hull_vs_chord"].get<double>() <= 1e-10);
  CHECK(j["max_abs_diff_hull_vs_biconjugate"].get<double>() <= 1e-8);
  CHECK(j["max_abs_diff_hull_vs_lamination"].get<double>() <= 1e-12);
  CHECK(j["lamination_iterations"] == 1);
  CHECK(j["converged"] == true);
  CHECK(j["closed_form_max_error"].get<double>() == 0.0);
  CHECK(j["truncation_warning"] == false);
}

TEST_CASE("verification of a truncated profile") {
  const CliResult r = run_cli({"verify", "--model", "hencky"});
  REQUIRE(r.code == 0);
  const ordered_json j = ordered_json::parse(r.out);
  CHECK(j["truncation_warning"] == true);
  CHECK(j["max_abs_diff_hull_vs_lamination"].get<double>() <= 5e-2);
}

TEST_CASE("output redirection") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "sl2relax_cli_test.json";
  const std::vector<std::string> base = {"envelope", "--model", "adm",
                                         "--gamma", "3", "--grid", "-5:5:101"};
  const CliResult direct = run_cli(base);
  REQUIRE(direct.code == 0);

  std::vector<std::string> redirected = base;
  redirected.push_back("--output");
  redirected.push_back(path.string());
  const CliResult filed = run_cli(redirected);
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());

  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.out);
  fs::remove(path);

  CHECK(run_cli({"envelope", "--model", "adm", "--gamma", "3", "--output",
                 "/nonexistent_dir_sl2relax/x.json"}).code == 3);
}

TEST_CASE("help text") {
  const CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classify") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}
