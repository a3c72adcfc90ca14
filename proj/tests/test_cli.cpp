#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "delpezzo/cli.hpp"
#include "delpezzo/json.hpp"

using namespace delpezzo;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"verify", "--n", "9"}).code == 2);
  CHECK(run({"verify", "--n", "2"}).code == 2);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"table", "--format", "xml"}).code == 2);
  CHECK(run({"remark2", "--rank", "4"}).code == 2);
  CHECK(run({"verify", "--output", "/nonexistent-dir/x.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify json is an array of passing reports that round-trips") {
  const auto r = run({"verify", "--n", "all", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 29);
  for (const auto& item : j) {
    CHECK(item.at("pass").get<bool>());
    CHECK(json::to_json(json::report_from_json(item)) == item);
  }
}

TEST_CASE("table csv") {
  const auto r = run({"table", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, line, row7;
  std::getline(lines, header);
  CHECK(header == "n,type,roots,q1,q0,radical_dim,arf,weyl_order,autL_order,oL2_order,rho_image_order");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.rfind("7,", 0) == 0) row7 = line;
  }
  CHECK(rows == 6);
  CHECK(row7 == "7,E7,126,64,64,1,,2903040,2903040,1451520,1451520");
}

TEST_CASE("output is deterministic, also across worker counts") {
  const auto a = run({"verify", "--format", "json"});
  const auto b = run({"verify", "--format", "json"});
  const auto c = run({"verify", "--format", "json", "--jobs", "4"});
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(run({"table", "--jobs", "3"}).out == run({"table"}).out);
}

TEST_CASE("--output writes the report file") {
  const auto path = std::filesystem::temp_directory_path() / "delpezzo_cli_test.csv";
  const auto r = run({"verify", "--n", "5", "--format", "csv", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"verify", "--n", "5", "--format", "csv"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("roots and remark2") {
  const auto r = run({"roots", "--n", "8", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 241);
  const auto j = nlohmann::json::parse(run({"roots", "--n", "3", "--format", "json"}).out);
  CHECK(j.at(0).at("roots").size() == 8);
  CHECK(j.at(0).at("lattice").at("gram").size() == 3);
  const auto rem = run({"remark2", "--rank", "8", "--format", "json"});
  CHECK(rem.code == 0);
  const auto jr = nlohmann::json::parse(rem.out);
  CHECK(jr.at(0).at("numbers").at("q1_count") == 120);
  CHECK(jr.at(0).at("numbers").at("roots") == 72);
}
