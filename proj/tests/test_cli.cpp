#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "support.hpp"

using namespace toricdimer;
using namespace toricdimer::testing;
using toricdimer::cli::dispatch;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("toricdimer_cli_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

json::Json out_json(const cli::CommandResult& r) { return json::Json::parse(r.out); }

}  // namespace

TEST_CASE("bnr full support") {
  const auto r = dispatch({"bnr", "--n", "2", "--r", "1", "--full-support"});
  REQUIRE(r.exit_code == 0);
  const auto j = out_json(r);
  CHECK(j["full_support"] == true);
  CHECK(j["lattice_points"].size() == 4);
  CHECK(j["matching_count"] == 5);
}

TEST_CASE("bnr realize and graph output") {
  auto r = dispatch({"bnr", "--n", "5", "--r", "2", "--realize", "1,1"});
  REQUIRE(r.exit_code == 0);
  CHECK(out_json(r)["matching"] == json::Json::parse("[1,4,8,9,13]"));
  CHECK(out_json(r)["circuit"] == json::Json::parse("[0,1,2,4]"));

  r = dispatch({"bnr", "--n", "5", "--r", "2", "--realize", "[2,0]"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("OutsideTriangle") != std::string::npos);

  r = dispatch({"bnr", "--n", "2", "--r", "1"});
  REQUIRE(r.exit_code == 0);
  CHECK(json::graph_from_string(r.out) == build_bnr(2, 1).graph);

  CHECK(dispatch({"bnr", "--n", "2", "--r", "1", "--realize", "1,0", "--full-support"}).exit_code == 1);
  CHECK(dispatch({"bnr", "--n", "4", "--r", "2", "--realize", "1,0"}).exit_code == 2);
}

TEST_CASE("circulant ham cross check") {
  const auto r = dispatch({"circulant", "ham", "--n", "6", "--a", "2", "--b", "3", "--method", "cross"});
  REQUIRE(r.exit_code == 0);
  const auto j = out_json(r);
  CHECK(j["hamiltonian"] == false);
  CHECK(j["methods_agree"] == true);
  CHECK(dispatch({"circulant", "ham", "--n", "6", "--a", "2", "--b", "3", "--method", "magic"}).exit_code == 1);
  CHECK(dispatch({"circulant", "ham", "--n", "6", "--a", "2", "--b", "4"}).exit_code == 2);
  CHECK(dispatch({"circulant", "ham", "--n", "20", "--a", "1", "--b", "3", "--method", "brute"}).exit_code == 2);
}

TEST_CASE("circulant path") {
  const auto r = dispatch({"circulant", "path", "--n", "5", "--a", "1", "--b", "2", "--target", "3,1"});
  REQUIRE(r.exit_code == 0);
  CHECK(out_json(r)["path"] == json::Json::parse("[[0,0],[1,0],[2,0],[2,1],[3,1]]"));
  CHECK(out_json(r)["circuit"] == json::Json::parse("[0,1,2,4]"));
  CHECK(dispatch({"circulant", "path", "--n", "5", "--a", "1", "--b", "2", "--target", "6,2"}).exit_code == 2);
  CHECK(dispatch({"circulant", "path", "--n", "5", "--a", "1", "--b", "2", "--target", "6"}).exit_code == 1);
}

TEST_CASE("graph check") {
  const auto good = write_temp("good", json::graph_to_string(honeycomb_cell()));
  auto r = dispatch({"graph", "check", good});
  REQUIRE(r.exit_code == 0);
  CHECK(out_json(r)["validation"]["valid"] == true);
  CHECK(out_json(r)["faces"]["cellular"] == true);

  const auto bad = write_temp("bad", R"({"num_white":1,"num_black":1,"edges":[[0,1,0,0]]})");
  r = dispatch({"graph", "check", bad});
  CHECK(r.exit_code == 2);
  CHECK(out_json(r)["validation"]["findings"][0]["kind"] == "edge_out_of_range");

  CHECK(dispatch({"graph", "check", write_temp("junk", "not json")}).exit_code == 2);
  CHECK(dispatch({"graph", "check", "/nonexistent/graph.json"}).exit_code == 2);
}

TEST_CASE("match enum") {
  const auto file = write_temp("b21", json::graph_to_string(build_bnr(2, 1).graph));
  const auto r = dispatch({"match", "enum", file});
  REQUIRE(r.exit_code == 0);
  CHECK(out_json(r)["count"] == 5);
  CHECK(out_json(r)["matchings"][4]["phi"] == json::Json::parse("[1,2]"));

  const auto none = write_temp("none", R"({"num_white":2,"num_black":2,"edges":[[0,0,0,0],[0,1,0,0]]})");
  const auto r2 = dispatch({"match", "enum", none});
  REQUIRE(r2.exit_code == 0);
  CHECK(out_json(r2)["count"] == 0);
  CHECK(out_json(r2)["uncovered_vertex"]["index"] == 1);
}

TEST_CASE("heights") {
  const auto file = write_temp("b52", json::graph_to_string(build_bnr(5, 2).graph));
  auto r = dispatch({"heights", file, "--base", "0,3,6,9,12", "--match", "[1,4,8,9,13]", "--patch", "3x2"});
  REQUIRE(r.exit_code == 0);
  const auto j = out_json(r);
  CHECK(j["height_change"] == json::Json::parse("[1,1]"));
  CHECK(j["tilde_height_change"] == json::Json::parse("[-1,1]"));
  CHECK(j["pass"] == true);
  CHECK(j["divide"]["d"] == 1);

  CHECK(dispatch({"heights", file, "--base", "0,3,6,9", "--match", "0,3,6,9,12"}).exit_code == 2);
  CHECK(dispatch({"heights", file, "--base", "0,3,x", "--match", "0,3,6,9,12"}).exit_code == 1);
  CHECK(dispatch({"heights", file, "--base", "0,3,6,9,12", "--match", "0,3,6,9,12", "--patch", "2by2"}).exit_code == 1);
}

TEST_CASE("operator") {
  const auto file = write_temp("b21op", json::graph_to_string(build_bnr(2, 1).graph));
  const auto r = dispatch({"operator", file, "--four-eval", "--verify"});
  REQUIRE(r.exit_code == 0);
  const auto j = out_json(r);
  CHECK(j["coefficients_match_counts"] == true);
  CHECK(j["four_evaluations"]["count"] == 5);
  CHECK(j["polynomial"]["terms"].size() == 4);

  const auto norot = write_temp("norot", R"({"num_white":1,"num_black":1,"edges":[[0,0,0,0]]})");
  CHECK(dispatch({"operator", norot}).exit_code == 2);
}

TEST_CASE("newton") {
  const auto file = write_temp("grid", json::graph_to_string(square_grid_2x2()));
  auto r = dispatch({"newton", file, "--base", "2,6"});
  REQUIRE(r.exit_code == 0);
  CHECK(out_json(r)["full_support"] == true);
  CHECK(out_json(r)["lattice_points"].size() == 5);
  CHECK(dispatch({"newton", file, "--base", "0,1"}).exit_code == 2);
}

TEST_CASE("honeycomb") {
  auto r = dispatch({"honeycomb", "--matrix", "2,0,0,1", "--verify"});
  REQUIRE(r.exit_code == 0);
  CHECK(out_json(r)["pass"] == true);
  CHECK(out_json(r)["lozenge_check"]["verdicts"].size() == 5);
  r = dispatch({"honeycomb", "--matrix", "3,-5,4,4"});
  REQUIRE(r.exit_code == 0);
  CHECK(json::graph_from_string(r.out).num_white() == 32);
  CHECK(dispatch({"honeycomb", "--matrix", "1,2,2,4"}).exit_code == 2);
  CHECK(dispatch({"honeycomb", "--matrix", "1,2,2"}).exit_code == 1);
}

TEST_CASE("usage") {
  CHECK(dispatch({}).exit_code == 1);
  CHECK(dispatch({"frobnicate"}).exit_code == 1);
  CHECK(dispatch({"bnr", "--n", "2"}).exit_code == 1);
  const auto help = dispatch({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("circulant") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"bnr", "--n", "5", "--r", "2", "--full-support"};
  CHECK(dispatch(args).out == dispatch(args).out);
  const std::vector<std::string> ham{"circulant", "ham", "--n", "12", "--a", "5", "--b", "7"};
  CHECK(dispatch(ham).out == dispatch(ham).out);
}
