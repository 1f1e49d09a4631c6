#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "doctest.h"
#include "p5col/cli.hpp"
#include "p5col/errors.hpp"
#include "p5col/graph_io.hpp"
#include "p5col/pipeline.hpp"
#include "p5col/serialize.hpp"
#include "support.hpp"

using namespace p5col;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("p5col_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string write(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("coloring JSON round-trips") {
  MultiColoring c{4, {{1, 2}, {3}, {1, 4}}};
  Json j = coloring_to_json(c);
  CHECK(j.dump() == R"({"0":[1,2],"1":[3],"2":[1,4]})");
  MultiColoring back = coloring_from_json(nlohmann::json::parse(j.dump()), 3);
  CHECK(back.colors == c.colors);
  CHECK(back.num_colors == 4);
  CHECK_THROWS_AS(coloring_from_json(nlohmann::json::parse(R"({"7":[1]})"), 3), ParseError);
  CHECK_THROWS_AS(coloring_from_json(nlohmann::json::parse(R"({"x":[1]})"), 3), ParseError);
}

TEST_CASE("report JSON carries class, chi, routes and tree") {
  Json j = to_json(solve_p5_cop5(cycle_graph(5)));
  CHECK(j["class"] == "p5-cop5");
  CHECK(j["p"].is_null());
  CHECK(j["chi"] == 3);
  CHECK(j["routes"][0]["route"] == "prime-C5");
  CHECK(j.contains("tree"));
  CHECK_FALSE(j.contains("ms"));
  CHECK(to_json(solve_p5_cop5(cycle_graph(5)), true).contains("ms"));
  Json k = to_json(solve_p5_kpe(testing::bowtie(), 4));
  CHECK(k["p"] == 4);
  CHECK(k["tree"]["separator"] == std::vector<int>{2});
  CHECK(k["tree"]["left"]["type"] == "leaf");
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("solve writes a validating report; repeated runs are identical") {
  auto dir = scratch();
  auto c5 = write(dir / "c5.col", format_graph(cycle_graph(5), GraphFormat::Dimacs));
  Run a = run({"solve", "--class", "p5-cop5", "--input", c5});
  REQUIRE(a.code == 0);
  CHECK(nlohmann::json::parse(a.out)["chi"] == 3);
  Run b = run({"solve", "--class", "p5-cop5", "--input", c5});
  CHECK(a.out == b.out);
  auto report = write(dir / "c5.json", a.out);
  Run v = run({"oracle", "validate", "--input", c5, "--coloring", report});
  CHECK(v.code == kExitOk);
  auto bad = write(dir / "bad.json", R"({"0":[1],"1":[1],"2":[2],"3":[1],"4":[2]})");
  CHECK(run({"oracle", "validate", "--input", c5, "--coloring", bad}).code ==
        kExitInvalidColoring);
  Run text = run({"solve", "--input", c5, "--report", "text"});
  CHECK(text.out.find("chi: 3") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto dir = scratch();
  auto p5 = write(dir / "p5.col", format_graph(path_graph(5), GraphFormat::Dimacs));
  Run nc = run({"solve", "--class", "p5-cop5", "--input", p5, "--json-errors"});
  CHECK(nc.code == kExitNotInClass);
  auto err = nlohmann::json::parse(nc.err);
  CHECK(err["witness"]["pattern"] == "P5");

  auto broken = write(dir / "broken.col", "p edge 3 1\ne 1 9\n");
  Run pe = run({"solve", "--input", broken});
  CHECK(pe.code == kExitParse);
  CHECK(pe.err.find("line 2") != std::string::npos);

  auto k33 = write(dir / "k33.col",
                   format_graph(join(empty_graph(3), empty_graph(3)), GraphFormat::Dimacs));
  CHECK(run({"--oracle-n", "4", "solve", "--class", "p5-kpe", "--p", "4", "--input", k33}).code ==
        kExitCutoff);
  CHECK(run({"solve", "--class", "p5-kpe", "--p", "4", "--input", k33}).code == kExitOk);
  CHECK(run({"--oracle-n", "4", "oracle", "chi", "--input", k33}).code == kExitCutoff);

  CHECK(run({"solve", "--class", "p5-kpe", "--input", k33}).code == kExitUsage);
  CHECK(run({"solve", "--p", "4", "--input", k33}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"solve", "--input", (dir / "missing.col").string()}).code == kExitParse);
}

TEST_CASE("batch solve with jobs keeps input order") {
  auto dir = scratch();
  std::vector<std::string> args{"solve", "--jobs", "3", "--input"};
  for (int n = 1; n <= 6; ++n) {
    args.push_back(write(dir / ("k" + std::to_string(n) + ".col"),
                         format_graph(complete_graph(n), GraphFormat::Dimacs)));
  }
  Run r = run(args);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 6);
  for (int n = 1; n <= 6; ++n) CHECK(j[n - 1]["chi"] == n);
  args[2] = "1";
  CHECK(run(args).out == r.out);
}

TEST_CASE("generate is seeded and emits members") {
  Run a = run({"generate", "--class", "p5-cop5", "--n", "9", "--seed", "4"});
  Run b = run({"generate", "--class", "p5-cop5", "--n", "9", "--seed", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Graph g = parse_graph(a.out, GraphFormat::Dimacs);
  CHECK(g.n() == 9);
  CHECK_FALSE(class_membership(g, GraphClass::p5_cop5()));
  auto dir = scratch() / "gen";
  Run many = run({"generate", "--class", "p5-kpe", "--p", "4", "--n", "7", "--count", "3",
                  "--density", "0.3", "--output-dir", dir.string()});
  CHECK(many.code == 0);
  int files = 0;
  for (auto& entry : fs::directory_iterator(dir)) {
    ++files;
    CHECK_FALSE(class_membership(read_graph_file(entry.path().string(), GraphFormat::Dimacs),
                                 GraphClass::p5_kpe(4)));
  }
  CHECK(files == 3);
  CHECK(run({"generate", "--n", "4", "--count", "2"}).code == kExitUsage);
}

TEST_CASE("decompose, oracle and verify subcommands") {
  auto dir = scratch();
  auto d = write(dir / "d.txt", format_graph(complete_minus_edge(4), GraphFormat::EdgeList));
  Run cs = run({"decompose", "--kind", "cliquesep", "--input", d});
  REQUIRE(cs.code == 0);
  auto t = nlohmann::json::parse(cs.out);
  CHECK(t["separator"] == std::vector<int>{2, 3});
  CHECK(t["right"]["type"] == "leaf");
  Run md = run({"decompose", "--kind", "modular", "--input", d});
  REQUIRE(md.code == 0);
  auto m = nlohmann::json::parse(md.out);
  CHECK(m["type"] == "series");
  CHECK(m["children"].size() == 3);

  auto k4 = write(dir / "k4.col", format_graph(complete_graph(4), GraphFormat::Dimacs));
  Run chi = run({"oracle", "chi", "--input", k4, "--report", "text"});
  CHECK(chi.out == "4\n");
  auto pet = write(dir / "pet.col", format_graph(petersen_graph(), GraphFormat::Dimacs));
  CHECK(run({"oracle", "matching", "--input", pet, "--report", "text"}).out == "5\n");
  CHECK(run({"oracle", "omega", "--input", pet, "--report", "text"}).out == "2\n");
  auto w = write(dir / "w.txt", "0 2\n1 3\n");
  auto k2 = write(dir / "k2.col", "p edge 2 1\ne 1 2\n");
  CHECK(run({"oracle", "chiw", "--input", k2, "--weights", w, "--report", "text"}).out == "5\n");

  Run v = run({"verify", "lemma5", "--n-max", "6"});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out).contains("levels"));
  Run o = run({"verify", "oracle", "--class", "p5-kpe", "--p", "5", "--samples", "20",
               "--n-max", "8", "--seed", "2"});
  CHECK(o.code == 0);
  CHECK(o.out == run({"verify", "oracle", "--class", "p5-kpe", "--p", "5", "--samples", "20",
                      "--n-max", "8", "--seed", "2"}).out);
}

}  // TEST_SUITE
