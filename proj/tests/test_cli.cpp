// End-to-end checks of the command-line surface: exit codes, output
// schemas, determinism and the manifest contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  const fs::path errfile =
      fs::temp_directory_path() / ("hyperent_cli_err_" +
                                   std::to_string(counter++) + ".txt");
  std::string cmd = std::string(HYPERENT_CLI_PATH) + " " + args + " 2>" +
                    errfile.string();
  if (!stdin_text.empty()) {
    const fs::path infile =
        fs::temp_directory_path() / ("hyperent_cli_in_" +
                                     std::to_string(counter++) + ".txt");
    std::ofstream(infile) << stdin_text;
    cmd += " <" + infile.string();
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  fs::remove(errfile);
  return res;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

const char* kFig1A =
    R"({"n": 7, "k": 3, "edges": [[1,2,3],[3,4,5],[3,6,7]]})";

}  // namespace

TEST_CASE("entropy subcommand") {
  auto file = write_temp("cli_fig1a.json", kFig1A);

  auto res = run("entropy " + file.string() + " --algorithm svd");
  REQUIRE(res.exit_code == 0);
  json j = json::parse(res.out);
  CHECK(j["algorithm"] == "svd");
  CHECK(j["zero_multiplicity"] == 0);
  CHECK(j["connected"] == true);
  CHECK(j["entropy"].get<double>() > 0.0);
  CHECK(j["singular_values"].size() == 7);
  CHECK(j.contains("effective_resistance"));
  CHECK(j.contains("elapsed_ms"));

  // single edge on n=7: both algorithms give ln 3
  auto single = write_temp("cli_single.json",
                           R"({"n": 7, "k": 3, "edges": [[1,2,3]]})");
  for (const char* algo : {"svd", "tt"}) {
    auto r = run("entropy " + single.string() + " --algorithm " + algo);
    REQUIRE(r.exit_code == 0);
    json js = json::parse(r.out);
    CHECK(js["entropy"].get<double>() == doctest::Approx(1.0986).epsilon(1e-4));
    // disconnected: infinite resistance serialized as null
    CHECK(js["effective_resistance"].is_null());
    CHECK(js["connected"] == false);
  }
}

TEST_CASE("exit codes") {
  // malformed JSON -> 2
  auto bad = write_temp("cli_bad.json", "{not json");
  CHECK(run("entropy " + bad.string()).exit_code == 2);

  // edge with out-of-range vertex -> 2, message names the violation
  auto oor = write_temp("cli_oor.json",
                        R"({"n": 4, "k": 3, "edges": [[1,2,9]]})");
  CHECK(run("entropy " + oor.string()).exit_code == 2);

  // k = 2 with the TT algorithm -> 2 (order too small)
  auto graph = write_temp("cli_graph.json",
                          R"({"n": 3, "k": 2, "edges": [[1,2]]})");
  CHECK(run("entropy " + graph.string() + " --algorithm tt").exit_code == 2);
  CHECK(run("entropy " + graph.string() + " --algorithm svd").exit_code == 0);

  // unknown flag -> 2
  CHECK(run("entropy --bogus").exit_code == 2);

  // missing file -> 2
  CHECK(run("entropy /nonexistent/path.json").exit_code == 2);

  // ws without --seed -> 2
  CHECK(run("ws --n 100 --k 4 --q 3 --p 0 --seeds 1").exit_code == 2);
}

TEST_CASE("metrics subcommand") {
  auto file = write_temp("cli_fig1a.json", kFig1A);
  auto res = run("metrics " + file.string() + " --cap 4");
  REQUIRE(res.exit_code == 0);
  json j = json::parse(res.out);
  CHECK(j["n"] == 7);
  CHECK(j["m"] == 3);
  CHECK(j["degrees"][2] == 3);
  CHECK(j["avg_clustering"].get<double>() == doctest::Approx(0.0));
  CHECK(!j.contains("small_world"));

  auto sw = run("metrics " + file.string() + " --cap 4 --samples 50 --seed 7");
  REQUIRE(sw.exit_code == 0);
  CHECK(json::parse(sw.out).contains("small_world"));

  // empty edge set: dispersion undefined, path length capped
  auto empty = write_temp("cli_empty.json", R"({"n": 4, "k": 3, "edges": []})");
  auto er = run("metrics " + empty.string() + " --cap 4");
  REQUIRE(er.exit_code == 0);
  json ej = json::parse(er.out);
  CHECK(ej["index_of_dispersion"].is_null());
  CHECK(ej["avg_path_length"] == 4.0);
}

TEST_CASE("evolve subcommand is deterministic") {
  const std::string args = "evolve --n 7 --k 3 --steps 5 --objective min";
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  std::istringstream lines(a.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "step,edge,entropy,path_length,dispersion,clustering,resistance");
  int rows = 0;
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line))
    if (!line.empty()) {
      ++rows;
      all.push_back(line);
    }
  CHECK(rows == 5);
  // second row carries the 1.3358 entropy coordinate
  CHECK(all[1].find("1.3357") != std::string::npos);
}

TEST_CASE("ws subcommand determinism and schema") {
  const std::string args =
      "ws --n 100 --k 4 --q 3 --p 0 --seeds 1 --sw-samples 0 --seed 5";
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed,entropy,avg_clustering,avg_path_length,small_world") !=
        std::string::npos);
  CHECK(a.out.find("4.5526") != std::string::npos);  // S(3)(0) = 4.5527
  CHECK(a.out.find("mean,") != std::string::npos);
}

TEST_CASE("bench subcommand") {
  auto res = run("bench --k 4 --n-list 4,7 --algorithm both --repeat 2");
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "n,m,tt_max_rank,svd_ms,tt_ms,entropy_svd,entropy_tt,rel_error");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) {
    if (row.empty()) continue;
    ++rows;
    // relative error column within 1e-10
    const auto pos = row.rfind(',');
    const double rel = std::stod(row.substr(pos + 1));
    CHECK(rel <= 1e-10);
  }
  CHECK(rows == 2);
}

TEST_CASE("ingest subcommand") {
  auto csv = write_temp("cli_series.csv", "x,y,z\n1,2,3\n2,4,6\n3,6,9\n5,10,15\n");
  auto res = run("ingest --input " + csv.string() + " --k 3 --threshold 0.93");
  REQUIRE(res.exit_code == 0);
  json j = json::parse(res.out);
  CHECK(j["n"] == 3);
  CHECK(j["k"] == 3);
  REQUIRE(j["edges"].size() == 1);
  CHECK(j["edges"][0] == json::array({1, 2, 3}));

  // weight-matrix mode
  auto wm = write_temp("cli_weights.csv", "0,0.96,0\n0.96,0,0.5\n0,0.5,0\n");
  auto mres = run("ingest --input " + wm.string() +
                  " --k 2 --threshold 0.95 --matrix");
  REQUIRE(mres.exit_code == 0);
  json mj = json::parse(mres.out);
  CHECK(mj["k"] == 2);
  REQUIRE(mj["edges"].size() == 1);
  CHECK(mj["edges"][0] == json::array({1, 2}));

  // the ingested hypergraph feeds straight back into entropy
  auto out = fs::temp_directory_path() / "cli_ingested.json";
  auto chain = run("--output " + out.string() + " ingest --input " +
                   csv.string() + " --k 3 --threshold 0.5");
  REQUIRE(chain.exit_code == 0);
  auto ent = run("entropy " + out.string());
  CHECK(ent.exit_code == 0);

  // ragged CSV -> 2
  auto ragged = write_temp("cli_ragged.csv", "a,b\n1,2\n3\n");
  CHECK(run("ingest --input " + ragged.string() + " --k 2 --threshold 0.5")
            .exit_code == 2);
}

TEST_CASE("manifest and atomic output") {
  auto file = write_temp("cli_fig1a.json", kFig1A);
  const fs::path manifest = fs::temp_directory_path() / "cli_manifest.json";
  const fs::path output = fs::temp_directory_path() / "cli_entropy_out.json";

  auto res = run("--output " + output.string() + " --manifest " +
                 manifest.string() + " --seed 11 entropy " + file.string());
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.empty());  // everything went to files

  json m = json::parse(std::ifstream(manifest));
  CHECK(m["command"] == "entropy");
  CHECK(m["tool_version"] == "1.0.0");
  CHECK(m["seed"] == 11);
  CHECK(m["parameters"]["algorithm"] == "svd");
  CHECK(m.contains("started"));
  CHECK(m.contains("finished"));

  json o = json::parse(std::ifstream(output));
  CHECK(o["entropy"].get<double>() > 0.0);
  // no stray temp file left behind
  CHECK(!fs::exists(output.string() + ".tmp"));
}
