#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "polar/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "polar");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = polar::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Fixtures {
  fs::path dir;
  Fixtures() {
    dir = fs::temp_directory_path() / ("polar_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    write("circle.txt", "x1^2 + x2^2 - 1\n");
    write("sphere.txt", "x1^2 + x2^2 + x3^2 - 1\n");
    write("bad.txt", "x1^2 + x2^2 - 1\nx1 * + x2\n");
    write("a10.json", "[[1, 0]]");
    write("sphere_a.json", "[[1, 0, 0], [0, 1, 0]]");
    write("dual.json", "[[1, 2, 0]]");
  }
  ~Fixtures() { fs::remove_all(dir); }
  void write(const std::string& name, const std::string& text) { std::ofstream(dir / name) << text; }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("dim, deg and gb") {
  Fixtures f;
  Run d = run({"dim", "--system", f("circle.txt")});
  CHECK(d.code == 0);
  CHECK(d.out == "1\n");
  CHECK(run({"deg", "--system", f("sphere.txt")}).out == "2\n");
  Run gb = run({"gb", "--system", f("circle.txt"), "--json"});
  CHECK(gb.code == 0);
  CHECK(nlohmann::json::parse(gb.out).is_object());
}

TEST_CASE("construct") {
  Fixtures f;
  Run r = run({"construct", "--flavor", "classic", "--i", "1", "--system", f("circle.txt"), "--matrix", f("a10.json"),
               "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 0);
  CHECK(j["degree"] == 2);

  Run dual = run({"construct", "--flavor", "dual", "--i", "1", "--system", f("circle.txt"), "--matrix",
                  f("dual.json"), "--json", "--report", f("report.json")});
  REQUIRE(dual.code == 0);
  std::ifstream in(f("report.json"));
  nlohmann::json report = nlohmann::json::parse(in);
  CHECK(report["basis"] == nlohmann::json{"x2", "x1^2 - 1"});
}

TEST_CASE("pointwise subcommands") {
  Fixtures f;
  CHECK(run({"tb", "--system", f("sphere.txt"), "--matrix", f("sphere_a.json"), "--point", "1,0,0"}).out == "1\n");
  CHECK(run({"fiber", "--system", f("sphere.txt"), "--matrix", f("sphere_a.json"), "--point", "0,0,1", "--i", "1"})
            .out == "-1\n");
  Run off = run({"tb", "--system", f("sphere.txt"), "--matrix", f("sphere_a.json"), "--point", "0,0,0"});
  CHECK(off.code == polar::kExitInput);
  CHECK(off.err.find("not on S") != std::string::npos);
}

TEST_CASE("delta and singular") {
  Fixtures f;
  CHECK(run({"delta", "--i", "1", "--system", f("sphere.txt"), "--matrix", f("sphere_a.json")}).out.find("-1") !=
        std::string::npos);
  Run s = run({"singular", "--i", "1", "--system", f("sphere.txt"), "--matrix", f("sphere_a.json"), "--json"});
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["dim_sing"] == -1);
}

TEST_CASE("input errors") {
  Fixtures f;
  Run bad = run({"dim", "--system", f("bad.txt")});
  CHECK(bad.code == polar::kExitInput);
  CHECK(bad.err.find("line 2, column 6") != std::string::npos);
  CHECK(run({"dim", "--system", f("missing.txt")}).code == polar::kExitInput);
  CHECK(run({"dim"}).code == polar::kExitInput);
  CHECK(run({"frobnicate"}).code == polar::kExitInput);
  CHECK(run({"--help"}).code == polar::kExitOk);
  CHECK(run({"dim", "--system", f("circle.txt"), "--prime", "15"}).code == polar::kExitInput);
}

TEST_CASE("budgets map to their own exit code") {
  Fixtures f;
  f.write("quad.txt", "x1^2 + 3*x2*x3 - x1 + 2\nx2^2 - 5*x1*x3 + x3\nx3^2 + x1*x2 - 7\n");
  CHECK(run({"gb", "--system", f("quad.txt"), "--max-pairs", "1"}).code == polar::kExitBudget);
}

TEST_CASE("experiment output is deterministic") {
  Fixtures f;
  std::vector<std::string> args{"experiment", "--nmax", "3", "--seeds", "2", "--master-seed", "4", "--quiet"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 8);

  std::vector<std::string> to_file = args;
  to_file.insert(to_file.end(), {"--out", f("grid.jsonl")});
  Run c = run(to_file);
  CHECK(c.out.empty());
  std::ifstream in(f("grid.jsonl"));
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == a.out);
}
