#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "csdp/cli.hpp"
#include "csdp/io.hpp"
#include "doctest.h"

using namespace csdp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "csdp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("csdp_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& content) const {
    const auto p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("verify") {
  const auto ok = cli({"verify", "--instance", "glmat", "--n", "2", "--samples", "10"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("overall: PASS") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(cli({"verify", "--instance", "glt12_sym", "--n", "3", "--samples", "5"}).code == 0);
  CHECK(cli({"verify", "--instance", "glt12", "--n", "1", "--samples", "5"}).code == 0);

  const auto broken = cli({"verify", "--instance", "broken", "--n", "2", "--samples", "5"});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("FAIL action.commutation") != std::string::npos);

  CHECK(cli({"verify", "--n", "0"}).code == 2);
  CHECK(cli({"verify", "--instance", "so3"}).code == 2);
  CHECK(cli({"verify", "--samples", "0"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("verify output is ordered by check name") {
  const auto r = cli({"verify", "--instance", "glt12", "--n", "2", "--samples", "3"});
  std::istringstream in(r.out);
  std::string line, previous;
  std::getline(in, line);  // header
  while (std::getline(in, line) && line.rfind("overall", 0) != 0) {
    const std::string name = line.substr(5, line.find(' ', 5) - 5);
    CHECK(previous < name);
    previous = name;
  }
}

TEST_CASE("simulate") {
  TempDir dir;
  const std::string csv = dir.file("traj.csv");
  const auto cfg = dir.write("run.json", R"({"instance": "glmat", "n": 1, "orientation": "right",
      "integrator": {"h": 0.01, "steps": 100}, "seed": 5, "output": ")" + csv + "\"}");
  const auto r = cli({"simulate", "--config", cfg});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("final_time=1 max_energy_drift=", 0) == 0);
  CHECK(fs::exists(csv));
  const std::string first = read_file(csv);
  CHECK(cli({"simulate", "--config", cfg}).code == 0);
  CHECK(read_file(csv) == first);

  const std::string other = dir.file("other.csv");
  CHECK(cli({"simulate", "--config", cfg, "--output", other}).code == 0);
  CHECK(read_file(other) == first);

  CHECK(cli({"simulate", "--config", dir.file("missing.json")}).code == 2);
  CHECK(cli({"simulate", "--config", dir.write("bad.json", "{ not json")}).code == 2);
  CHECK(cli({"simulate", "--config", dir.write("nopath.json", R"({"instance": "glmat", "n": 1,
      "orientation": "right", "integrator": {"h": 0.01, "steps": 1}})")})
            .code == 2);
  CHECK(cli({"simulate"}).code == 2);
}

TEST_CASE("simulate reports singular reconstruction and leaves no file") {
  TempDir dir;
  const std::string csv = dir.file("sing.csv");
  const auto cfg = dir.write("sing.json", R"({"instance": "glmat", "n": 2, "orientation": "right",
      "initial": {"xi_g": [50, 0, 0, -50], "xi_v": [0, 0, 0, 0]},
      "integrator": {"h": 0.01, "steps": 100}, "output": ")" + csv + "\"}");
  const auto r = cli({"simulate", "--config", cfg});
  CHECK(r.code == 3);
  CHECK(r.err.find("step") != std::string::npos);
  CHECK_FALSE(fs::exists(csv));
  CHECK_FALSE(fs::exists(csv + ".tmp"));
}

TEST_CASE("jet-compose") {
  TempDir dir;
  const auto left = dir.write("l.json", R"({"A1": [[2]], "A2": [[[1]]]})");
  const auto right = dir.write("r.json", R"({"A1": [[3]], "A2": [[[1]]]})");
  const auto r = cli({"jet-compose", "--left", left, "--right", right});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"A1\": [[6]], \"A2\": [[[11]]]}\n");

  const auto id = dir.write("id.json", jet_to_json(Jet2::identity(1)));
  CHECK(cli({"jet-compose", "--left", id, "--right", right}).out == "{\"A1\": [[3]], \"A2\": [[[1]]]}\n");

  const auto o = cli({"jet-compose", "--left", left, "--right", right, "--oracle"});
  CHECK(o.code == 0);
  CHECK(o.out.find("\"oracle_deviation\": 0") != std::string::npos);

  const auto two = dir.write("two.json", jet_to_json(Jet2::identity(2)));
  CHECK(cli({"jet-compose", "--left", left, "--right", two}).code == 2);
  CHECK(cli({"jet-compose", "--left", dir.write("bad.json", "[["), "--right", right}).code == 2);
  CHECK(cli({"jet-compose", "--left", dir.write("sing.json", R"({"A1": [[0]], "A2": [[[1]]]})"), "--right", right})
            .code == 2);
  CHECK(cli({"jet-compose", "--left", left}).code == 2);
}
