#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "morrey/jobs.hpp"
#include "morrey/json_io.hpp"

using namespace morrey;

TEST_CASE("space and weight specs round-trip through json") {
  const std::string text = R"({
    "scale": "N", "d": 2, "s": 1.5, "p": 2.0, "q": "inf",
    "phi": {"family": "piecewise_power", "u": 2.0, "v": "inf"}
  })";
  const SpaceSpec sp = space_from_json(ordered_json::parse(text));
  CHECK(sp.scale == Scale::N);
  CHECK(sp.d == 2);
  CHECK(sp.s == 1.5);
  CHECK(std::isinf(sp.q));
  CHECK(sp.phi->family == PhiFamily::piecewise_power);

  const SpaceSpec back = space_from_json(space_to_json(sp));
  CHECK(back.s == sp.s);
  CHECK(std::isinf(back.q));
  CHECK(back.phi->u == sp.phi->u);
  CHECK(std::isinf(back.phi->v));

  CHECK_THROWS_AS(space_from_json(ordered_json::parse(R"({"scale":"X"})")),
                  config_error);
  CHECK_THROWS_AS(
      space_from_json(ordered_json::parse(
          R"({"scale":"N","d":1,"s":0,"p":1,"q":"wide","phi":{"family":"power","u":1}})")),
      config_error);
}

TEST_CASE("sequences round-trip through json") {
  DyadicSeq seq(2, 3);
  seq.set_coded(3, 17, 0.25);
  seq.set_coded(1, 2, 1.5);
  const ordered_json j = seq_to_json(seq);
  const DyadicSeq back = seq_from_json(j);
  CHECK(back.d == 2);
  CHECK(back.J == 3);
  CHECK(back.get_coded(3, 17) == 0.25);
  CHECK(back.get_coded(1, 2) == 1.5);
  CHECK(nnz(back) == 2);
}

TEST_CASE("verdict task produces a complete report") {
  const std::string cfg = R"({
    "task": "verdict",
    "source": {"scale": "N", "d": 1, "s": 1.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "target": {"scale": "N", "d": 1, "s": 0.25, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}}
  })";
  const RunResult res = run_config_text(cfg, "json", 1);
  REQUIRE(res.exit_code == 0);
  const ordered_json rep = ordered_json::parse(res.report);
  CHECK(rep["task"] == "verdict");
  CHECK(rep["verdict"]["continuous"] == "yes");
  CHECK(rep["verdict"]["compact"] == "yes");
  CHECK(rep["verdict"]["rules"].is_array());
  CHECK(rep["verdict"]["trace"]["rho"] == 1.0);
}

TEST_CASE("norms task evaluates all evaluators") {
  const std::string cfg = R"({
    "task": "norms",
    "params": {"d": 1, "s": 0.5, "p": 2.0, "q": 1.0,
               "phi": {"family": "power", "u": 2.0}},
    "sequence": {"d": 1, "J": 3,
                 "entries": [{"j": 2, "m": [1], "v": 0.8}]}
  })";
  const RunResult res = run_config_text(cfg, "json", 1);
  REQUIRE(res.exit_code == 0);
  const ordered_json rep = ordered_json::parse(res.report);
  CHECK(rep["n_norm_star"].get<double>() == doctest::Approx(0.8));
  CHECK(rep["n_norm_morrey"].get<double>() == doctest::Approx(0.8));
  CHECK(rep["b_norm"].get<double>() == doctest::Approx(0.8));
}

TEST_CASE("witness task reports the probe") {
  const std::string cfg = R"({
    "task": "witness",
    "source": {"scale": "N", "d": 1, "s": 1.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "target": {"scale": "N", "d": 1, "s": 1.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "levels": [10, 14, 18, 22]
  })";
  const RunResult res = run_config_text(cfg, "json", 1);
  REQUIRE(res.exit_code == 0);
  const ordered_json rep = ordered_json::parse(res.report);
  CHECK(rep["available"] == true);
  CHECK(rep["construction"] == "single-cube-target-normalized");
  CHECK(rep["probe"]["max_source_norm"].get<double>() > 0.0);
  CHECK(rep["probe"]["min_pairwise_target_gap"].get<double>() > 0.0);
}

TEST_CASE("config errors exit with code 2 and no report") {
  RunResult res = run_config_text("{not json", "json", 1);
  CHECK(res.exit_code == 2);
  CHECK(res.report.empty());
  CHECK_FALSE(res.error.empty());

  res = run_config_text(R"({"task": "fly"})", "json", 1);
  CHECK(res.exit_code == 2);
  CHECK(res.report.empty());

  res = run_config_text(R"([1, 2, 3])", "json", 1);
  CHECK(res.exit_code == 2);

  // csv only renders sweeps
  const std::string cfg = R"({
    "task": "verdict",
    "source": {"scale": "N", "d": 1, "s": 1.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "target": {"scale": "N", "d": 1, "s": 0.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}}
  })";
  res = run_config_text(cfg, "csv", 1);
  CHECK(res.exit_code == 2);
  CHECK(res.report.empty());
}

TEST_CASE("sweep values can be listed explicitly") {
  const std::string cfg = R"({
    "task": "sweep",
    "source": {"scale": "N", "d": 1, "s": 1.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "target": {"scale": "N", "d": 1, "s": 0.0, "p": 2.0, "q": "inf",
               "phi": {"family": "power", "u": 2.0}},
    "parameter": "source.q",
    "values": [0.5, 1.0, 2.0, "inf"]
  })";
  const RunResult res = run_config_text(cfg, "json", 2);
  REQUIRE(res.exit_code == 0);
  const ordered_json rep = ordered_json::parse(res.report);
  CHECK(rep["rows"].size() == 4);
  for (const auto& row : rep["rows"]) CHECK(row["continuous"] == "yes");

  const std::string bad = R"({
    "task": "sweep",
    "source": {"scale": "N", "d": 1, "s": 1.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "target": {"scale": "N", "d": 1, "s": 0.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "parameter": "target.u",
    "values": [1.0]
  })";
  CHECK(run_config_text(bad, "json", 1).exit_code == 2);
}

#ifndef _WIN32

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CliResult run_cli(const std::string& args, const std::string& config = "") {
  static int counter = 0;
  const char* bin = std::getenv("MORREYSEQ_BIN");
  REQUIRE(bin != nullptr);
  const std::string tag = std::to_string(counter++);
  const std::string dir = "cli_scratch_" + tag;
  const std::string cfg = dir + "/config.json";
  const std::string out = dir + "/stdout.txt";
  const std::string err = dir + "/stderr.txt";
  std::system(("mkdir -p " + dir).c_str());
  std::string full = std::string(bin) + " " + args;
  if (!config.empty()) {
    std::ofstream f(cfg, std::ios::binary);
    f << config;
    full += " --config " + cfg;
  }
  full += " >" + out + " 2>" + err;
  const int raw = std::system(full.c_str());
  CliResult res;
  res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  res.out = slurp(out);
  res.err = slurp(err);
  return res;
}

const char* kSweepConfig = R"({
  "task": "sweep",
  "source": {"scale": "N", "d": 1, "s": 1.5, "p": 2.0, "q": 2.0,
             "phi": {"family": "power", "u": 2.0}},
  "target": {"scale": "N", "d": 1, "s": 0.0, "p": 2.0, "q": 2.0,
             "phi": {"family": "power", "u": 2.0}},
  "parameter": "target.s",
  "from": 0.0, "to": 2.0, "step": 0.25
})";

}  // namespace

TEST_CASE("cli runs a verdict config and writes json") {
  const CliResult res = run_cli("--format json", R"({
    "task": "verdict",
    "source": {"scale": "B", "d": 1, "s": 1.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "target": {"scale": "classical_besov", "d": 1, "s": 0.25,
               "p": "inf", "q": "inf"}
  })");
  CHECK(res.exit_code == 0);
  const ordered_json rep = ordered_json::parse(res.out);
  CHECK(rep["verdict"]["compact"] == "yes");
}

TEST_CASE("cli reports config errors on stderr with exit 2") {
  const CliResult res = run_cli("", R"({"task": "verdict"})");
  CHECK(res.exit_code == 2);
  CHECK(res.out.empty());
  CHECK_FALSE(res.err.empty());

  const CliResult missing = run_cli("--config does_not_exist.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("cli csv sweeps are deterministic across workers") {
  const CliResult a = run_cli("--format csv --jobs 1", kSweepConfig);
  const CliResult b = run_cli("--format csv --jobs 4", kSweepConfig);
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("value,continuous,compact,rules", 0) == 0);

  // --out writes the same bytes to a file and nothing to stdout.
  const CliResult f =
      run_cli("--format csv --jobs 2 --out sweep_report.csv", kSweepConfig);
  CHECK(f.exit_code == 0);
  CHECK(f.out.empty());
  CHECK(slurp("sweep_report.csv") == a.out);
  std::remove("sweep_report.csv");
}

#endif  // _WIN32
