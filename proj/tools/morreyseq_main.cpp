#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "morrey/acceptance.hpp"
#include "morrey/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "morreyseq: embedding decisions, sequence norms, sweeps and witness "
      "probes for generalized smoothness scales on the dyadic cube"};

  std::string config_path, out_path, format = "json";
  int jobs = 1;
  bool selftest = false;

  app.add_option("--config", config_path, "JSON config document to run");
  app.add_option("--out", out_path,
                 "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format (csv only for sweeps)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", jobs, "Worker threads for sweep rows")
      ->check(CLI::PositiveNumber);
  app.add_flag("--selftest", selftest,
               "Run the built-in acceptance suite and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // bad flags are config errors
  }

  if (selftest) return morrey::run_acceptance(std::cout) ? 0 : 1;

  if (config_path.empty()) {
    std::cerr << "morreyseq: need --config <path> or --selftest\n";
    return 2;
  }

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "morreyseq: cannot read config file: " << config_path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  const morrey::RunResult res =
      morrey::run_config_text(buf.str(), format, jobs);
  if (res.exit_code != 0) {
    std::cerr << "morreyseq: " << res.error << "\n";
    return res.exit_code;
  }

  if (out_path.empty()) {
    std::cout << res.report;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "morreyseq: cannot write output file: " << out_path << "\n";
      return 2;
    }
    out << res.report;
    if (!out.good()) {
      std::cerr << "morreyseq: failed while writing: " << out_path << "\n";
      return 1;
    }
  }
  return 0;
}
