#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcorr/errors.hpp"
#include "qcorr_cli/runner.hpp"
#include "qcorr_cli/selftest.hpp"

namespace {

using namespace qcorr::cli;

int cmd_run(const std::string& config, const std::string& out_override, int jobs) {
  Scenario s;
  try {
    s = load_scenario(config);
  } catch (const qcorr::InvalidInput& e) {
    std::cerr << "qcorr: invalid config: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  const std::string out_path = out_override.empty() ? s.output : out_override;

  RunResult result;
  if (out_path.empty()) {
    result = run_scenario(s, std::cout, jobs);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "qcorr: cannot write '" << out_path << "'\n";
      return kExitInvalidConfig;
    }
    result = run_scenario(s, out, jobs);
  }
  if (result.error) {
    std::cerr << "qcorr: " << *result.error << '\n';
    return kExitInternal;
  }
  if (!s.ledger.empty()) {
    std::ofstream ledger(s.ledger, std::ios::binary);
    ledger << conformance_document(conformance_rows(s));
  }
  std::cerr << "qcorr: " << result.rows << " rows\n";
  return kExitOk;
}

int cmd_conformance(const std::vector<std::string>& configs, const std::string& out_path) {
  std::vector<qcorr::ConformanceRow> rows;
  for (const std::string& config : configs) {
    Scenario s;
    try {
      s = load_scenario(config);
    } catch (const qcorr::InvalidInput& e) {
      std::cerr << "qcorr: invalid config " << config << ": " << e.what() << '\n';
      return kExitInvalidConfig;
    }
    const auto more = conformance_rows(s);
    rows.insert(rows.end(), more.begin(), more.end());
  }
  const std::string doc = conformance_document(rows);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "qcorr: cannot write '" << out_path << "'\n";
      return kExitInvalidConfig;
    }
    out << doc;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum correlations and teleportation for two-qubit open-system models"};
  app.require_subcommand(1);

  std::string run_config, run_out;
  int jobs = 1;
  auto* run = app.add_subcommand("run", "Sweep a scenario grid and write CSV");
  run->add_option("--config", run_config, "Scenario file")->required();
  run->add_option("--out", run_out, "CSV output path (overrides the config)");
  run->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string fault;
  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites at reduced resolution");
  selftest->add_option("--inject-fault", fault, "Intentional defect (lambda-branch)");

  std::vector<std::string> conf_configs;
  std::string conf_out;
  auto* conformance = app.add_subcommand("conformance", "Write the closed-form conformance ledger");
  conformance->add_option("--config", conf_configs, "Scenario file (repeatable)")->required();
  conformance->add_option("--out", conf_out, "Markdown output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  try {
    if (run->parsed()) return cmd_run(run_config, run_out, jobs);
    if (conformance->parsed()) return cmd_conformance(conf_configs, conf_out);
    if (selftest->parsed()) return run_selftest(std::cout, fault) ? kExitOk : kExitSelftestFailed;
  } catch (const qcorr::InvalidInput& e) {
    std::cerr << "qcorr: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "qcorr: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
