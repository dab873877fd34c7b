// qfrob: batch verification of hydrodynamic-type brackets, their potential
// deformations and the associated algebras.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qfrob/commands.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Poisson brackets of hydrodynamic type, their deformations and algebras"};
  app.set_version_flag("--version", "qfrob 1.0 (definition format " + std::to_string(qfrob::kFormatVersion) + ")");

  std::string command;
  std::string input;
  std::string mode = "symbolic";
  std::string format = "text";
  qfrob::IdentityTestConfig cfg;
  bool no_timing = false;

  app.add_option("command", command, "Verification to run")
      ->required()
      ->check(CLI::IsMember(qfrob::command_names()));
  app.add_option("-i,--input", input, "Definition file")->required();
  app.add_option("--mode", mode, "Zero testing: exact or by seeded random evaluation")
      ->check(CLI::IsMember({"symbolic", "probabilistic"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for probabilistic mode")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Evaluation points per component")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--sample-range", cfg.sample_range, "Sample coordinates are p/q with 1 <= p, q <= M")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json", "json-like"}))
      ->capture_default_str();
  app.add_option("--parallel", cfg.threads, "Worker threads for zero testing")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_flag("--no-timing", no_timing, "Omit wall times so reports are byte-stable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  cfg.mode = mode == "symbolic" ? qfrob::TestMode::symbolic : qfrob::TestMode::probabilistic;

  qfrob::Report report;
  try {
    qfrob::Definition def = qfrob::load_definition(input);
    if (def.name.empty()) def.name = std::filesystem::path(input).filename().string();
    report = qfrob::run_command(command, def, cfg);
  } catch (const qfrob::Error& e) {
    std::cerr << "qfrob: error: " << e.what() << "\n";
    return kUsageError;
  }

  std::cout << (format == "text" ? qfrob::render_text(report, !no_timing) : qfrob::render_json(report, !no_timing));
  return report.exit_code();
}
