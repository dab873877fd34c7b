#include "qfrob/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qfrob {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "?";
}

Verdict verdict_of(const CheckOutcome& outcome) {
  switch (outcome.verdict) {
    case ZeroVerdict::zero:
      return Verdict::pass;
    case ZeroVerdict::nonzero:
      return Verdict::fail;
    case ZeroVerdict::indeterminate:
      return Verdict::indeterminate;
  }
  return Verdict::indeterminate;
}

int Report::exit_code() const {
  bool undecided = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return 1;
    if (c.verdict == Verdict::indeterminate) undecided = true;
  }
  return undecided ? 3 : 0;
}

ReportEntry entry_from(const CheckOutcome& outcome, const VariableNames& names, double seconds) {
  ReportEntry e;
  e.check = outcome.name;
  e.verdict = verdict_of(outcome);
  for (std::size_t i : outcome.witness) e.witness.push_back(i + 1);
  if (outcome.residual) e.detail = outcome.residual->to_string(names, kWitnessTerms);
  e.seconds = seconds;
  return e;
}

namespace {

std::string witness_string(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

std::string millis(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds * 1e3);
  return buf;
}

}  // namespace

std::string render_text(const Report& report, bool timing) {
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  os << "input: " << report.input << "\n";
  os << "mode: " << to_string(report.config.mode);
  if (report.config.mode == TestMode::probabilistic)
    os << " (seed " << report.config.seed << ", trials " << report.config.trials << ")";
  os << "\n";
  for (const auto& c : report.checks) {
    os << "  " << c.check << ": " << to_string(c.verdict);
    if (!c.witness.empty()) os << " at " << witness_string(c.witness);
    if (timing) os << " [" << millis(c.seconds) << " ms]";
    os << "\n";
    if (!c.detail.empty()) os << "    " << c.detail << "\n";
  }
  for (const auto& [key, value] : report.results) os << "  " << key << " = " << value << "\n";
  os << "status: " << report.exit_code() << "\n";
  return os.str();
}

std::string render_json(const Report& report, bool timing) {
  using json = nlohmann::ordered_json;
  json out;
  out["command"] = report.command;
  out["input"] = report.input;
  out["config"] = {{"mode", std::string(to_string(report.config.mode))},
                   {"seed", report.config.seed},
                   {"trials", report.config.trials},
                   {"sample_range", report.config.sample_range}};
  json checks = json::array();
  for (const auto& c : report.checks) {
    json j;
    j["check"] = c.check;
    j["verdict"] = std::string(to_string(c.verdict));
    j["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
    j["detail"] = c.detail.empty() ? json(nullptr) : json(c.detail);
    if (timing) j["elapsed_ms"] = std::stod(millis(c.seconds));
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  json results = json::object();
  for (const auto& [key, value] : report.results) results[key] = value;
  out["results"] = std::move(results);
  out["exit_code"] = report.exit_code();
  return out.dump(2) + "\n";
}

}  // namespace qfrob
