#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qfrob/check.hpp"

namespace qfrob {

enum class Verdict { pass, fail, indeterminate };
std::string_view to_string(Verdict v);
Verdict verdict_of(const CheckOutcome& outcome);

struct ReportEntry {
  std::string check;
  Verdict verdict = Verdict::pass;
  // 1-based index tuple of the first failing component.
  std::vector<std::size_t> witness;
  // Residual at the witness, or a short explanation for non-tensor checks.
  std::string detail;
  double seconds = 0;
};

struct Report {
  std::string command;
  std::string input;
  IdentityTestConfig config;
  std::vector<ReportEntry> checks;
  // Derived values (recovered potentials, pencil coefficients, ...), in order.
  std::vector<std::pair<std::string, std::string>> results;

  // 1 if any check fails, else 3 if any is indeterminate, else 0.
  int exit_code() const;
};

// Witness residuals are printed with at most this many monomials.
inline constexpr std::size_t kWitnessTerms = 10;

ReportEntry entry_from(const CheckOutcome& outcome, const VariableNames& names, double seconds);

std::string render_text(const Report& report, bool timing);
std::string render_json(const Report& report, bool timing);

}  // namespace qfrob
