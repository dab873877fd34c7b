#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qfrob/definition.hpp"
#include "qfrob/report.hpp"

namespace qfrob {

// Command names accepted by run_command, in display order.
const std::vector<std::string>& command_names();

// Runs one verification command on a loaded definition. Throws SchemaError
// when the command does not accept the definition's kind, or for an unknown
// command.
Report run_command(std::string_view command, const Definition& def, const IdentityTestConfig& cfg);

}  // namespace qfrob
