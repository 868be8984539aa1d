#pragma once

#include <string>

#include "hbcomp/json_io.hpp"

namespace hbcomp {

// Subcommand bodies shared by the CLI and the Python module. Each throws hbcomp::Error
// (SchemaError when a needed field is missing).
Json mate_command(const ProblemSpec& spec);
Json membership_command(const ProblemSpec& spec);
Json u_command(const ProblemSpec& spec);
Json analyze_command(const ProblemSpec& spec, bool force_scan = false);
std::string scan_csv(const ProblemSpec& spec);
Json matrix_command(const ProblemSpec& spec, Basis basis = Basis::HbSplit);

}  // namespace hbcomp
