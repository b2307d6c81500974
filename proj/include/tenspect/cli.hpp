#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tenspect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNoConvergence = 3;

/// Runs one subcommand. `args` excludes the program name. The report goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a JSON report (the `--format text` output).
std::string render_text(const std::string& json_report);

}  // namespace tenspect::cli
