#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace qcert::cli {

/// Entry point behind quartic-certify. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses five coefficient strings. On failure `error` names the offending
/// coefficient and the character offset and the result is empty.
std::optional<PlainQuartic> parse_coefficients(const std::vector<std::string>& tokens, std::string& error);

/// Processes one form per line (`#` starts a comment) and writes JSON lines
/// in input order followed by a summary object. Returns the exit status:
/// 70 if any line disagreed, else 64 if any line failed to parse, else 0.
int run_batch(std::istream& in, std::ostream& out, const ReportOptions& options, unsigned threads = 0);

} // namespace qcert::cli
