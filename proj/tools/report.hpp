#pragma once

/**
 * @file report.hpp
 * @brief Decision pipeline plus cross-checks, rendered as JSON or text.
 */

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qcert/forms.hpp"
#include "qcert/positivity.hpp"

namespace qcert::cli {

namespace exit_code {
inline constexpr int definite = 0;
inline constexpr int semidefinite = 1;
inline constexpr int indefinite = 2;
inline constexpr int parse_error = 64;
inline constexpr int disagreement = 70;
} // namespace exit_code

struct ReportOptions {
    bool crosscheck = true;
    bool include_case = true;
    int precision = 12;
    int oracle_samples = 4096;
};

struct Report {
    nlohmann::json json;
    Definiteness verdict = Definiteness::indefinite;
    bool agreement = true;
    int exit_code = exit_code::indefinite;
};

/// Exit status for a verdict class (disagreements are handled separately).
int exit_code_for(Definiteness cls);

/// Runs the full pipeline on one form. Internal inconsistencies never throw:
/// they set agreement = false, exit code 70 and a "diagnostic" entry.
Report build_report(const PlainQuartic& form, const ReportOptions& options = {});

/// Human-readable summary of a report.
void write_text(std::ostream& out, const Report& report);

/// {"p": ..., "q": ..., "d": ..., "decimal": ...} for an exact value.
nlohmann::json quadext_json(const QuadExt& value, int precision);

/// Parses the {"p", "q", "d"} fields back into an exact value.
QuadExt quadext_from_json(const nlohmann::json& j);

} // namespace qcert::cli
