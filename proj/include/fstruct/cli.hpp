#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fstruct/audit.hpp"
#include "fstruct/manifest.hpp"

namespace fstruct {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,        // bad arguments, unreadable file, schema violation
  kExitStructure = 2,    // the structure equation fails
  kExitInconsistent = 3  // criteria that must agree did not
};

/// "F^4 - 2*F^3 + F = 0" for (1, -2, 3).
std::string equation_string(const Rational& alpha, const Rational& beta, int K);

/// Integrability report with stable key order:
///   structure_ok, equation, rank, rank_warning, dims, flags, classification,
///   consistency_ok, issues, evidence, l, m, distributions, nijenhuis,
///   identities, cr (null without Fhat)
nlohmann::ordered_json report_json(const LoadedStructure& s, const Audit& a);
nlohmann::ordered_json report_json(const LoadedStructure& s);

/// Plain-text rendering of a report produced by report_json.
std::string report_text(const nlohmann::ordered_json& report);

/// Runs one command; `args` excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fstruct
