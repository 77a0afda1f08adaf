#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nctoric/json_io.hpp"

namespace nctoric {

enum class ExitCode { Ok = 0, UsageError = 2, InputError = 3, DomainError = 4 };

struct CommandResult {
  bool ok = false;
  Json payload;                          // empty unless ok
  std::vector<std::string> diagnostics;  // e.g. gl2_only_certificate
  ExitCode exit = ExitCode::Ok;
  std::string error_name;                // UsageError, InputError or the module error name
  std::string message;
  std::optional<std::string> text;       // SVG or help text replacing the JSON payload on stdout
  std::vector<std::pair<std::string, std::string>> files;  // (path, contents) requested via --out svg:PATH
};

/// Parses and executes one command line (program name excluded). Never throws.
CommandResult run(const std::vector<std::string>& args);

/// Canonical stdout text of a successful result: sorted keys, two-space
/// indentation, trailing newline.
std::string render_stdout(const CommandResult& r);
/// One-line JSON error object for stderr.
std::string render_stderr(const CommandResult& r);

}  // namespace nctoric
