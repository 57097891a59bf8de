#pragma once

// Subcommands of the `linf` tool as plain functions over string tokens, so
// they can be driven from tests exactly as from the command line.
//
// Every command yields a JSON document
//   {"status": "ok", "command": ..., "payload": {...}, "notes": [...]}
// or
//   {"status": "error", "command": ..., "error": "..."}
// and an exit code: 0 success, 2 input error, 3 I/O error.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linf::cli {

using Json = nlohmann::json;
using Tokens = std::vector<std::string>;

enum ExitCode : int { kOk = 0, kInputError = 2, kIoError = 3 };

struct CommandResult {
  int exit_code = kOk;
  Json document;
  /// Human-readable message for stderr; empty on success.
  std::string message;
};

/// a b c d. With samples > 0 a flat plane's chart is also checked on that
/// many seeded point pairs.
CommandResult cmd_classify(const Tokens& coeffs, int samples = 0, std::uint64_t seed = 42);

/// a b c (d = 0) and a radius; writes an SVG drawing when svg_path is set.
CommandResult cmd_section(const Tokens& coeffs, const std::string& radius,
                          const std::optional<std::string>& svg_path = std::nullopt);

/// a b c (d = 0).
CommandResult cmd_orbit(const Tokens& coeffs);

/// a b c d a' b' c' d'.
CommandResult cmd_isometric(const Tokens& coeffs);

/// Reads a Polyline JSON file.
CommandResult cmd_geodesic_check(const std::string& path_file);

/// Geodesic count between p and q, in the ambient space or, when `plane`
/// holds a b c d, inside that plane. `probe` adds the brute-force verdict.
CommandResult cmd_tau(const Tokens& p, const Tokens& q, const std::optional<Tokens>& plane,
                      bool probe = false);

/// Either `ambient` (a dimension) or `plane` (a b c d) must be set.
CommandResult cmd_nu(const std::optional<std::string>& ambient, const std::optional<Tokens>& plane);

CommandResult cmd_witness(const Tokens& p, const Tokens& q);

}  // namespace linf::cli
