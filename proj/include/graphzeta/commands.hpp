#pragma once

#include "graphzeta/spec_io.hpp"

#include <cstdint>
#include <string>

namespace graphzeta {

enum class Command { Hashimoto, Ihara, Verify, Series, Nm, Lyndon, Classical };

enum class OutputFormat { Human, Coeffs, Json };

/// One invocation of the tool, already argument-parsed.
struct CommandConfig {
  Command command = Command::Verify;
  int truncation = 10;                      ///< -T
  std::uint64_t max_paths = 10'000'000;     ///< enumeration budget
  OutputFormat format = OutputFormat::Human;
  bool reduced = false;
  int alphabet = 2;                         ///< lyndon only
};

/// Exit codes shared by the CLI and the library-level runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitRejected = 4;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output; ///< full stdout payload, newline-terminated
};

/// Executes a command against a parsed instance.  All failure modes are
/// reported through the exit code and a diagnostic line: parse/usage problems
/// map to 1, identity mismatches to 2, enumeration budget refusals to 3, and
/// mathematically rejected scheme/mode combinations to 4.
CommandResult run_command(const CommandConfig& config, const ParsedInput& input);

/// The lyndon command needs no input document.
CommandResult run_lyndon(const CommandConfig& config);

} // namespace graphzeta
