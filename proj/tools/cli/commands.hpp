#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "machine_file.hpp"

namespace cotrace::cli {

struct CommandOptions {
  std::string command;  // semantics, compare, laws, strategies, counterexample, determinise
  std::optional<std::string> file;
  std::optional<std::size_t> depth;
  std::optional<std::string> state;
  std::optional<std::string> engine;  // em, kleisli, logic, cia
  std::optional<std::uint64_t> seed;
  bool dot = false;
};

struct CommandResult {
  Json report;
  /// Raw text output (DOT) replacing the report when set.
  std::optional<std::string> text;
};

/// Runs one command. Reports carry a "timing_ms" field; everything else is
/// determined by the options and the machine file.
CommandResult run_command(const CommandOptions& opt);

/// The two-state strange example: c(x) = {*}, c(y) = {*, (•, y)}.
GenerativeCoalgebra strange_example();

}  // namespace cotrace::cli
