#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "suites.hpp"
#include "workspace.hpp"

namespace psl::app {

struct CommandOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  Caps caps;
};

struct Outcome {
  int exit_code = 0;
  json report;
  std::string text;
};

/// 0 pass, 1 mathematical failure, 2 usage, parse or reference error and
/// inputs outside the supported range.
int exit_code_for(ErrorKind kind);

Outcome cmd_check(const Workspace& ws, const std::string& name, const CommandOptions& opts);
Outcome cmd_smash(const Workspace& ws, const std::string& name, const CommandOptions& opts);
Outcome cmd_radicals(const Workspace& ws, const std::string& name, const CommandOptions& opts);
/// `id` may be "all".
Outcome cmd_verify(const Workspace& ws, bool use_workspace_actions, const std::string& id, const CommandOptions& opts);
Outcome cmd_enumerate_ideals(const Workspace& ws, const std::string& name, const CommandOptions& opts);

/// Full command-line entry point.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace psl::app
