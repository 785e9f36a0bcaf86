#pragma once

#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "output.hpp"

namespace zkkr::cli {

struct GlobalOptions {
  std::string format = "csv";
  std::string output;
  std::string config;
};

/// A registered subcommand; `run` executes it after a successful parse and
/// returns the exit code. Library exceptions propagate to the caller.
struct Command {
  CLI::App* app;
  std::function<int()> run;
};

std::vector<Command> register_commands(CLI::App& app, const GlobalOptions& globals);

}  // namespace zkkr::cli
