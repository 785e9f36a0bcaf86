#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config_args.hpp"
#include "version.hpp"
#include "zkkr/error.hpp"

namespace {

// Exit codes: 0 success, 1 usage or precondition, 2 numerical failure, 3 I/O.
constexpr int kUsage = 1;
constexpr int kNumerical = 2;
constexpr int kIo = 3;

int fail(int code, const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace zkkr;
  using namespace zkkr::cli;

  CLI::App app{"Riemann-zero counting, scattering phases and KKR determinants", "zkkr"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  GlobalOptions globals;
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", globals.output, "Output file (default stdout)");
  app.add_option("--config", globals.config,
                 "File of key = value defaults; [command] sections apply to one command");

  const std::vector<Command> commands = register_commands(app, globals);
  const auto long_names = [](const CLI::App& a) {
    std::set<std::string> out;
    for (const CLI::Option* opt : a.get_options()) {
      for (const auto& n : opt->get_lnames()) out.insert(n);
    }
    return out;
  };
  OptionIndex index{{"", long_names(app)}};
  for (const auto& c : commands) {
    index[c.app->get_name()] = long_names(*c.app);
    for (const auto& alias : c.app->get_aliases()) index[alias] = long_names(*c.app);
  }

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = expand_config(args, index);
  } catch (const FormatError& e) {
    return fail(kIo, e.what());
  } catch (const IoError& e) {
    return fail(kIo, e.what());
  }

  // CLI11 parses a reversed vector of the arguments after the program name.
  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n";
    const CLI::App* target = &app;
    for (const auto& c : commands) {
      if (c.app->parsed()) target = c.app;
    }
    std::cerr << target->help();
    return kUsage;
  }

  try {
    for (const auto& c : commands) {
      if (c.app->parsed()) return c.run();
    }
    return fail(kUsage, "no command given");
  } catch (const DomainError& e) {
    return fail(kUsage, e.what());
  } catch (const RegimeError& e) {
    return fail(kUsage, e.what());
  } catch (const ConvergenceError& e) {
    return fail(kNumerical, e.what());
  } catch (const IllConditionedError& e) {
    return fail(kNumerical, e.what());
  } catch (const FormatError& e) {
    return fail(kIo, e.what());
  } catch (const IoError& e) {
    return fail(kIo, e.what());
  } catch (const OutOfRangeError& e) {
    return fail(kIo, e.what());
  } catch (const std::exception& e) {
    return fail(kNumerical, e.what());
  }
}
