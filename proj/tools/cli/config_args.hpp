#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace zkkr::cli {

/// Expands `--config FILE` (or `--config=FILE`): the file's `key = value`
/// lines become `--key=value` tokens placed directly after the subcommand
/// name, ahead of the user's own flags, so later flags win. A `[name]`
/// section applies only to that subcommand; a top-level key is skipped when
/// only other subcommands know it. The `--config` token itself is left in
/// place. Throws IoError / FormatError for unreadable files.
///
/// `options` maps each subcommand name (and alias) to its long option
/// names; the empty key holds the global options.
using OptionIndex = std::map<std::string, std::set<std::string>>;
std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                       const OptionIndex& options);

}  // namespace zkkr::cli
