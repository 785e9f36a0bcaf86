#include "config_args.hpp"

#include <algorithm>
#include <fstream>

#include <CLI11.hpp>

#include "zkkr/error.hpp"

namespace zkkr::cli {

namespace {

std::string config_path(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  return path;
}

}  // namespace

std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                       const OptionIndex& options) {
  const std::string path = config_path(args);
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");

  const auto sub_it = std::find_if(args.begin() + 1, args.end(),
                                   [&](const std::string& a) { return !a.empty() && options.count(a) > 0; });
  if (sub_it == args.end()) return args;
  const std::string& sub = *sub_it;
  const auto known_here = [&](const std::string& key) {
    return options.at(sub).count(key) > 0 || options.at("").count(key) > 0;
  };
  const auto known_elsewhere = [&](const std::string& key) {
    return std::any_of(options.begin(), options.end(),
                       [&](const auto& entry) { return entry.second.count(key) > 0; });
  };

  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::ParseError& e) {
    throw FormatError(std::string("config file '") + path + "': " + e.what(), 0);
  }

  std::vector<std::string> injected;
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == sub)) {
      continue;
    }
    if (item.parents.empty() && !known_here(item.name) && known_elsewhere(item.name)) continue;
    std::string value;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) {
      if (i > 0) value += ',';
      value += item.inputs[i];
    }
    injected.push_back("--" + item.name + "=" + value);
  }

  std::vector<std::string> out(args.begin(), sub_it + 1);
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), sub_it + 1, args.end());
  return out;
}

}  // namespace zkkr::cli
