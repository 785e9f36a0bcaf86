#pragma once

// Runs the zkkr binary through the shell and captures its streams.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace zkkr::testing {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path scratch_dir() {
  const std::filesystem::path dir = std::filesystem::path(ZKKR_TEST_SCRATCH);
  std::filesystem::create_directories(dir);
  return dir;
}

/// `env_prefix` goes before the binary (e.g. "env -u VAR").
inline CliResult run_cli(const std::string& args, const std::string& env_prefix = "env -u ZETA_KKR_ZEROS") {
  const auto dir = scratch_dir();
  const auto out = dir / "stdout.txt";
  const auto err = dir / "stderr.txt";
  const std::string cmd = env_prefix + " '" + std::string(ZKKR_CLI_PATH) + "' " + args + " >'" +
                          out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

/// Non-comment CSV lines split into fields; the header is row 0.
inline std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : split(text, '\n')) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(split(line, ','));
  }
  return rows;
}

/// Value of a `key=value` line on stderr, empty if absent.
inline std::string summary_value(const std::string& err, const std::string& key) {
  for (const auto& line : split(err, '\n')) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

}  // namespace zkkr::testing
