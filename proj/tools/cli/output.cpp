#include "output.hpp"

#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "version.hpp"
#include "zkkr/error.hpp"

namespace zkkr::cli {

namespace {

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return fmt::format("{:.9f}", v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return fmt::format("{}", v);
        } else {
          return v;
        }
      },
      c);
}

}  // namespace

std::string format_csv(const Table& table) {
  std::string out;
  for (const auto& c : table.comments) out += "# " + c + "\n";
  out += fmt::format("{}\n", fmt::join(table.columns, ","));
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json format_json(const Table& table, std::string_view command,
                           const nlohmann::ordered_json& params) {
  nlohmann::ordered_json data = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
    }
    data.push_back(std::move(obj));
  }
  return {{"meta", {{"command", command}, {"params", params}, {"version", kVersion}}},
          {"data", std::move(data)}};
}

void emit(const Table& table, Format format, const std::string& path, std::string_view command,
          const nlohmann::ordered_json& params) {
  const std::string text = format == Format::csv
                                ? format_csv(table)
                                : format_json(table, command, params).dump(2) + "\n";
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write output file '" + path + "'");
}

void summary(std::string_view key, std::string_view value) {
  std::cerr << key << '=' << value << '\n';
}

void summary(std::string_view key, double value) {
  summary(key, std::string_view(fmt::format("{:.9g}", value)));
}

void summary(std::string_view key, long long value) {
  summary(key, std::string_view(fmt::format("{}", value)));
}

}  // namespace zkkr::cli
