#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace zkkr::cli {

using Cell = std::variant<long long, double, std::string>;

/// One command's data section. CSV and JSON are rendered from the same
/// cells, so both formats always carry identical values.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> comments;  // CSV only, written as '# ' lines
};

enum class Format { csv, json };

/// Reals with 9 decimals, integers and text verbatim.
std::string format_csv(const Table& table);

/// {"meta": {"command", "params", "version"}, "data": [{column: value}]}
/// with reals at full precision.
nlohmann::ordered_json format_json(const Table& table, std::string_view command,
                           const nlohmann::ordered_json& params);

/// Renders and writes to `path`, or stdout when empty. Throws IoError.
void emit(const Table& table, Format format, const std::string& path, std::string_view command,
          const nlohmann::ordered_json& params);

/// `key=value` line on stderr.
void summary(std::string_view key, std::string_view value);
void summary(std::string_view key, double value);
void summary(std::string_view key, long long value);

}  // namespace zkkr::cli
