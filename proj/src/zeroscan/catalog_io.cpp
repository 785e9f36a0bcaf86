#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "zkkr/error.hpp"
#include "zkkr/zeroscan.hpp"

namespace zkkr {

namespace {

constexpr std::string_view kRangeKey = "max_height_scanned";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// `# max_height_scanned = X` or `# max_height_scanned=X`
std::optional<double> range_comment(std::string_view body, std::size_t line_no) {
  body = trim(body);
  if (!body.starts_with(kRangeKey)) return std::nullopt;
  body = trim(body.substr(kRangeKey.size()));
  if (!body.starts_with('=')) return std::nullopt;
  const auto v = to_double(body.substr(1));
  if (!v) throw FormatError("malformed max_height_scanned value", line_no);
  return v;
}

}  // namespace

ZeroCatalog parse_catalog(std::istream& in) {
  std::vector<double> heights;
  std::optional<double> max_height;
  std::string raw;
  std::size_t line_no = 0;
  bool header_allowed = true;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto v = range_comment(line.substr(1), line_no)) max_height = v;
      continue;
    }
    const auto comma = line.rfind(',');
    const std::string_view field = comma == std::string_view::npos ? line : line.substr(comma + 1);
    const auto value = to_double(field);
    if (!value) {
      if (header_allowed && comma != std::string_view::npos) {
        header_allowed = false;
        continue;
      }
      throw FormatError(fmt::format("cannot parse zero height '{}'", line), line_no);
    }
    header_allowed = false;
    if (!(*value > kFirstZeroLowerBound)) {
      throw FormatError(fmt::format("zero height {} is not above 13", *value), line_no);
    }
    if (!heights.empty() && !(*value > heights.back())) {
      throw FormatError(fmt::format("heights not strictly increasing ({} after {})", *value,
                                    heights.back()),
                        line_no);
    }
    heights.push_back(*value);
  }
  if (in.bad()) throw IoError("read error while parsing zero catalog");

  const double last = heights.empty() ? 0.0 : heights.back();
  const double range = max_height.value_or(last);
  if (range < last) {
    throw FormatError("max_height_scanned lies below the last height", line_no);
  }
  return ZeroCatalog(std::move(heights), CatalogSource::loaded, range);
}

ZeroCatalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero catalog '" + path.string() + "'");
  return parse_catalog(in);
}

void save_catalog(const ZeroCatalog& catalog, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write zero catalog '" + path.string() + "'");
  out << fmt::format("# zero heights on the critical line, one per line\n# {} = {:.17g}\n",
                     kRangeKey, catalog.max_height_scanned());
  for (const double h : catalog.heights()) out << fmt::format("{:.17g}\n", h);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void export_csv(const ZeroCatalog& catalog, std::ostream& out) {
  out << fmt::format("# {}={:.9f}\nn,t\n", kRangeKey, catalog.max_height_scanned());
  const auto h = catalog.heights();
  for (std::size_t i = 0; i < h.size(); ++i) out << fmt::format("{},{:.9f}\n", i + 1, h[i]);
}

}  // namespace zkkr
