#pragma once

namespace zkkr::cli {
inline constexpr const char* kVersion = "0.1.0";
}
