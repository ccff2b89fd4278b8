#pragma once

namespace lps {
inline constexpr const char* kVersion = "0.1.0";
}
