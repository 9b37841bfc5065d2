#pragma once

#include <string_view>

namespace terracini {

inline constexpr std::string_view kToolName = "terracini";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace terracini
