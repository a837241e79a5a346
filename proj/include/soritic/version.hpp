#pragma once

#include <string_view>

namespace soritic {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace soritic
