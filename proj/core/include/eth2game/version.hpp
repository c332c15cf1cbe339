#pragma once

#include <string_view>

namespace eth2game {

inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace eth2game
