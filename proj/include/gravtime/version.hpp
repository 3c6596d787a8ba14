#pragma once

namespace gravtime {

inline constexpr const char* version = "0.1.0";

}  // namespace gravtime
