#pragma once

namespace epistat {

inline constexpr const char* kToolName = "epistat";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace epistat
