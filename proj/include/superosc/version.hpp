#pragma once

namespace superosc {

inline constexpr const char* kToolName = "superosc";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace superosc
