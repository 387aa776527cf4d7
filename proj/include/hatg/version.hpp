#pragma once

namespace hatg {

inline constexpr const char* kToolName = "hg";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace hatg
