#pragma once

namespace genocchi {

inline constexpr const char* kToolName = "genocchi";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace genocchi
