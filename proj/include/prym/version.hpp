#pragma once

namespace prym {

inline constexpr const char* kToolName = "prym-forge";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace prym
