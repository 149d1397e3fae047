#pragma once

namespace fourfold {

inline constexpr const char* kToolName = "fourfold";
inline constexpr const char* kToolVersion = "fourfold 0.1.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace fourfold
