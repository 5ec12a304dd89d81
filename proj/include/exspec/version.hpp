#pragma once

namespace exspec {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace exspec
