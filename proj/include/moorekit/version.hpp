#pragma once

namespace moorekit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace moorekit
