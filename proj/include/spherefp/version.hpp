#pragma once

namespace spherefp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spherefp
