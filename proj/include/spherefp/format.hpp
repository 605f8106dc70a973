#pragma once

#include <cstdio>
#include <string>

namespace spherefp {

/// 17 significant digits: round-trip safe for binary64.
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace spherefp
