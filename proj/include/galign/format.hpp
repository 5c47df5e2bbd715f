#pragma once

#include <cstdio>
#include <string>

namespace galign {

// 17 significant digits: enough for a double to round-trip exactly.
inline void append_g17(std::string& s, double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  s.append(buf, static_cast<std::size_t>(n));
}

inline std::string g17(double v) {
  std::string s;
  append_g17(s, v);
  return s;
}

}  // namespace galign
