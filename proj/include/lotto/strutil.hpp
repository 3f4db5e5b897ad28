#pragma once

#include <cstdarg>
#include <cstdio>
#include <string>

namespace lotto {

/// printf-style std::string builder for report details and CLI output.
inline std::string strf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

inline std::string strf(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  va_list copy;
  va_copy(copy, args);
  int len = std::vsnprintf(nullptr, 0, fmt, copy);
  va_end(copy);
  std::string out(len > 0 ? static_cast<std::size_t>(len) : 0, '\0');
  if (len > 0) {
    std::vsnprintf(out.data(), out.size() + 1, fmt, args);
  }
  va_end(args);
  return out;
}

}  // namespace lotto
