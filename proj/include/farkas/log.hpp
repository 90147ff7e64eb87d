#ifndef FARKAS_LOG_HPP
#define FARKAS_LOG_HPP

#include <cstdio>

// Diagnostics go to stderr, gated by FARKAS_LOG in {quiet, info, trace}.
// Default is quiet.

namespace farkas::log {

enum class Level { Quiet = 0, Info = 1, Trace = 2 };

Level level();

template <typename... Args>
void info(const char* fmt, Args... args) {
  if (level() >= Level::Info) {
    std::fprintf(stderr, "[farkas] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
  }
}

template <typename... Args>
void trace(const char* fmt, Args... args) {
  if (level() >= Level::Trace) {
    std::fprintf(stderr, "[farkas:trace] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
  }
}

}  // namespace farkas::log

#endif
