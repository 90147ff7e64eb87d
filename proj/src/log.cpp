#include "farkas/log.hpp"

#include <cstdlib>
#include <cstring>

namespace farkas::log {

Level level() {
  static Level lvl = [] {
    const char* env = std::getenv("FARKAS_LOG");
    if (env == nullptr) return Level::Quiet;
    if (std::strcmp(env, "trace") == 0) return Level::Trace;
    if (std::strcmp(env, "info") == 0) return Level::Info;
    return Level::Quiet;
  }();
  return lvl;
}

}  // namespace farkas::log
