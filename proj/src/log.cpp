#include "log.hpp"

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <string_view>

namespace retractlab::log {

namespace {

Level parse_level() {
  const char* env = std::getenv("RETRACTLAB_LOG");
  if (env == nullptr) return Level::Off;
  const std::string_view v(env);
  if (v == "info" || v == "1") return Level::Info;
  if (v == "debug" || v == "2") return Level::Debug;
  if (v == "trace" || v == "3") return Level::Trace;
  return Level::Off;
}

const char* tag(Level l) {
  switch (l) {
    case Level::Info: return "info";
    case Level::Debug: return "debug";
    case Level::Trace: return "trace";
    default: return "";
  }
}

}  // namespace

Level threshold() {
  static const Level level = parse_level();
  return level;
}

bool enabled(Level l) { return l != Level::Off && static_cast<int>(l) <= static_cast<int>(threshold()); }

void write(Level l, const char* fmt, ...) {
  char buf[1024];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  std::fprintf(stderr, "[retractlab %s] %s\n", tag(l), buf);
}

}  // namespace retractlab::log
