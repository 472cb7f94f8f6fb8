#pragma once

// Trace output on stderr, controlled by RETRACTLAB_LOG
// (off, info, debug, trace; default off).

namespace retractlab::log {

enum class Level { Off = 0, Info = 1, Debug = 2, Trace = 3 };

Level threshold();
bool enabled(Level l);
[[gnu::format(printf, 2, 3)]] void write(Level l, const char* fmt, ...);

}  // namespace retractlab::log

#define RLOG(level, ...)                                                        \
  do {                                                                          \
    if (::retractlab::log::enabled(::retractlab::log::Level::level))            \
      ::retractlab::log::write(::retractlab::log::Level::level, __VA_ARGS__);   \
  } while (0)
