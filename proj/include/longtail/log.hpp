#pragma once

#include <string>

namespace longtail::log {

enum class Level { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3, kOff = 4 };

void set_level(Level level);
Level level();

// Parses "debug"/"info"/"warn"/"error"/"off"; anything else keeps `fallback`.
Level parse_level(const std::string& name, Level fallback);

// Applies the LONGTAIL_LOG environment variable, which overrides any level
// set from flags.
void apply_env_override();

void write(Level level, const std::string& message);

inline void debug(const std::string& m) { write(Level::kDebug, m); }
inline void info(const std::string& m) { write(Level::kInfo, m); }
inline void warn(const std::string& m) { write(Level::kWarn, m); }
inline void error(const std::string& m) { write(Level::kError, m); }

}  // namespace longtail::log
