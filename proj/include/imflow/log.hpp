#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

// Logging to stderr, gated by the IMFLOW_LOG environment variable:
// quiet | warn (default) | info | debug.

namespace imflow::log {

enum class Level { quiet = 0, warn = 1, info = 2, debug = 3 };

inline Level level() {
    static Level lvl = [] {
        const char* env = std::getenv("IMFLOW_LOG");
        if (!env) return Level::warn;
        if (std::strcmp(env, "quiet") == 0) return Level::quiet;
        if (std::strcmp(env, "info") == 0) return Level::info;
        if (std::strcmp(env, "debug") == 0) return Level::debug;
        return Level::warn;
    }();
    return lvl;
}

template <typename... Args>
void warn(const char* fmt, Args... args) {
    if (level() >= Level::warn) {
        std::fprintf(stderr, "[imflow warn] ");
        std::fprintf(stderr, fmt, args...);
        std::fprintf(stderr, "\n");
    }
}

template <typename... Args>
void info(const char* fmt, Args... args) {
    if (level() >= Level::info) {
        std::fprintf(stderr, "[imflow info] ");
        std::fprintf(stderr, fmt, args...);
        std::fprintf(stderr, "\n");
    }
}

template <typename... Args>
void debug(const char* fmt, Args... args) {
    if (level() >= Level::debug) {
        std::fprintf(stderr, "[imflow debug] ");
        std::fprintf(stderr, fmt, args...);
        std::fprintf(stderr, "\n");
    }
}

}  // namespace imflow::log
