#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace atn {

// Base for all library errors. CLI maps these to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad group table, modulus mismatch, non-cocycle where one is required.
struct ValidationError : Error {
    using Error::Error;
};

// A desk-scale size guard tripped. Message names the guard and both sizes.
struct GuardError : Error {
    using Error::Error;
};

// Two independent code paths disagreed. CLI maps this to exit code 3.
struct InternalCheckError : Error {
    using Error::Error;
};

// Size guards compare against a default limit unless ATN_GUARD_OVERRIDE raises it.
inline std::size_t guard_limit(std::size_t default_limit) {
    if (const char* env = std::getenv("ATN_GUARD_OVERRIDE")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_limit;
}

inline void check_guard(std::size_t needed, std::size_t default_limit, const std::string& what) {
    std::size_t limit = guard_limit(default_limit);
    if (needed > limit) {
        throw GuardError(what + ": needs " + std::to_string(needed) + " entries, guard allows " +
                         std::to_string(limit) + " (raise via ATN_GUARD_OVERRIDE)");
    }
}

}  // namespace atn
