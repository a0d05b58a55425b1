#pragma once

// Error taxonomy: domain errors are std::domain_error (singular points,
// incompatible fields, invalid inputs); resource errors signal that a
// requested size exceeds the configured enumeration bounds.

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace trisix {

class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Bound from an environment variable, with a default.
inline int env_bound(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::atoi(v);
}

inline int max_asm_order() { return env_bound("TRISIX_MAX_ASM_N", 7); }
inline int max_triangle_order() { return env_bound("TRISIX_MAX_TRIANGLE_N", 6); }
inline int max_dp_order() { return env_bound("TRISIX_MAX_DP_N", 16); }
inline int max_symbolic_order() { return env_bound("TRISIX_MAX_SYMBOLIC_N", 3); }

}  // namespace trisix
