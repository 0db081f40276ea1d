#ifndef KLAB_ERRORS_HPP
#define KLAB_ERRORS_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace klab {

/// Malformed or invalid input (bad network description, bad arguments).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured search or size cap would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency violation (a bug, not bad input).
class LogicError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Value of KLAB_MAX_SUBSETS, if set.  When present it overrides every
/// exponential-search cap, interpreted as a ground-set / edge-count bound.
inline std::optional<std::uint64_t> env_cap_override() {
    const char* raw = std::getenv("KLAB_MAX_SUBSETS");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') return std::nullopt;
    return static_cast<std::uint64_t>(v);
}

inline std::uint64_t effective_cap(std::uint64_t fallback) {
    return env_cap_override().value_or(fallback);
}

inline void require_cap(std::uint64_t value, std::uint64_t cap, const std::string& what) {
    if (value > cap) {
        throw CapExceeded(what + ": " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
    }
}

} // namespace klab

#endif // KLAB_ERRORS_HPP
