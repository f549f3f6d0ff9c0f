#include "threshold_lab/capacity.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

#include "threshold_lab/errors.hpp"

namespace tlab {

namespace {

std::uint64_t env_cap() {
    if (const char* s = std::getenv("THRESHOLD_LAB_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && v > 0) return static_cast<std::uint64_t>(v);
    }
    return kDefaultEnumerationCap;
}

std::atomic<std::uint64_t> g_cap_override{0};

}  // namespace

std::uint64_t enumeration_cap() {
    std::uint64_t o = g_cap_override.load(std::memory_order_relaxed);
    if (o != 0) return o;
    static const std::uint64_t from_env = env_cap();
    return from_env;
}

void set_enumeration_cap(std::uint64_t cap) {
    g_cap_override.store(cap, std::memory_order_relaxed);
}

std::uint64_t pow_sat(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

void require_within_cap(std::uint64_t state_count, std::string_view module) {
    const std::uint64_t cap = enumeration_cap();
    if (state_count > cap) {
        throw CapacityError(std::string(module) + ": " + std::to_string(state_count) +
                            " states exceed the enumeration cap " + std::to_string(cap) +
                            " (raise THRESHOLD_LAB_CAP or switch to Monte Carlo mode)");
    }
}

}  // namespace tlab
