#pragma once

#include <cstdint>
#include <string_view>

namespace tlab {

// Default exact-enumeration cap: 2^24 configurations.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

// Current cap.  THRESHOLD_LAB_CAP in the environment overrides the default;
// set_enumeration_cap overrides both (0 restores the env/default value).
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

// r^n, saturating at uint64 max instead of wrapping.
std::uint64_t pow_sat(std::uint64_t base, int exp);

// Throws CapacityError naming `module` when state_count > enumeration_cap().
void require_within_cap(std::uint64_t state_count, std::string_view module);

}  // namespace tlab
