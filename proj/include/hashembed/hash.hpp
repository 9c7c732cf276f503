#ifndef HASHEMBED_HASH_HPP
#define HASHEMBED_HASH_HPP

#include <cstdint>
#include <string_view>

namespace hashembed {

// Jenkins one-at-a-time hash over a byte sequence, as a signed 32-bit value.
// All arithmetic wraps in 32 bits; `>>` is an arithmetic (sign-propagating)
// shift on the signed value. Bytes are widened as unsigned 8-bit values.
// Pure function: equal bytes give equal codes on every platform.
std::int32_t jenkins_hash(std::string_view key) noexcept;

// Bucket index of a context element: abs(jenkins_hash(context) % m), the
// remainder taking the dividend's sign, abs evaluated in 64-bit width so the
// 32-bit minimum maps to its true magnitude. Result is in [0, m).
// Throws std::invalid_argument if m < 1.
std::uint32_t dimension_index(std::string_view context, std::int64_t m);

}  // namespace hashembed

#endif  // HASHEMBED_HASH_HPP
