#include "hashembed/hash.hpp"

#include <stdexcept>
#include <string>

namespace hashembed {

namespace {

// Arithmetic right shift of the two's-complement reinterpretation.
inline std::uint32_t asr(std::uint32_t v, int s) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::int32_t>(v) >> s);
}

}  // namespace

std::int32_t jenkins_hash(std::string_view key) noexcept {
  std::uint32_t h = 0;
  for (const char c : key) {
    h += static_cast<unsigned char>(c);
    h += h << 10;
    h ^= asr(h, 6);
  }
  h += h << 3;
  h ^= asr(h, 11);
  h += h << 15;
  return static_cast<std::int32_t>(h);
}

std::uint32_t dimension_index(std::string_view context, std::int64_t m) {
  if (m < 1) {
    throw std::invalid_argument("dimensionality must be >= 1, got " +
                                std::to_string(m));
  }
  const std::int64_t h = jenkins_hash(context);
  const std::int64_t r = h % m;
  return static_cast<std::uint32_t>(r < 0 ? -r : r);
}

}  // namespace hashembed
