#ifndef HASHEMBED_SIMILARITY_HPP
#define HASHEMBED_SIMILARITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "hashembed/store.hpp"

namespace hashembed {

// Tallies over all index pairs i<j of two equal-length vectors, classified by
// the sign of (x_i-x_j)(y_i-y_j). concordant+discordant+ties = m(m-1)/2.
struct PairCounts {
  std::uint64_t concordant = 0;
  std::uint64_t discordant = 0;
  std::uint64_t ties = 0;
};

// O(m^2) pair enumeration. Throws std::invalid_argument when the vectors
// differ in length or have fewer than two components.
PairCounts pair_counts(std::span<const double> x, std::span<const double> y);

// Measures return nullopt where the value is undefined for the given data
// (all pairs tied, zero variance, zero vector). Results are in [-1, 1].
std::optional<double> gamma(std::span<const double> x, std::span<const double> y);
std::optional<double> kendall_tau_b(std::span<const double> x, std::span<const double> y);
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);
std::optional<double> cosine(std::span<const double> x, std::span<const double> y);

// Fractional ranks with ties averaged, as used by spearman.
std::vector<double> fractional_ranks(std::span<const double> values);

enum class Measure { gamma, tau_b, pearson, spearman, cosine };

std::optional<Measure> measure_from_name(std::string_view name);
std::string_view measure_name(Measure measure) noexcept;

// Raw counts compare by rank association, weighted vectors by correlation.
Measure default_measure(StoreMode mode) noexcept;

std::optional<double> similarity(std::span<const double> x,
                                 std::span<const double> y, Measure measure);

// Dense-view similarity between two stored words. Throws std::out_of_range
// when either word is absent from the store.
std::optional<double> similarity(const EmbeddingStore& store, std::string_view w1,
                                 std::string_view w2, Measure measure);

}  // namespace hashembed

#endif  // HASHEMBED_SIMILARITY_HPP
