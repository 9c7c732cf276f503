#ifndef HASHEMBED_PROJECTION_HPP
#define HASHEMBED_PROJECTION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hashembed/store.hpp"

namespace hashembed {

// Verification-only surface: materializes the explicit count matrix and
// projection matrix whose product the streaming store must reproduce exactly.
// Dense arithmetic throughout, guarded to small instances.

using OwnedEvent = std::pair<std::string, std::string>;  // (target, context)

// Full co-occurrence counts: one row per target word, one column per
// distinct context byte-sequence.
class CooccurrenceMatrix {
 public:
  static CooccurrenceMatrix from_events(const std::vector<OwnedEvent>& events);

  std::size_t rows() const noexcept { return words_.size(); }
  std::size_t cols() const noexcept { return contexts_.size(); }
  const std::vector<std::string>& words() const noexcept { return words_; }
  const std::vector<std::string>& contexts() const noexcept { return contexts_; }
  std::uint64_t count(std::size_t row, std::size_t col) const { return counts_.at(row).at(col); }
  std::uint64_t row_sum(std::size_t row) const;
  std::uint64_t total() const;

 private:
  std::vector<std::string> words_;
  std::vector<std::string> contexts_;
  std::vector<std::vector<std::uint64_t>> counts_;
};

// n x m one-hot-row matrix: row i carries a single 1 at column row_index[i].
struct ProjectionMatrix {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::uint32_t> row_index;
};

// Rows placed by hashing each context element into [0, m).
ProjectionMatrix hash_projection(const std::vector<std::string>& contexts, std::int64_t m);

// Rows placed uniformly at random from a seeded deterministic generator.
ProjectionMatrix random_projection(std::size_t n, std::size_t m, std::uint64_t seed);

// Exact integer product C x T as a dense rows() x m matrix. Throws
// std::invalid_argument on a shape mismatch or when n*m exceeds the
// small-instance guard (10^7 cells of work).
std::vector<std::vector<std::uint64_t>> project(const CooccurrenceMatrix& counts,
                                                const ProjectionMatrix& projection);

struct VerifyReport {
  bool ok = true;
  std::size_t words_checked = 0;
  std::string detail;  // first mismatch, empty when ok
};

// Streaming-vs-matrix-product equivalence: builds a store by observing the
// events and compares it entry-by-entry against project(C, T) with the
// hash-derived T. Integer-exact.
VerifyReport verify_derandomization(const std::vector<OwnedEvent>& events, std::size_t m);

// Recomputes column sums and the event total from the stored vectors and
// checks them against the store's running copies (raw stores only).
VerifyReport verify_store_invariants(const EmbeddingStore& store);

}  // namespace hashembed

#endif  // HASHEMBED_PROJECTION_HPP
