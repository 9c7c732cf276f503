#ifndef HASHEMBED_STORE_HPP
#define HASHEMBED_STORE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hashembed/corpus.hpp"
#include "hashembed/errors.hpp"

namespace hashembed {

enum class StoreMode { raw, weighted };

std::string_view to_string(StoreMode mode) noexcept;

// One word's sparse m-dimensional vector. Raw vectors hold unsigned 64-bit
// counts (never an explicit zero); weighted vectors hold reals.
class Embedding {
 public:
  using CountMap = std::map<std::uint32_t, std::uint64_t>;
  using WeightMap = std::map<std::uint32_t, double>;

  explicit Embedding(StoreMode mode);
  explicit Embedding(CountMap counts) : values_(std::move(counts)) {}
  explicit Embedding(WeightMap weights) : values_(std::move(weights)) {}

  StoreMode mode() const noexcept;
  const CountMap& counts() const;    // raw mode only
  const WeightMap& weights() const;  // weighted mode only

  std::size_t nonzeros() const noexcept;
  std::uint64_t l1() const;  // raw mode only
  // Dense m-length view; absent indices are genuine zeros.
  std::vector<double> dense(std::size_t m) const;

  void bump(std::uint32_t index);  // raw mode only: += 1 at index

  bool operator==(const Embedding& other) const = default;

 private:
  std::variant<CountMap, WeightMap> values_;
};

struct transparent_string_hash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

// Vocabulary-indexed collection of embeddings plus the running column-sum
// vector. Raw-mode invariant: column_sums[d] equals the column total over all
// vectors and total_events equals the sum of column_sums.
class EmbeddingStore {
 public:
  using VectorMap = std::unordered_map<std::string, Embedding,
                                       transparent_string_hash, std::equal_to<>>;

  explicit EmbeddingStore(std::size_t m, StoreMode mode = StoreMode::raw);

  std::size_t m() const noexcept { return m_; }
  StoreMode mode() const noexcept { return mode_; }
  std::uint64_t total_events() const noexcept { return total_events_; }
  const std::vector<std::uint64_t>& column_sums() const noexcept { return column_sums_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t nonzeros() const noexcept;
  const VectorMap& vectors() const noexcept { return vectors_; }

  // Hashes the context into a dimension and increments the target's count
  // there, creating the vector lazily. Throws mode_error on a weighted store.
  void observe(std::string_view target, std::string_view context);
  void observe(const ContextEvent& event) { observe(event.target, event.context); }

  // Pointwise-adds the other raw store into this one (vocabulary union).
  // Throws std::invalid_argument on dimensionality mismatch, mode_error if
  // either side is weighted.
  void absorb(const EmbeddingStore& other);

  // Word's embedding, or nullptr when the word was never observed.
  const Embedding* find(std::string_view word) const;

  // Removes a word and subtracts its mass from column_sums/total_events so
  // the store invariant keeps holding. Returns false for an unknown word.
  bool drop(std::string_view word);

  std::vector<std::string> words_sorted() const;

  bool operator==(const EmbeddingStore& other) const = default;

  // Deserialization/weighting plumbing: these bypass the observe path and
  // trust the caller to keep the store invariant.
  void insert_vector(std::string word, Embedding embedding);
  void set_column_sums(std::vector<std::uint64_t> sums);
  void set_total_events(std::uint64_t n) { total_events_ = n; }

 private:
  std::size_t m_;
  StoreMode mode_;
  VectorMap vectors_;
  std::vector<std::uint64_t> column_sums_;
  std::uint64_t total_events_ = 0;
};

// Pointwise sum of two raw stores.
EmbeddingStore merge(const EmbeddingStore& a, const EmbeddingStore& b);

}  // namespace hashembed

#endif  // HASHEMBED_STORE_HPP
