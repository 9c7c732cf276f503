#include "hashembed/store.hpp"

#include <algorithm>
#include <stdexcept>

#include "hashembed/hash.hpp"

namespace hashembed {

std::string_view to_string(StoreMode mode) noexcept {
  return mode == StoreMode::raw ? "raw" : "weighted";
}

Embedding::Embedding(StoreMode mode) {
  if (mode == StoreMode::weighted) values_ = WeightMap{};
}

StoreMode Embedding::mode() const noexcept {
  return std::holds_alternative<CountMap>(values_) ? StoreMode::raw
                                                   : StoreMode::weighted;
}

const Embedding::CountMap& Embedding::counts() const {
  if (mode() != StoreMode::raw) throw mode_error("embedding is not in raw mode");
  return std::get<CountMap>(values_);
}

const Embedding::WeightMap& Embedding::weights() const {
  if (mode() != StoreMode::weighted) throw mode_error("embedding is not weighted");
  return std::get<WeightMap>(values_);
}

std::size_t Embedding::nonzeros() const noexcept {
  return std::visit([](const auto& m) { return m.size(); }, values_);
}

std::uint64_t Embedding::l1() const {
  std::uint64_t sum = 0;
  for (const auto& [index, count] : counts()) sum += count;
  return sum;
}

std::vector<double> Embedding::dense(std::size_t m) const {
  std::vector<double> out(m, 0.0);
  std::visit(
      [&out](const auto& values) {
        for (const auto& [index, value] : values) {
          out.at(index) = static_cast<double>(value);
        }
      },
      values_);
  return out;
}

void Embedding::bump(std::uint32_t index) {
  if (mode() != StoreMode::raw) throw mode_error("cannot count into a weighted embedding");
  ++std::get<CountMap>(values_)[index];
}

EmbeddingStore::EmbeddingStore(std::size_t m, StoreMode mode)
    : m_(m), mode_(mode), column_sums_(m, 0) {
  if (m < 1) throw std::invalid_argument("dimensionality must be >= 1");
}

std::size_t EmbeddingStore::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& [word, vec] : vectors_) total += vec.nonzeros();
  return total;
}

void EmbeddingStore::observe(std::string_view target, std::string_view context) {
  if (mode_ != StoreMode::raw) throw mode_error("cannot observe into a weighted store");
  if (target.empty()) throw std::invalid_argument("target word must be non-empty");
  if (context.empty()) throw std::invalid_argument("context bytes must be non-empty");
  const std::uint32_t d = dimension_index(context, static_cast<std::int64_t>(m_));
  auto it = vectors_.find(target);
  if (it == vectors_.end()) {
    it = vectors_.emplace(std::string(target), Embedding(StoreMode::raw)).first;
  }
  it->second.bump(d);
  ++column_sums_[d];
  ++total_events_;
}

void EmbeddingStore::absorb(const EmbeddingStore& other) {
  if (mode_ != StoreMode::raw || other.mode_ != StoreMode::raw) {
    throw mode_error("merge requires two raw stores");
  }
  if (m_ != other.m_) {
    throw std::invalid_argument("cannot merge stores of dimensionality " +
                                std::to_string(m_) + " and " + std::to_string(other.m_));
  }
  for (const auto& [word, vec] : other.vectors_) {
    auto it = vectors_.find(word);
    if (it == vectors_.end()) {
      vectors_.emplace(word, vec);
    } else {
      Embedding::CountMap sum = it->second.counts();
      for (const auto& [index, count] : vec.counts()) sum[index] += count;
      it->second = Embedding(std::move(sum));
    }
  }
  for (std::size_t d = 0; d < m_; ++d) column_sums_[d] += other.column_sums_[d];
  total_events_ += other.total_events_;
}

const Embedding* EmbeddingStore::find(std::string_view word) const {
  auto it = vectors_.find(word);
  return it == vectors_.end() ? nullptr : &it->second;
}

bool EmbeddingStore::drop(std::string_view word) {
  auto it = vectors_.find(word);
  if (it == vectors_.end()) return false;
  if (mode_ == StoreMode::raw) {
    for (const auto& [index, count] : it->second.counts()) {
      column_sums_[index] -= count;
      total_events_ -= count;
    }
  }
  vectors_.erase(it);
  return true;
}

std::vector<std::string> EmbeddingStore::words_sorted() const {
  std::vector<std::string> words;
  words.reserve(vectors_.size());
  for (const auto& [word, vec] : vectors_) words.push_back(word);
  std::sort(words.begin(), words.end());
  return words;
}

void EmbeddingStore::insert_vector(std::string word, Embedding embedding) {
  if (embedding.mode() != mode_) throw mode_error("embedding mode does not match store mode");
  if (word.empty()) throw std::invalid_argument("word must be non-empty");
  vectors_.insert_or_assign(std::move(word), std::move(embedding));
}

void EmbeddingStore::set_column_sums(std::vector<std::uint64_t> sums) {
  if (sums.size() != m_) throw std::invalid_argument("column-sum vector must have length m");
  column_sums_ = std::move(sums);
}

EmbeddingStore merge(const EmbeddingStore& a, const EmbeddingStore& b) {
  EmbeddingStore out = a;
  out.absorb(b);
  return out;
}

}  // namespace hashembed
