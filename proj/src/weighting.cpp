#include "hashembed/weighting.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace hashembed {

EmbeddingStore ppmi(const EmbeddingStore& store, const PpmiOptions& options) {
  if (store.mode() != StoreMode::raw) throw mode_error("ppmi requires a raw store");
  if (store.total_events() < 1) throw std::invalid_argument("ppmi requires a non-empty store");
  if (options.log_base < 0.0 || options.log_base == 1.0) {
    throw std::invalid_argument("log base must be positive and != 1");
  }
  const double log_scale = options.log_base == 0.0 ? 1.0 : 1.0 / std::log(options.log_base);

  // Marginals: the full store's running sums, or sums over a word subset.
  std::vector<std::uint64_t> col_sums = store.column_sums();
  std::uint64_t total = store.total_events();
  const bool subset = !options.marginal_words.empty();
  if (subset) {
    std::unordered_set<std::string_view> wanted(options.marginal_words.begin(),
                                                options.marginal_words.end());
    col_sums.assign(store.m(), 0);
    total = 0;
    for (const auto& [word, vec] : store.vectors()) {
      if (!wanted.contains(word)) continue;
      for (const auto& [index, count] : vec.counts()) {
        col_sums[index] += count;
        total += count;
      }
    }
    if (total == 0) throw std::invalid_argument("marginal word subset covers no events");
  }
  const double log_total = std::log(static_cast<double>(total));

  EmbeddingStore out(store.m(), StoreMode::weighted);
  out.set_column_sums(store.column_sums());
  out.set_total_events(store.total_events());

  for (const auto& [word, vec] : store.vectors()) {
    const double row = static_cast<double>(vec.l1());
    Embedding::WeightMap weights;
    for (const auto& [index, count] : vec.counts()) {
      const std::uint64_t col = col_sums[index];
      if (subset && col == 0) continue;  // no estimate under subset marginals
      if (col == 0 || row <= 0.0) {
        // A stored nonzero forces nonzero marginals over the full store.
        throw std::logic_error("store invariant violated: zero marginal for a stored count");
      }
      const double value = (std::log(static_cast<double>(count)) + log_total -
                            std::log(static_cast<double>(col)) - std::log(row)) *
                           log_scale;
      if (value > 0.0) weights.emplace(index, value);
    }
    out.insert_vector(word, Embedding(std::move(weights)));
  }
  return out;
}

}  // namespace hashembed
