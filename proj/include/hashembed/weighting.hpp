#ifndef HASHEMBED_WEIGHTING_HPP
#define HASHEMBED_WEIGHTING_HPP

#include <string>
#include <vector>

#include "hashembed/store.hpp"

namespace hashembed {

struct PpmiOptions {
  // Log base for the weighting; 0 selects the natural logarithm. Changing
  // the base rescales every weight by one positive constant, so rank- and
  // correlation-based similarities are unaffected.
  double log_base = 0.0;
  // When non-empty, the column marginals and the grand total are taken over
  // this word subset only; rows with no usable marginal get weight 0.
  std::vector<std::string> marginal_words;
};

// Positive pointwise mutual information over the reduced-dimensionality
// counts: each stored cell becomes max(0, log(count * total / (col * row))).
// Exact zeros are not stored, so the output's nonzero pattern is a subset of
// the input's. Column sums are carried over unchanged as metadata describing
// the underlying raw model. Throws mode_error on a weighted input and
// std::invalid_argument on an empty store.
EmbeddingStore ppmi(const EmbeddingStore& store, const PpmiOptions& options = {});

}  // namespace hashembed

#endif  // HASHEMBED_WEIGHTING_HPP
