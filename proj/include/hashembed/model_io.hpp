#ifndef HASHEMBED_MODEL_IO_HPP
#define HASHEMBED_MODEL_IO_HPP

#include <string>

#include "hashembed/store.hpp"

namespace hashembed {

inline constexpr int kModelFormatVersion = 1;

// Writes the store as UTF-8 text, one word per line with strictly increasing
// `index:value` pairs, preceded by a header and the column-sum line. Words
// are written in lexicographic order so equal stores produce identical bytes.
// A path ending in ".gz" is gzip-compressed.
void save_store(const EmbeddingStore& store, const std::string& path);

// Inverse of save_store; counts round-trip bit-exactly and weighted values
// round-trip through 17-significant-digit decimal. Throws parse_error (with
// the offending line number) on malformed input; nothing partial is returned.
EmbeddingStore load_store(const std::string& path);

}  // namespace hashembed

#endif  // HASHEMBED_MODEL_IO_HPP
