#ifndef HASHEMBED_CORPUS_HPP
#define HASHEMBED_CORPUS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hashembed {

// One (target word, context element) observation. The views point into
// caller-owned storage and are only valid for the duration of the sink call.
struct ContextEvent {
  std::string_view target;
  std::string_view context;
};

using EventSink = std::function<void(const ContextEvent&)>;

// Context window shape around a target token, in tokens.
struct WindowConfig {
  int left = 5;
  int right = 5;

  bool valid() const noexcept { return left >= 0 && right >= 0 && left + right >= 1; }
};

// Splits on runs of whitespace. No stemming and no punctuation stripping;
// ASCII lowercasing only when asked for.
std::vector<std::string> tokenize(std::string_view line, bool lowercase = false);

// Emits (tokens[i], tokens[j]) for every j != i with i-left <= j <= i+right,
// clipped at the sequence ends. Windows never cross the given sequence.
// Throws std::invalid_argument on an invalid window.
void window_events(const std::vector<std::string>& tokens,
                   const WindowConfig& cfg, const EventSink& sink);

// Emits (token, doc_id) once per token occurrence in the document.
// Throws std::invalid_argument on an empty doc_id.
void document_events(std::string_view doc_id,
                     const std::vector<std::string>& tokens,
                     const EventSink& sink);

// Treats the entry as a set: members are deduplicated, then every ordered
// pair of distinct members is emitted (|S|*(|S|-1) events). Returns false
// without emitting when fewer than two distinct members remain.
bool relation_tuple_events(const std::vector<std::string>& entry,
                           const EventSink& sink);

}  // namespace hashembed

#endif  // HASHEMBED_CORPUS_HPP
