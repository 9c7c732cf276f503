#include "hashembed/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace hashembed {

std::vector<std::string> tokenize(std::string_view line, bool lowercase) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) {
      std::string tok(line.substr(start, i - start));
      if (lowercase) {
        std::transform(tok.begin(), tok.end(), tok.begin(), [](unsigned char c) {
          return static_cast<char>(std::tolower(c));
        });
      }
      tokens.push_back(std::move(tok));
    }
  }
  return tokens;
}

void window_events(const std::vector<std::string>& tokens,
                   const WindowConfig& cfg, const EventSink& sink) {
  if (!cfg.valid()) {
    throw std::invalid_argument("window must satisfy left >= 0, right >= 0, left + right >= 1");
  }
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(tokens.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - cfg.left);
    const std::ptrdiff_t hi = std::min(n - 1, i + cfg.right);
    for (std::ptrdiff_t j = lo; j <= hi; ++j) {
      if (j == i) continue;
      sink(ContextEvent{tokens[static_cast<std::size_t>(i)],
                        tokens[static_cast<std::size_t>(j)]});
    }
  }
}

void document_events(std::string_view doc_id,
                     const std::vector<std::string>& tokens,
                     const EventSink& sink) {
  if (doc_id.empty()) throw std::invalid_argument("document id must be non-empty");
  for (const std::string& tok : tokens) {
    sink(ContextEvent{tok, doc_id});
  }
}

bool relation_tuple_events(const std::vector<std::string>& entry,
                           const EventSink& sink) {
  std::vector<std::string_view> members;
  std::unordered_set<std::string_view> seen;
  members.reserve(entry.size());
  for (const std::string& w : entry) {
    if (seen.insert(w).second) members.push_back(w);
  }
  if (members.size() < 2) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j == i) continue;
      sink(ContextEvent{members[i], members[j]});
    }
  }
  return true;
}

}  // namespace hashembed
