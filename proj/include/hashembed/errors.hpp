#ifndef HASHEMBED_ERRORS_HPP
#define HASHEMBED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hashembed {

// Raised when an input file (model, test set, config) cannot be parsed.
// Carries the path and 1-based line number of the offending line.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

// Raised when an operation is applied to a store in the wrong mode
// (e.g. observing into a weighted store).
class mode_error : public std::logic_error {
 public:
  explicit mode_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hashembed

#endif  // HASHEMBED_ERRORS_HPP
