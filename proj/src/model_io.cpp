#include "hashembed/model_io.hpp"

#include <zlib.h>

#include <cerrno>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace hashembed {

namespace {

bool has_gz_suffix(const std::string& path) {
  return path.size() >= 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

void write_file(const std::string& path, const std::string& data) {
  if (has_gz_suffix(path)) {
    gzFile gz = gzopen(path.c_str(), "wb");
    if (gz == nullptr) throw std::runtime_error("cannot open for writing: " + path);
    const int written = gzwrite(gz, data.data(), static_cast<unsigned>(data.size()));
    const int rc = gzclose(gz);
    if (written != static_cast<int>(data.size()) || rc != Z_OK) {
      throw std::runtime_error("gzip write failed: " + path);
    }
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  if (has_gz_suffix(path)) {
    gzFile gz = gzopen(path.c_str(), "rb");
    if (gz == nullptr) throw std::runtime_error("cannot open: " + path);
    std::string data;
    char buf[1 << 16];
    int n;
    while ((n = gzread(gz, buf, sizeof(buf))) > 0) data.append(buf, static_cast<std::size_t>(n));
    const bool fail = n < 0;
    gzclose(gz);
    if (fail) throw std::runtime_error("gzip read failed: " + path);
    return data;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream data;
  data << in.rdbuf();
  return std::move(data).str();
}

// Splits into lines; a trailing newline does not produce an extra line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) return std::nullopt;
    v = v * 10 + digit;
  }
  return v;
}

std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string buf(s);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

void save_store(const EmbeddingStore& store, const std::string& path) {
  std::string data;
  data.reserve(64 + store.nonzeros() * 12);
  data += "hashembed " + std::to_string(kModelFormatVersion);
  data += " m=" + std::to_string(store.m());
  data += " mode=";
  data += to_string(store.mode());
  data += " words=" + std::to_string(store.size());
  data += '\n';

  data += "#colsums";
  for (const std::uint64_t s : store.column_sums()) {
    data += ' ';
    data += std::to_string(s);
  }
  data += '\n';

  for (const std::string& word : store.words_sorted()) {
    data += word;
    const Embedding& vec = *store.find(word);
    if (vec.mode() == StoreMode::raw) {
      for (const auto& [index, count] : vec.counts()) {
        data += ' ';
        data += std::to_string(index);
        data += ':';
        data += std::to_string(count);
      }
    } else {
      for (const auto& [index, weight] : vec.weights()) {
        data += ' ';
        data += std::to_string(index);
        data += ':';
        append_double(data, weight);
      }
    }
    data += '\n';
  }
  write_file(path, data);
}

EmbeddingStore load_store(const std::string& path) {
  const std::string data = read_file(path);
  const std::vector<std::string_view> lines = split_lines(data);
  if (lines.empty()) throw parse_error(path, 1, "empty model file");

  // Header: hashembed <version> m=<m> mode=<raw|weighted> words=<p>
  const auto header = split_fields(lines[0]);
  if (header.size() != 5 || header[0] != "hashembed") {
    throw parse_error(path, 1, "bad header, expected 'hashembed <version> m=<m> mode=<mode> words=<p>'");
  }
  const auto version = parse_u64(header[1]);
  if (!version || *version != static_cast<std::uint64_t>(kModelFormatVersion)) {
    throw parse_error(path, 1, "unsupported format version '" + std::string(header[1]) + "'");
  }
  auto key_value = [&](std::string_view field, std::string_view key) -> std::string_view {
    if (field.size() <= key.size() + 1 || field.substr(0, key.size()) != key ||
        field[key.size()] != '=') {
      throw parse_error(path, 1, "bad header field '" + std::string(field) + "'");
    }
    return field.substr(key.size() + 1);
  };
  const auto m = parse_u64(key_value(header[2], "m"));
  if (!m || *m < 1) throw parse_error(path, 1, "bad dimensionality in header");
  const std::string_view mode_str = key_value(header[3], "mode");
  StoreMode mode;
  if (mode_str == "raw") {
    mode = StoreMode::raw;
  } else if (mode_str == "weighted") {
    mode = StoreMode::weighted;
  } else {
    throw parse_error(path, 1, "bad mode '" + std::string(mode_str) + "'");
  }
  const auto words = parse_u64(key_value(header[4], "words"));
  if (!words) throw parse_error(path, 1, "bad word count in header");

  if (lines.size() < 2) throw parse_error(path, 2, "missing #colsums line");
  const auto colsum_fields = split_fields(lines[1]);
  if (colsum_fields.empty() || colsum_fields[0] != "#colsums") {
    throw parse_error(path, 2, "expected #colsums line");
  }
  if (colsum_fields.size() - 1 != *m) {
    throw parse_error(path, 2, "#colsums has " + std::to_string(colsum_fields.size() - 1) +
                                   " entries, header says m=" + std::to_string(*m));
  }
  EmbeddingStore store(static_cast<std::size_t>(*m), mode);
  std::vector<std::uint64_t> sums;
  std::uint64_t total = 0;
  sums.reserve(*m);
  for (std::size_t i = 1; i < colsum_fields.size(); ++i) {
    const auto v = parse_u64(colsum_fields[i]);
    if (!v) throw parse_error(path, 2, "bad column sum '" + std::string(colsum_fields[i]) + "'");
    sums.push_back(*v);
    total += *v;
  }
  store.set_column_sums(std::move(sums));
  store.set_total_events(total);

  if (lines.size() - 2 != *words) {
    throw parse_error(path, lines.size(),
                      "file has " + std::to_string(lines.size() - 2) + " word lines, header says words=" +
                          std::to_string(*words));
  }

  for (std::size_t li = 2; li < lines.size(); ++li) {
    const std::size_t lineno = li + 1;
    const auto fields = split_fields(lines[li]);
    if (fields.empty()) throw parse_error(path, lineno, "empty word line");
    const std::string word(fields[0]);
    if (store.find(word) != nullptr) throw parse_error(path, lineno, "duplicate word '" + word + "'");

    Embedding::CountMap counts;
    Embedding::WeightMap weights;
    std::int64_t prev_index = -1;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const std::string_view pair = fields[f];
      const std::size_t colon = pair.find(':');
      if (colon == std::string_view::npos || colon == 0 || colon + 1 >= pair.size()) {
        throw parse_error(path, lineno, "bad entry '" + std::string(pair) + "'");
      }
      const auto index = parse_u64(pair.substr(0, colon));
      if (!index || *index >= *m) {
        throw parse_error(path, lineno, "index out of range in '" + std::string(pair) + "'");
      }
      if (static_cast<std::int64_t>(*index) <= prev_index) {
        throw parse_error(path, lineno, "indices must be strictly increasing");
      }
      prev_index = static_cast<std::int64_t>(*index);
      const std::string_view value = pair.substr(colon + 1);
      if (mode == StoreMode::raw) {
        const auto count = parse_u64(value);
        if (!count) throw parse_error(path, lineno, "bad count '" + std::string(value) + "'");
        if (*count == 0) throw parse_error(path, lineno, "explicit zero count");
        counts.emplace(static_cast<std::uint32_t>(*index), *count);
      } else {
        const auto weight = parse_double(value);
        if (!weight) throw parse_error(path, lineno, "bad value '" + std::string(value) + "'");
        weights.emplace(static_cast<std::uint32_t>(*index), *weight);
      }
    }
    if (mode == StoreMode::raw) {
      store.insert_vector(word, Embedding(std::move(counts)));
    } else {
      store.insert_vector(word, Embedding(std::move(weights)));
    }
  }
  return store;
}

}  // namespace hashembed
