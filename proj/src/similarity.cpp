#include "hashembed/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hashembed {

namespace {

struct PairTallies {
  std::uint64_t concordant = 0;
  std::uint64_t discordant = 0;
  std::uint64_t ties_both = 0;
  std::uint64_t ties_x_only = 0;
  std::uint64_t ties_y_only = 0;
};

PairTallies tally_pairs(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("vectors differ in dimensionality: " +
                                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  if (x.size() < 2) throw std::invalid_argument("pair counting needs at least 2 dimensions");
  PairTallies t;
  const std::size_t m = x.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0.0 && dy == 0.0) {
        ++t.ties_both;
      } else if (dx == 0.0) {
        ++t.ties_x_only;
      } else if (dy == 0.0) {
        ++t.ties_y_only;
      } else if ((dx > 0.0) == (dy > 0.0)) {
        ++t.concordant;
      } else {
        ++t.discordant;
      }
    }
  }
  return t;
}

double clamp_unit(double v) noexcept { return std::clamp(v, -1.0, 1.0); }

}  // namespace

PairCounts pair_counts(std::span<const double> x, std::span<const double> y) {
  const PairTallies t = tally_pairs(x, y);
  return PairCounts{t.concordant, t.discordant,
                    t.ties_both + t.ties_x_only + t.ties_y_only};
}

std::optional<double> gamma(std::span<const double> x, std::span<const double> y) {
  const PairTallies t = tally_pairs(x, y);
  const std::uint64_t p = t.concordant, q = t.discordant;
  if (p + q == 0) return std::nullopt;
  return clamp_unit((static_cast<double>(p) - static_cast<double>(q)) /
                    static_cast<double>(p + q));
}

std::optional<double> kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  const PairTallies t = tally_pairs(x, y);
  const double pq = static_cast<double>(t.concordant + t.discordant);
  const double denom_x = pq + static_cast<double>(t.ties_x_only);
  const double denom_y = pq + static_cast<double>(t.ties_y_only);
  if (denom_x == 0.0 || denom_y == 0.0) return std::nullopt;
  const double numer = static_cast<double>(t.concordant) - static_cast<double>(t.discordant);
  return clamp_unit(numer / std::sqrt(denom_x * denom_y));
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("vectors differ in dimensionality: " +
                                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  if (x.size() < 2) throw std::invalid_argument("correlation needs at least 2 dimensions");
  const std::size_t m = x.size();
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(m);
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(m);
  double cov = 0.0, var_x = 0.0, var_y = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0) return std::nullopt;
  return clamp_unit(cov / std::sqrt(var_x * var_y));
}

std::vector<double> fractional_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share the average of ranks i+1..j+1.
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("vectors differ in dimensionality: " +
                                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  const std::vector<double> rx = fractional_ranks(x);
  const std::vector<double> ry = fractional_ranks(y);
  return pearson(rx, ry);
}

std::optional<double> cosine(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("vectors differ in dimensionality: " +
                                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  double dot = 0.0, nx = 0.0, ny = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x[i] * y[i];
    nx += x[i] * x[i];
    ny += y[i] * y[i];
  }
  if (nx == 0.0 || ny == 0.0) return std::nullopt;
  return clamp_unit(dot / (std::sqrt(nx) * std::sqrt(ny)));
}

std::optional<Measure> measure_from_name(std::string_view name) {
  if (name == "gamma") return Measure::gamma;
  if (name == "taub" || name == "tau-b" || name == "tau_b") return Measure::tau_b;
  if (name == "pearson") return Measure::pearson;
  if (name == "spearman") return Measure::spearman;
  if (name == "cosine") return Measure::cosine;
  return std::nullopt;
}

std::string_view measure_name(Measure measure) noexcept {
  switch (measure) {
    case Measure::gamma: return "gamma";
    case Measure::tau_b: return "taub";
    case Measure::pearson: return "pearson";
    case Measure::spearman: return "spearman";
    case Measure::cosine: return "cosine";
  }
  return "?";
}

Measure default_measure(StoreMode mode) noexcept {
  return mode == StoreMode::raw ? Measure::gamma : Measure::pearson;
}

std::optional<double> similarity(std::span<const double> x,
                                 std::span<const double> y, Measure measure) {
  switch (measure) {
    case Measure::gamma: return gamma(x, y);
    case Measure::tau_b: return kendall_tau_b(x, y);
    case Measure::pearson: return pearson(x, y);
    case Measure::spearman: return spearman(x, y);
    case Measure::cosine: return cosine(x, y);
  }
  return std::nullopt;
}

std::optional<double> similarity(const EmbeddingStore& store, std::string_view w1,
                                 std::string_view w2, Measure measure) {
  const Embedding* a = store.find(w1);
  if (a == nullptr) throw std::out_of_range("word not in vocabulary: " + std::string(w1));
  const Embedding* b = store.find(w2);
  if (b == nullptr) throw std::out_of_range("word not in vocabulary: " + std::string(w2));
  const std::vector<double> x = a->dense(store.m());
  const std::vector<double> y = b->dense(store.m());
  return similarity(x, y, measure);
}

}  // namespace hashembed
