#include "klima/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace klima {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_state(std::uint64_t seed, std::uint64_t stream) {
  const std::uint64_t s = splitmix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
  return s == 0 ? Rng::kZeroStateReplacement : s;
}

std::uint64_t fnv1a64(std::span<const char> bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

Rng Rng::from_state(std::uint64_t state) {
  Rng r;
  r.state_ = state == 0 ? kZeroStateReplacement : state;
  return r;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  __uint128_t m = static_cast<__uint128_t>(next_u64()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t t = (0 - n) % n;
    while (low < t) {
      m = static_cast<__uint128_t>(next_u64()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

AliasTable build_alias_table(std::span<const double> weights, std::span<const double> levels) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("alias table: empty weight list");
  if (!levels.empty() && levels.size() != n)
    throw std::invalid_argument("alias table: level count differs from weight count");

  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("alias table: weights must be finite and nonnegative");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("alias table: all weights are zero");

  AliasTable t;
  t.threshold.assign(n, 1.0);
  t.alias.resize(n);
  t.non_alias.resize(n);
  t.levels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.alias[i] = static_cast<std::uint32_t>(i);
    t.non_alias[i] = static_cast<std::uint32_t>(i);
    t.levels[i] = levels.empty() ? static_cast<double>(i) : levels[i];
  }

  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * static_cast<double>(n) / total;
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    t.threshold[s] = scaled[s];
    t.alias[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers differ from 1 only by rounding.
  for (std::uint32_t i : large) t.threshold[i] = 1.0;
  for (std::uint32_t i : small) t.threshold[i] = 1.0;
  return t;
}

std::uint32_t sample_alias_index(const AliasTable& table, Rng& rng) {
  const std::uint64_t r = rng.next_u64();
  const auto k = static_cast<std::size_t>(((r >> 32) * table.size()) >> 32);
  const double h = static_cast<double>(r & 0xFFFFFFFFULL) * 0x1.0p-32;
  return h <= table.threshold[k] ? table.non_alias[k] : table.alias[k];
}

AliasTable discrete_gaussian_table(int levels, double span) {
  if (levels < 2) throw std::invalid_argument("gaussian table: need at least 2 levels");
  if (!(span > 0.0)) throw std::invalid_argument("gaussian table: span must be positive");
  const double width = 2.0 * span / levels;
  auto cdf = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
  std::vector<double> weights(levels), centers(levels);
  for (int i = 0; i < levels; ++i) {
    const double lo = -span + i * width;
    weights[i] = cdf(lo + width) - cdf(lo);
    centers[i] = lo + 0.5 * width;
  }
  return build_alias_table(weights, centers);
}

double quantized_uniform_noise(int n_bits, double amplitude, Rng& rng) {
  if (n_bits < 1 || n_bits > 32) throw std::invalid_argument("DAC width must be in [1, 32]");
  const std::uint64_t levels = std::uint64_t{1} << n_bits;
  const std::uint64_t code = rng.next_u64() >> (64 - n_bits);
  const double step = 2.0 * amplitude / static_cast<double>(levels - 1);
  return -amplitude + static_cast<double>(code) * step;
}

double quantized_uniform_std(int n_bits, double amplitude) {
  const double levels = std::ldexp(1.0, n_bits);
  return amplitude * std::sqrt((levels + 1.0) / (3.0 * (levels - 1.0)));
}

}  // namespace klima
