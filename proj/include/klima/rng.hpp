#ifndef KLIMA_RNG_HPP
#define KLIMA_RNG_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace klima {

/// SplitMix64 finalizer. Used for seeding and for deriving per-try streams.
std::uint64_t splitmix64(std::uint64_t x);

/// Mixes a master seed and a stream id into a nonzero 64-bit state:
///   state = splitmix64(seed + 0x9E3779B97F4A7C15 * (stream + 1))
/// A zero result is remapped to kZeroStateReplacement.
std::uint64_t derive_state(std::uint64_t seed, std::uint64_t stream);

/// 64-bit FNV-1a, for turning instance ids into stable seed salts.
std::uint64_t fnv1a64(std::span<const char> bytes);

/// Behavioral stand-in for the on-chip XORSHIFT generator: xorshift64*
/// (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D).
class Rng {
 public:
  static constexpr std::uint64_t kZeroStateReplacement = 0x9E3779B97F4A7C15ULL;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(derive_state(seed, stream)) {}

  static Rng from_state(std::uint64_t state);

  std::uint64_t next_u64() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), n > 0. Lemire's nearly-divisionless method.
  std::uint64_t below(std::uint64_t n);

  bool coin() { return (next_u64() >> 63) != 0; }

  std::uint64_t state() const { return state_; }

 private:
  Rng() = default;
  std::uint64_t state_ = kZeroStateReplacement;
};

/// Walker alias table. `threshold` is H, `alias` is A, `non_alias` is N;
/// A and N index into `levels`.
struct AliasTable {
  std::vector<double> threshold;
  std::vector<std::uint32_t> alias;
  std::vector<std::uint32_t> non_alias;
  std::vector<double> levels;

  std::size_t size() const { return threshold.size(); }
};

/// Vose's stable variant of Walker's construction. `levels` defaults to the
/// bin indices 0..L-1. Throws std::invalid_argument for negative or all-zero
/// weights, or a level list of the wrong length.
AliasTable build_alias_table(std::span<const double> weights,
                             std::span<const double> levels = {});

/// Index k drawn from the high 32 bits of one 64-bit word, threshold h from
/// the low 32 bits. Returns N(k) when h <= H(k), otherwise A(k).
std::uint32_t sample_alias_index(const AliasTable& table, Rng& rng);

inline double sample_alias(const AliasTable& table, Rng& rng) {
  return table.levels[sample_alias_index(table, rng)];
}

/// Unit-sigma Gaussian discretized into `levels` equal bins over
/// [-span, +span] (in sigmas). Level values are bin centers, weights are the
/// bin probability masses.
AliasTable discrete_gaussian_table(int levels = 64, double span = 4.0);

/// One of 2^n_bits equispaced levels spanning [-amplitude, +amplitude],
/// chosen uniformly (the top n_bits of one draw select the DAC code).
double quantized_uniform_noise(int n_bits, double amplitude, Rng& rng);

/// Standard deviation of quantized_uniform_noise for the given settings.
double quantized_uniform_std(int n_bits, double amplitude);

}  // namespace klima

#endif  // KLIMA_RNG_HPP
