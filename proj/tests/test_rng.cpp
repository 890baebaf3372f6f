#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <string_view>
#include <vector>

#include "klima/rng.hpp"

using namespace klima;

namespace {

std::span<const char> bytes(std::string_view s) { return {s.data(), s.size()}; }

}  // namespace

// Published SplitMix64 reference: outputs of the generator seeded with 0.
TEST(SplitMix64, ReferenceSequence) {
  constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ULL;
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(splitmix64(gamma), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(splitmix64(2 * gamma), 0x06C45D188009454FULL);
}

TEST(Fnv1a, ReferenceValues) {
  EXPECT_EQ(fnv1a64(bytes("")), 0xCBF29CE484222325ULL);
  EXPECT_EQ(fnv1a64(bytes("a")), 0xAF63DC4C8601EC8CULL);
  EXPECT_EQ(fnv1a64(bytes("uf20-01")), 0xB161D3DCB0B05EBCULL);
}

// Frozen from an independent Python implementation of xorshift64*.
TEST(Rng, FrozenStreams) {
  Rng r(1, 0);
  EXPECT_EQ(r.next_u64(), 0x3C91227D932F0FACULL);
  EXPECT_EQ(r.next_u64(), 0xD03097248A2909F8ULL);
  EXPECT_EQ(r.next_u64(), 0x82AAB5C8DDABFEA5ULL);
  EXPECT_EQ(r.next_u64(), 0x020F53AE733BFFCDULL);

  Rng s(42, 7);
  EXPECT_EQ(s.next_u64(), 0xF938CBE4F60C4127ULL);
  EXPECT_EQ(s.next_u64(), 0xCA198D4ECAAB2D8CULL);
  EXPECT_EQ(s.next_u64(), 0xF17A9B296AD80952ULL);

  Rng t = Rng::from_state(1);
  EXPECT_EQ(t.next_u64(), 0x47E4CE4B896CDD1DULL);
  EXPECT_EQ(t.next_u64(), 0xABCFA6A8E079651DULL);
  EXPECT_EQ(t.next_u64(), 0xB9D10D8FEB731F57ULL);
}

TEST(Rng, UnitValuesFrozen) {
  Rng r(1, 0);
  EXPECT_DOUBLE_EQ(r.next_unit(), 0.23658958020967813);
  EXPECT_DOUBLE_EQ(r.next_unit(), 0.8132414306839203);
}

TEST(Rng, ZeroStateIsRemapped) {
  Rng r = Rng::from_state(0);
  EXPECT_NE(r.state(), 0u);
  EXPECT_NE(r.next_u64(), 0u);
}

TEST(Rng, StreamsDiffer) {
  Rng a(5, 0), b(5, 1), c(6, 0);
  const auto x = a.next_u64(), y = b.next_u64(), z = c.next_u64();
  EXPECT_NE(x, y);
  EXPECT_NE(x, z);
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Rng r(3);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = r.below(7);
    ASSERT_LT(v, 7u);
    ++hist[v];
  }
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
  EXPECT_THROW(r.below(0), std::invalid_argument);
  EXPECT_EQ(r.below(1), 0u);
}

TEST(Rng, UnitInterval) {
  Rng r(9);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = r.next_unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(AliasTable, RejectsBadWeights) {
  const std::vector<double> empty, zeros{0, 0}, neg{1, -1}, nan{1, NAN};
  EXPECT_THROW(build_alias_table(empty), std::invalid_argument);
  EXPECT_THROW(build_alias_table(zeros), std::invalid_argument);
  EXPECT_THROW(build_alias_table(neg), std::invalid_argument);
  EXPECT_THROW(build_alias_table(nan), std::invalid_argument);
  const std::vector<double> w{1, 2}, levels{1, 2, 3};
  EXPECT_THROW(build_alias_table(w, levels), std::invalid_argument);
}

// Exact bin mass reconstructed from (H, A, N): each slot k contributes
// H_k/L to N_k and (1-H_k)/L to A_k.
TEST(AliasTable, ReconstructsWeightsExactly) {
  const std::vector<double> w{0.1, 0.0, 3.0, 1.2, 0.7, 5.0};
  const AliasTable t = build_alias_table(w);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> mass(w.size(), 0.0);
  const double l = static_cast<double>(w.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    ASSERT_GE(t.threshold[k], 0.0);
    ASSERT_LE(t.threshold[k], 1.0);
    mass[t.non_alias[k]] += t.threshold[k] / l;
    mass[t.alias[k]] += (1.0 - t.threshold[k]) / l;
  }
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(mass[i], w[i] / total, 1e-12) << i;
}

TEST(AliasTable, EmpiricalFrequencies) {
  const std::vector<double> w{1, 2, 3, 4};
  const AliasTable t = build_alias_table(w);
  Rng r(11);
  std::vector<int> hist(4, 0);
  const int n = 400000;
  for (int i = 0; i < n; ++i) ++hist[sample_alias_index(t, r)];
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(hist[i] / double(n), (i + 1) / 10.0, 0.004);
}

TEST(AliasTable, ZeroWeightNeverDrawn) {
  const std::vector<double> w{0, 1, 0, 1};
  const AliasTable t = build_alias_table(w);
  Rng r(12);
  for (int i = 0; i < 100000; ++i) {
    const auto k = sample_alias_index(t, r);
    ASSERT_TRUE(k == 1 || k == 3);
  }
}

TEST(DiscreteGaussian, TableShape) {
  const AliasTable t = discrete_gaussian_table(64, 4.0);
  ASSERT_EQ(t.size(), 64u);
  // bin centers: -4 + (i + 0.5) * 8/64
  EXPECT_DOUBLE_EQ(t.levels.front(), -4.0 + 0.0625);
  EXPECT_DOUBLE_EQ(t.levels.back(), 4.0 - 0.0625);
  for (std::size_t i = 0; i < 32; ++i) EXPECT_DOUBLE_EQ(t.levels[i], -t.levels[63 - i]);
}

TEST(DiscreteGaussian, MomentsOverManyDraws) {
  const AliasTable t = discrete_gaussian_table();
  Rng r(2024);
  const int n = 1000000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double v = sample_alias(t, r);
    s += v;
    s2 += v * v;
  }
  const double mean = s / n, sd = std::sqrt(s2 / n - mean * mean);
  EXPECT_LT(std::abs(mean), 0.01);
  EXPECT_NEAR(sd, 1.0, 0.01);
}

TEST(QuantizedUniform, LevelsAndStd) {
  Rng r(5);
  const double a = 2.0;
  const int bits = 4;
  const double step = 2 * a / 15;
  double s = 0, s2 = 0;
  const int n = 400000;
  for (int i = 0; i < n; ++i) {
    const double v = quantized_uniform_noise(bits, a, r);
    ASSERT_GE(v, -a - 1e-12);
    ASSERT_LE(v, a + 1e-12);
    const double code = (v + a) / step;
    ASSERT_NEAR(code, std::round(code), 1e-9);
    s += v;
    s2 += v * v;
  }
  // discrete uniform over 16 equispaced points in [-a, a]
  double var = 0;
  for (int c = 0; c < 16; ++c) var += std::pow(-a + c * step, 2) / 16;
  EXPECT_NEAR(quantized_uniform_std(bits, a), std::sqrt(var), 1e-12);
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(std::sqrt(s2 / n), std::sqrt(var), 0.01);
  EXPECT_THROW(quantized_uniform_noise(0, a, r), std::invalid_argument);
  EXPECT_THROW(quantized_uniform_noise(33, a, r), std::invalid_argument);
}
