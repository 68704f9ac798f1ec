#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qschubert/partition.hpp"
#include "qschubert/text.hpp"

using namespace qschubert;

TEST(Partition, StripsTrailingZeros) {
  EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
  EXPECT_EQ(Partition({2, 1, 0}).length(), 2u);
  EXPECT_TRUE(Partition({0, 0}).empty());
}

TEST(Partition, RejectsBadSequences) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
}

TEST(Partition, Size) {
  EXPECT_EQ(size(Partition{2, 1, 1}), 4);
  EXPECT_EQ(size(Partition{}), 0);
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l <= 4; ++l) EXPECT_EQ(size(rectangle(n, l)), n * l);
}

TEST(Partition, FitsInBox) {
  EXPECT_TRUE(fits_in_box(Partition{2, 2}, GrassmannianContext(2, 4)));
  EXPECT_FALSE(fits_in_box(Partition{3}, GrassmannianContext(2, 4)));
  EXPECT_FALSE(fits_in_box(Partition{1, 1, 1}, GrassmannianContext(2, 5)));
}

TEST(Partition, GrassmannianValidation) {
  EXPECT_THROW(GrassmannianContext(0, 3), std::invalid_argument);
  EXPECT_THROW(GrassmannianContext(3, 3), std::invalid_argument);
  const GrassmannianContext ctx(2, 5);
  EXPECT_EQ(ctx.width(), 3);
  EXPECT_EQ(ctx.dual(), GrassmannianContext(3, 5));
}

TEST(Partition, ConjugateIsInvolution) {
  for (const auto& p : oracle::partitions_in_box(5, 5)) {
    EXPECT_EQ(conjugate(conjugate(p)), p);
    EXPECT_EQ(size(conjugate(p)), size(p));
  }
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
}

TEST(Partition, ComplementIsInvolution) {
  const GrassmannianContext ctx(3, 7);
  for (const auto& p : oracle::partitions_in_box(3, 4)) {
    const Partition c = complement(p, ctx);
    EXPECT_TRUE(fits_in_box(c, ctx));
    EXPECT_EQ(size(p) + size(c), 12);
    EXPECT_EQ(complement(c, ctx), p);
  }
  EXPECT_THROW(complement(Partition{5}, ctx), std::invalid_argument);
}

TEST(Weights, WeightToPartition) {
  EXPECT_EQ(weight_to_partition(SlnWeight::fundamental(4, 2)), (Partition{1, 1}));
  EXPECT_EQ(weight_to_partition(SlnWeight(5, {0, 2, 1, 0})), (Partition{3, 3, 1}));
  EXPECT_EQ(weight_to_partition(SlnWeight(4, {1, 0, 0})), (Partition{1}));
}

TEST(Weights, Normalize) {
  EXPECT_EQ(normalize_sln(Partition{3, 2, 2, 2}, 4), (Partition{1}));
  EXPECT_EQ(normalize_sln(Partition{1, 1}, 4), (Partition{1, 1}));
  for (int n = 2; n <= 6; ++n)
    for (int l = 1; l <= 3; ++l) EXPECT_TRUE(normalize_sln(rectangle(n, l), n).empty());
  EXPECT_THROW(normalize_sln(Partition{1, 1, 1, 1, 1}, 4), std::invalid_argument);
}

TEST(Weights, NormalizeIsIdempotent) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : oracle::partitions_in_box(n, 4)) {
      const Partition once = normalize_sln(p, n);
      EXPECT_EQ(normalize_sln(once, n), once);
      EXPECT_LT(once.length(), static_cast<std::size_t>(n));
    }
}

TEST(Weights, RoundTrip) {
  for (int n = 2; n <= 7; ++n)
    for (int l = 0; l <= 4; ++l)
      for (const auto& w : enumerate_weights(n, l)) {
        const Partition p = weight_to_partition(w);
        EXPECT_EQ(partition_to_weight(p, n), w);
        EXPECT_EQ(p.first(), w.level());
      }
}

TEST(Weights, EnumerationCounts) {
  EXPECT_EQ(enumerate_weights(3, 1).size(), 3u);
  EXPECT_EQ(enumerate_weights(2, 2).size(), 3u);
  EXPECT_EQ(enumerate_weights(4, 2).size(), 10u);
  for (int n = 2; n <= 8; ++n)
    for (int l = 0; l <= 5; ++l) EXPECT_EQ(enumerate_weights(n, l).size(), oracle::binomial(n - 1 + l, l));
}

TEST(Weights, EnumerationMatchesPartitionsInBox) {
  const auto weights = enumerate_weights(3, 1);
  std::set<Partition> got;
  for (const auto& w : weights) got.insert(weight_to_partition(w));
  EXPECT_EQ(got, (std::set<Partition>{Partition{}, Partition{1}, Partition{1, 1}}));

  std::set<Partition> two;
  for (const auto& w : enumerate_weights(2, 2)) two.insert(weight_to_partition(w));
  EXPECT_EQ(two, (std::set<Partition>{Partition{}, Partition{1}, Partition{2}}));

  for (int n = 2; n <= 6; ++n)
    for (int l = 0; l <= 3; ++l) {
      std::set<Partition> all;
      for (const auto& w : enumerate_weights(n, l)) all.insert(weight_to_partition(w));
      const auto box = oracle::partitions_in_box(n - 1, l);
      EXPECT_EQ(all, std::set<Partition>(box.begin(), box.end()));
    }
}

TEST(Weights, FundamentalEdges) {
  EXPECT_EQ(SlnWeight::fundamental(5, 0, 3), SlnWeight::zero(5));
  EXPECT_EQ(SlnWeight::fundamental(5, 5, 3), SlnWeight::zero(5));
  EXPECT_THROW(SlnWeight::fundamental(5, 6), std::invalid_argument);
  EXPECT_THROW(SlnWeight(4, {1, 1}), std::invalid_argument);
  EXPECT_THROW(SlnWeight(4, {1, -1, 0}), std::invalid_argument);
}

TEST(Text, ParsePartition) {
  EXPECT_EQ(parse_partition("[2,1]"), (Partition{2, 1}));
  EXPECT_EQ(parse_partition(" [ 3 , 3 , 1 , 0 ] "), (Partition{3, 3, 1}));
  EXPECT_EQ(parse_partition("[]"), Partition{});
  EXPECT_THROW(parse_partition("[1,2]"), ParseError);
  EXPECT_THROW(parse_partition("2,1"), ParseError);
  EXPECT_THROW(parse_partition("[2,x]"), ParseError);
  EXPECT_EQ(format_partition(Partition{2, 2, 1}), "[2,2,1]");
}

TEST(Text, ParseWeight) {
  EXPECT_EQ(parse_weight("w_3", 7), SlnWeight::fundamental(7, 3));
  EXPECT_EQ(parse_weight("2*w_1+w_3", 5), SlnWeight(5, {2, 0, 1, 0}));
  EXPECT_EQ(parse_weight("(0,2,1,0)", 5), SlnWeight(5, {0, 2, 1, 0}));
  EXPECT_EQ(parse_weight("w(1,0,0)", 4), SlnWeight(4, {1, 0, 0}));
  EXPECT_EQ(parse_weight("[3,3,1]", 5), SlnWeight(5, {0, 2, 1, 0}));
  EXPECT_EQ(parse_weight("0", 4), SlnWeight::zero(4));
  EXPECT_THROW(parse_weight("w_9", 4), ParseError);
  EXPECT_THROW(parse_weight("(1,0)", 4), ParseError);
  EXPECT_THROW(parse_weight("v_1", 4), ParseError);
  EXPECT_EQ(format_weight(SlnWeight(5, {0, 2, 1, 0})), "(0,2,1,0)");
}

TEST(Text, RandomPartitionRoundTrip) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> parts(static_cast<std::size_t>(rng() % 8));
    for (auto& v : parts) v = static_cast<int>(rng() % 10);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    const Partition p(parts);
    EXPECT_EQ(parse_partition(format_partition(p)), p);
  }
}
