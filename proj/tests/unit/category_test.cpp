#include <gtest/gtest.h>

#include "sdrenc/category.hpp"

namespace sdrenc {
namespace {

std::vector<Sdr::Index> block(Sdr::Index first, Sdr::Index count) {
  std::vector<Sdr::Index> out;
  for (Sdr::Index i = 0; i < count; ++i) out.push_back(first + i);
  return out;
}

TEST(CategoryEncoder, WeekendTakesSecondHalf) {
  CategoryEncoder enc({{"weekday", "weekend"}, 50});
  EXPECT_EQ(enc.size(), 100u);
  EXPECT_EQ(enc.encode("weekend"), Sdr(100, block(50, 50)));
  EXPECT_EQ(overlap(enc.encode("weekday"), enc.encode("weekend")), 0u);
}

TEST(CategoryEncoder, PartOfSpeechBlocks) {
  CategoryEncoder enc({{"noun", "verb", "adjective"}, 25});
  EXPECT_EQ(enc.encode("verb"), Sdr(75, block(25, 25)));
}

TEST(CategoryEncoder, DistinctLabelsNeverOverlap) {
  std::vector<std::string> labels;
  for (int i = 0; i < 12; ++i) labels.push_back("c" + std::to_string(i));
  CategoryEncoder enc({labels, 21});
  for (const auto& a : labels) {
    EXPECT_EQ(enc.encode(a).count(), 21u);
    EXPECT_DOUBLE_EQ(sparsity(enc.encode(a)), 21.0 / (12 * 21));
    for (const auto& b : labels) {
      if (a != b) {
        EXPECT_EQ(overlap(enc.encode(a), enc.encode(b)), 0u);
      }
    }
  }
}

TEST(CategoryEncoder, UnknownLabelIsAnErrorByDefault) {
  CategoryEncoder enc({{"a", "b"}, 21});
  try {
    enc.encode("c");
    FAIL();
  } catch (const UnknownCategory& e) {
    EXPECT_EQ(e.label(), "c");
  }
}

TEST(CategoryEncoder, CatchAllBlockFollowsDeclaredBlocks) {
  CategoryEncoder enc({{"a", "b"}, 21, UnknownPolicy::catch_all});
  EXPECT_EQ(enc.size(), 63u);
  EXPECT_EQ(enc.encode("zzz"), Sdr(63, block(42, 21)));
  EXPECT_EQ(enc.encode("zzz"), enc.encode("yyy"));
  EXPECT_EQ(overlap(enc.encode("a"), enc.encode("zzz")), 0u);
}

TEST(CategoryEncoder, InvalidConfigs) {
  EXPECT_THROW(CategoryEncoder({{}, 21}), ConfigError);
  EXPECT_THROW(CategoryEncoder({{"a", "a"}, 21}), ConfigError);
  EXPECT_THROW(CategoryEncoder({{"a"}, 0}), ConfigError);
}

TEST(CategoryEncoder, HighShareOfBitsIsFineForCategories) {
  // 50 of 100 bits for a binary value is acceptable; only w < 20 warns.
  EXPECT_TRUE(validate(CategoryEncoderConfig{{"weekday", "weekend"}, 50}).empty());
  EXPECT_EQ(validate(CategoryEncoderConfig{{"x", "y"}, 5}).size(), 1u);
}

}  // namespace
}  // namespace sdrenc
