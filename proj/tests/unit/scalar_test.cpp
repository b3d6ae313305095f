#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "sdrenc/scalar.hpp"
#include "test_util.hpp"

namespace sdrenc {
namespace {

std::vector<Sdr::Index> range(Sdr::Index first, Sdr::Index last) {
  std::vector<Sdr::Index> out;
  for (auto i = first; i <= last; ++i) out.push_back(i);
  return out;
}

bool has_warning(const Findings& f, const std::string& key) {
  return std::any_of(f.begin(), f.end(), [&](const Finding& x) { return x.severity == Severity::warning && x.key == key; });
}

const ScalarEncoderConfig kHalfStep{0.0, 45.0, 100, 10};  // resolution 0.5

TEST(ScalarEncoder, EncodesContiguousWindowAtBucket) {
  ScalarEncoder enc(kHalfStep);
  EXPECT_DOUBLE_EQ(kHalfStep.resolution(), 0.5);
  EXPECT_EQ(enc.encode(10.0), Sdr(100, range(20, 29)));
  EXPECT_EQ(overlap(enc.encode(10.0), enc.encode(10.5)), 9u);
}

TEST(ScalarEncoder, ClampsOutOfRangeValues) {
  ScalarEncoder enc(kHalfStep);
  EXPECT_EQ(enc.encode(-5.0), Sdr(100, range(0, 9)));
  EXPECT_EQ(enc.encode(45.0), Sdr(100, range(90, 99)));
  EXPECT_EQ(enc.encode(1e9), Sdr(100, range(90, 99)));
}

TEST(ScalarEncoder, RejectsNonFiniteInput) {
  ScalarEncoder enc(kHalfStep);
  EXPECT_THROW(enc.encode(std::numeric_limits<double>::quiet_NaN()), InputError);
  EXPECT_THROW(enc.encode(std::numeric_limits<double>::infinity()), InputError);
}

TEST(ScalarEncoder, RejectsStructurallyInvalidConfig) {
  EXPECT_THROW(ScalarEncoder({5.0, 5.0, 100, 21}), ConfigError);
  EXPECT_THROW(ScalarEncoder({0.0, 1.0, 10, 11}), ConfigError);
  EXPECT_THROW(ScalarEncoder({0.0, 1.0, 10, 10}), ConfigError);
  EXPECT_THROW(ScalarEncoder({0.0, 1.0, 10, 0}), ConfigError);
}

TEST(ScalarEncoder, OverlapLawOnGrid) {
  ScalarEncoder enc(kHalfStep);
  std::vector<double> grid;
  for (int i = 0; i <= 180; ++i) grid.push_back(0.25 * i);
  for (double a : grid) {
    for (double b : grid) {
      const auto da = static_cast<long>(std::floor(a / 0.5));
      const auto db = static_cast<long>(std::floor(b / 0.5));
      const auto expect = std::max(0L, 10L - std::abs(std::min(da, 90L) - std::min(db, 90L)));
      ASSERT_EQ(overlap(enc.encode(a), enc.encode(b)), static_cast<std::size_t>(expect)) << a << " " << b;
    }
  }
}

TEST(ScalarEncoder, OverlapNonIncreasingInDistance) {
  ScalarEncoder enc({-10.0, 30.0, 200, 25});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = test::uniform(rng, -10.0, 30.0);
    std::size_t last = enc.config().w + 1;
    for (double b = a; b <= 30.0; b += 0.01) {
      const auto o = overlap(enc.encode(a), enc.encode(b));
      ASSERT_LE(o, last);
      last = o;
    }
  }
}

TEST(ScalarEncoder, ConstantWidthAndSize) {
  ScalarEncoder enc({0.0, 1.0, 134, 21});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto s = enc.encode(test::uniform(rng, -2.0, 3.0));
    ASSERT_EQ(s.size(), 134u);
    ASSERT_EQ(s.count(), 21u);
  }
}

TEST(CyclicEncoder, SaturdayWrapsAround) {
  CyclicEncoder week({7.0, 7, 3});
  EXPECT_EQ(week.encode(6.0), Sdr(7, {0, 1, 6}));
  EXPECT_EQ(overlap(week.encode(0.0), week.encode(6.0)), 2u);
  EXPECT_EQ(overlap(week.encode(0.0), week.encode(1.0)), 2u);
}

TEST(CyclicEncoder, PeriodicInValue) {
  CyclicEncoder enc({24.0, 120, 21});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double v = test::uniform(rng, -100.0, 100.0);
    const double k = static_cast<double>(test::uniform_int(rng, -3, 3));
    // Exact integer periods keep fmod exact enough; compare buckets, not floats.
    ASSERT_EQ(enc.encode(v), enc.encode(v + 24.0 * k)) << v;
  }
  EXPECT_EQ(enc.encode(-1.0), enc.encode(23.0));
}

TEST(CyclicEncoder, OverlapDependsOnCircularBucketDistance) {
  CyclicEncoderConfig cfg{10.0, 40, 9};
  CyclicEncoder enc(cfg);
  for (std::size_t a = 0; a < 40; ++a) {
    for (std::size_t b = 0; b < 40; ++b) {
      const double va = (a + 0.5) * cfg.resolution();
      const double vb = (b + 0.5) * cfg.resolution();
      const auto d = std::min<std::size_t>((a + 40 - b) % 40, (b + 40 - a) % 40);
      const auto expect = d >= 9 ? 0 : 9 - d;
      ASSERT_EQ(overlap(enc.encode(va), enc.encode(vb)), expect) << a << " " << b;
    }
  }
}

TEST(CyclicEncoder, AlwaysWActiveBits) {
  CyclicEncoder enc({7.0, 100, 21});
  std::mt19937_64 rng(4);
  for (int i = 0; i < 2000; ++i) ASSERT_EQ(enc.encode(test::uniform(rng, -50.0, 50.0)).count(), 21u);
}

TEST(DeltaEncoder, FirstValueEncodesZeroThenDifferences) {
  ScalarEncoderConfig inner{-10.0, 10.0, 120, 20};
  ScalarEncoder reference(inner);
  DeltaEncoder delta({inner});
  EXPECT_EQ(delta.encode(10.0), reference.encode(0.0));
  EXPECT_EQ(delta.encode(12.0), reference.encode(2.0));
  EXPECT_EQ(delta.previous(), 12.0);
}

TEST(DeltaEncoder, ConstantInputRepeats) {
  DeltaEncoder delta(DeltaEncoderConfig{{-5.0, 5.0, 100, 20}});
  const auto first = delta.encode(5.0);
  const auto second = delta.encode(5.0);
  const auto third = delta.encode(5.0);
  EXPECT_EQ(second, third);
  EXPECT_EQ(first, second);
}

TEST(DeltaEncoder, ErrorLeavesStateUnchanged) {
  DeltaEncoder delta(DeltaEncoderConfig{{-5.0, 5.0, 100, 20}});
  delta.encode(1.0);
  EXPECT_THROW(delta.encode(std::numeric_limits<double>::quiet_NaN()), InputError);
  EXPECT_EQ(delta.previous(), 1.0);
  delta.reset();
  EXPECT_FALSE(delta.previous().has_value());
}

const UnboundedScalarEncoderConfig kUnbounded{1.0, 1000, 25, 42};

TEST(UnboundedScalarEncoder, AdjacentBucketsShareAllButOne) {
  UnboundedScalarEncoder enc(kUnbounded);
  EXPECT_EQ(enc.bucket(0.0), 0);
  EXPECT_EQ(enc.bucket(1.0), 1);
  // Buckets {0..24} and {1..25} share 24 hashed buckets; no collisions here (oracle).
  EXPECT_EQ(enc.encode(0.0).count(), 25u);
  EXPECT_EQ(overlap(enc.encode(0.0), enc.encode(1.0)), 24u);
  EXPECT_EQ(enc.encode(0.0), enc.encode(0.0));
}

TEST(UnboundedScalarEncoder, MatchesOneDimensionalCoordinateHash) {
  UnboundedScalarEncoder enc(kUnbounded);
  std::vector<Sdr::Index> bits;
  for (std::int32_t b = -3; b < 22; ++b) bits.push_back(coordinate_hash({b, 0}, 42, 1000).bit_index);
  EXPECT_EQ(enc.encode(-3.0), Sdr::from_unsorted(1000, bits));
}

TEST(UnboundedScalarEncoder, OverlapAtLeastSharedBucketsMinusCollisions) {
  UnboundedScalarEncoder enc(kUnbounded);
  for (std::int64_t d = 0; d <= 30; ++d) {
    const auto a = enc.encode_bucket(500);
    const auto b = enc.encode_bucket(500 + d);
    const auto shared = static_cast<std::size_t>(std::max<std::int64_t>(0, 25 - d));
    // Colliding buckets can only remove bits, so the overlap can fall short by
    // at most the collisions inside each window.
    EXPECT_GE(overlap(a, b) + (25 - a.count()) + (25 - b.count()), shared) << d;
  }
}

TEST(UnboundedScalarEncoder, DistantValuesOverlapAtChance) {
  // Oracle: tests/oracles/unbounded_oracle.py gives a total of 582 over these pairs.
  UnboundedScalarEncoder enc(kUnbounded);
  std::size_t total = 0;
  for (std::int64_t b = 0; b < 1000 * 37; b += 37) total += overlap(enc.encode_bucket(b), enc.encode_bucket(b + 1000));
  EXPECT_EQ(total, 582u);
  const double mean = static_cast<double>(total) / 1000.0;
  const double chance = 25.0 * 25.0 / 1000.0;
  EXPECT_LE(mean, chance + 3.0 * std::sqrt(chance) / std::sqrt(1000.0));
}

TEST(UnboundedScalarEncoder, BucketOverflowIsARangeError) {
  UnboundedScalarEncoder enc({1e-300, 1000, 25, 0});
  EXPECT_THROW(enc.encode(1.0), RangeError);
  UnboundedScalarEncoder unit(kUnbounded);
  EXPECT_THROW(unit.encode(9.3e18), RangeError);
  EXPECT_THROW(unit.encode(9223372036854775807.0), RangeError);
  EXPECT_NO_THROW(unit.encode(-9.2e18));
  EXPECT_THROW(unit.encode(std::numeric_limits<double>::infinity()), InputError);
}

TEST(UnboundedScalarEncoder, HandlesBucketsBeyond32Bits) {
  UnboundedScalarEncoder enc(kUnbounded);
  const double far = 4294967296.0 * 3.0;
  EXPECT_EQ(enc.encode(far), enc.encode(far));
  EXPECT_NE(enc.encode(far), enc.encode(0.0));
}

TEST(Validation, RecommendedSizesProduceNoWarnings) {
  EXPECT_TRUE(validate(ScalarEncoderConfig{0.0, 100.0, 134, 21}).empty());
  EXPECT_TRUE(validate(UnboundedScalarEncoderConfig{1.0, 2048, 41, 0}).empty());
}

TEST(Validation, SmallWWarns) {
  const auto f = validate(ScalarEncoderConfig{0.0, 45.0, 100, 10});
  EXPECT_FALSE(has_errors(f));
  EXPECT_TRUE(has_warning(f, "w"));
}

TEST(Validation, SmallNAndSparsityWarn) {
  const auto f = validate(CyclicEncoderConfig{7.0, 7, 3});
  EXPECT_FALSE(has_errors(f));
  EXPECT_TRUE(has_warning(f, "n"));
  EXPECT_EQ(std::count_if(f.begin(), f.end(), [](const Finding& x) { return x.key == "w"; }), 2);  // w<20 and w/n=0.43
}

TEST(Validation, StructuralErrors) {
  EXPECT_TRUE(has_errors(validate(ScalarEncoderConfig{5.0, 5.0, 100, 21})));
  EXPECT_TRUE(has_errors(validate(ScalarEncoderConfig{0.0, 1.0, 100, 101})));
  EXPECT_TRUE(has_errors(validate(CyclicEncoderConfig{0.0, 100, 21})));
  EXPECT_TRUE(has_errors(validate(UnboundedScalarEncoderConfig{0.0, 100, 21, 0})));
  EXPECT_TRUE(has_errors(validate(UnboundedScalarEncoderConfig{-1.0, 100, 21, 0})));
}

}  // namespace
}  // namespace sdrenc
