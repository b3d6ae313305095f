#include <gtest/gtest.h>

#include "sdrenc/config.hpp"

namespace sdrenc {
namespace {

Json parse(const char* text) { return Json::parse(text); }

std::string error_key(const Json& j) {
  try {
    parse_any_config(j);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<none>";
}

TEST(Config, RoundTripsEveryEncoderType) {
  const char* configs[] = {
      R"({"type":"scalar","min":0,"max":45,"n":100,"w":21})",
      R"({"type":"delta","min":-5,"max":5,"n":120,"w":21})",
      R"({"type":"cyclic","period":7,"n":700,"w":100})",
      R"({"type":"scalar_unbounded","resolution":0.5,"n":1000,"w":25,"seed":42})",
      R"({"type":"category","categories":["a","b","c"],"w":21,"unknown_policy":"catch_all"})",
      R"({"type":"geospatial","n":2048,"radius":4,"radius_min":4,"radius_max":10,"speed_scale":0.1,"seed":9,"variant":"topw","w":41})",
      R"({"type":"geospatial","n":2048,"radius":2,"radius_min":2,"radius_max":2,"speed_scale":0,"seed":0,"variant":"fixed","cell_size":30})",
      R"({"type":"datetime","weekend":{"n":42,"w":21},"time_of_day":{"n":100,"w":21}})",
      R"({"type":"multi","parts":[{"field":"t","encoder":{"type":"scalar","min":0,"max":1,"n":100,"w":21}},
          {"field":"c","encoder":{"type":"category","categories":["x"],"w":21}}]})",
  };
  for (const char* text : configs) {
    const auto first = parse_any_config(parse(text));
    const auto j = to_json(first);
    const auto second = parse_any_config(j);
    EXPECT_EQ(to_json(second), j) << text;
  }
}

TEST(Config, CategoryDefaultsToErrorPolicy) {
  const auto cfg = std::get<CategoryEncoderConfig>(parse_encoder_config(parse(R"({"type":"category","categories":["a"],"w":21})")));
  EXPECT_EQ(cfg.unknown_policy, UnknownPolicy::error);
  EXPECT_EQ(to_json(EncoderConfig{cfg})["unknown_policy"], "error");
}

TEST(Config, UnknownKeysAreRejected) {
  EXPECT_EQ(error_key(parse(R"({"type":"scalar","min":0,"max":1,"n":100,"w":21,"wdith":3})")), "wdith");
  EXPECT_EQ(error_key(parse(R"({"type":"multi","parts":[{"field":"t","encoder":{"type":"cyclic","period":7,"n":700,"w":100,"x":1}}]})")),
            "parts[0].encoder.x");
}

TEST(Config, TypeErrorsNameTheKey) {
  EXPECT_EQ(error_key(parse(R"({"type":"scalar","min":0,"max":1,"n":-100,"w":21})")), "n");
  EXPECT_EQ(error_key(parse(R"({"type":"scalar","min":0,"max":1,"n":100.5,"w":21})")), "n");
  EXPECT_EQ(error_key(parse(R"({"type":"scalar","min":"0","max":1,"n":100,"w":21})")), "min");
  EXPECT_EQ(error_key(parse(R"({"type":"scalar","max":1,"n":100,"w":21})")), "min");
  EXPECT_EQ(error_key(parse(R"({"type":"bogus"})")), "type");
  EXPECT_EQ(error_key(parse(R"([1,2])")), "");
}

TEST(Config, ValidationErrorsBecomeConfigErrors) {
  EXPECT_EQ(error_key(parse(R"({"type":"scalar","min":1,"max":1,"n":100,"w":21})")), "max");
  EXPECT_EQ(error_key(parse(R"({"type":"scalar","min":0,"max":1,"n":21,"w":21})")), "w");
  EXPECT_EQ(error_key(parse(R"({"type":"category","categories":["a","a"],"w":21})")), "categories");
}

TEST(Config, ResolutionIsDerivedButMayBeRestated) {
  EXPECT_NO_THROW(parse_any_config(parse(R"({"type":"scalar","min":0,"max":45,"n":100,"w":10,"resolution":0.5})")));
  EXPECT_EQ(error_key(parse(R"({"type":"scalar","min":0,"max":45,"n":100,"w":10,"resolution":0.4})")), "resolution");
  EXPECT_EQ(error_key(parse(R"({"type":"cyclic","period":7,"n":700,"w":100,"resolution":0.1})")), "resolution");
}

TEST(Config, FixedGeoWidthIsDerived) {
  const auto cfg = std::get<GeoEncoderConfig>(
      parse_encoder_config(parse(R"({"type":"geospatial","n":2048,"radius":2,"w":25})")));
  EXPECT_EQ(cfg.w, 25u);
  EXPECT_EQ(error_key(parse(R"({"type":"geospatial","n":2048,"radius":2,"w":41})")), "w");
}

TEST(Config, SeedsAcceptStringsAndIntegers) {
  auto seed_of = [](const char* text) {
    return std::get<UnboundedScalarEncoderConfig>(parse_encoder_config(parse(text))).seed;
  };
  EXPECT_EQ(seed_of(R"({"type":"scalar_unbounded","resolution":1,"n":1000,"w":25,"seed":"0xffffffffffffffff"})"), ~0ULL);
  EXPECT_EQ(seed_of(R"({"type":"scalar_unbounded","resolution":1,"n":1000,"w":25,"seed":"123"})"), 123u);
  EXPECT_EQ(seed_of(R"({"type":"scalar_unbounded","resolution":1,"n":1000,"w":25})"), 0u);
  EXPECT_EQ(error_key(parse(R"({"type":"scalar_unbounded","resolution":1,"n":1000,"w":25,"seed":-1})")), "seed");
  EXPECT_EQ(error_key(parse(R"({"type":"scalar_unbounded","resolution":1,"n":1000,"w":25,"seed":"0x"})")), "seed");
}

TEST(Config, DatetimeComponents) {
  const auto cfg = std::get<DatetimeEncoderConfig>(
      parse_encoder_config(parse(R"({"type":"datetime","weekend":true,"day_of_week":{"w":11,"n":77},"time_of_day":false})")));
  ASSERT_TRUE(cfg.weekend);
  EXPECT_EQ(cfg.weekend->n, 42u);
  ASSERT_TRUE(cfg.day_of_week);
  EXPECT_EQ(cfg.day_of_week->n, 77u);
  EXPECT_FALSE(cfg.time_of_day);
  EXPECT_EQ(error_key(parse(R"({"type":"datetime","weekend":{"n":50,"w":21}})")), "weekend.n");
}

TEST(Config, MultiOnlyAtTopLevel) {
  EXPECT_EQ(error_key(parse(R"({"type":"multi","parts":[{"field":"a","encoder":{"type":"multi","parts":[]}}]})")),
            "parts[0].encoder.type");
}

}  // namespace
}  // namespace sdrenc
