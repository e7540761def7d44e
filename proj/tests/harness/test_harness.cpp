#include <gtest/gtest.h>

#include "harness/suites.hpp"
#include "tiltkit/errors.hpp"

namespace tiltkit::harness {
namespace {

GeneratorConfig small(uint64_t seed) {
  GeneratorConfig c;
  c.seed = seed;
  c.trials = 5;
  return c;
}

TEST(Generate, SameSeedSameStream) {
  for (const auto& kind : generator_kinds()) {
    EXPECT_EQ(generate(kind, small(1), 4), generate(kind, small(1), 4)) << kind;
  }
  EXPECT_NE(generate("group", small(1), 8), generate("group", small(2), 8));
}

TEST(Generate, PrefixStable) {
  io::json a = generate("butterfly", small(9), 3), b = generate("butterfly", small(9), 6);
  for (size_t i = 0; i < 3; ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Generate, InstancesPassTheirValidators) {
  const GeneratorConfig cfg = small(42);
  for (const auto& j : generate("b_object", cfg, 20)) EXPECT_NO_THROW(io::parse_b_object(j));
  for (const auto& j : generate("butterfly", cfg, 20)) EXPECT_NO_THROW(io::parse_butterfly(j));
  for (const auto& j : generate("b_complex", cfg, 10)) EXPECT_NO_THROW(io::parse_b_complex(j));
  for (const auto& j : generate("dec_complex:compatible", cfg, 20)) EXPECT_TRUE(is_compatible(io::parse_dec_complex(j)));
  for (const auto& j : generate("dec_map", cfg, 10)) EXPECT_NO_THROW(io::parse_dec_map(j));
  for (const auto& j : generate("b_chain_map", cfg, 10)) EXPECT_NO_THROW(io::parse_b_chain_map(j));
  for (const auto& j : generate("c_object", cfg, 20)) EXPECT_NO_THROW(io::parse_c_object(j));
}

TEST(Generate, ButterfliesIncludeNonStrict) {
  size_t nonstrict = 0;
  for (const auto& j : generate("butterfly", small(42), 60))
    nonstrict += !strict_representative(io::parse_butterfly(j)).has_value();
  EXPECT_GT(nonstrict, 0u);
}

// Loading drops zero relation columns, so the first save may differ from the generator output;
// after that the format is a fixed point.
TEST(Generate, RoundTripsThroughJson) {
  for (const auto& j : generate("butterfly", small(3), 10)) {
    Butterfly p = io::parse_butterfly(j);
    io::json once = io::to_json(p);
    EXPECT_TRUE(butterfly_equal(io::parse_butterfly(once), p));
    EXPECT_EQ(io::to_json(io::parse_butterfly(once)), once);
  }
  for (const auto& j : generate("dec_complex", small(3), 10)) {
    DecComplex d = io::parse_dec_complex(j);
    io::json once = io::to_json(d);
    EXPECT_TRUE(io::parse_dec_complex(once) == d);
    EXPECT_EQ(io::to_json(io::parse_dec_complex(once)), once);
  }
}

TEST(Generate, UnknownKind) {
  try {
    generate("tree", small(1), 1);
    FAIL();
  } catch (const TiltError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownKind);
  }
}

TEST(Config, RejectsNonPositiveBounds) {
  GeneratorConfig c;
  c.max_ambient_rank = 0;
  EXPECT_THROW(c.validate(), TiltError);
}

TEST(Suites, UnknownSuite) {
  try {
    run_suite("nonsense", small(1));
    FAIL();
  } catch (const TiltError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSuite);
  }
}

TEST(Suites, ReportsAreDeterministic) {
  for (const auto& name : suite_names()) {
    io::json a = to_json(run_suite(name, small(11))), b = to_json(run_suite(name, small(11)));
    a.erase("duration_seconds");
    b.erase("duration_seconds");
    EXPECT_EQ(a, b) << name;
    EXPECT_TRUE(a["passed"].get<bool>()) << name << ": " << a.dump();
  }
}

}  // namespace
}  // namespace tiltkit::harness
