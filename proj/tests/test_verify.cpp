#include <gtest/gtest.h>

#include <cstdlib>

#include "klts/verify/rng.hpp"
#include "klts/verify/suite.hpp"

namespace klts {
namespace {

TEST(Rng, SplitMix64ReferenceOutput) {
  SplitMix64 r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
}

TEST(Rng, UniformLiesInUnitInterval) {
  SplitMix64 r(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, Fnv1aReferenceValues) {
  EXPECT_EQ(fnv1a64(""), 0xCBF29CE484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xAF63DC4C8601EC8CULL);
}

TEST(Rng, SubStreamsAreSeedXorName) {
  SplitMix64 a = sub_stream(42, "tensor");
  SplitMix64 b(42ULL ^ fnv1a64("tensor"));
  EXPECT_EQ(a.next(), b.next());
}

SuiteOptions tensor_only() {
  SuiteOptions o;
  o.seed = 42;
  o.groups = {"tensor"};
  return o;
}

TEST(Suite, GroupsRunInFixedOrder) {
  const auto& names = property_group_names();
  ASSERT_EQ(names.size(), 4u);
  EXPECT_EQ(names[0], "tensor");
  EXPECT_EQ(names[3], "weak");
}

TEST(Suite, RecordsDoNotDependOnThreadCount) {
  SuiteOptions serial = tensor_only();
  serial.groups.push_back("geometry");
  serial.threads = 1;
  SuiteOptions parallel = serial;
  parallel.threads = 2;
  const SuiteResult a = run_suite(serial);
  const SuiteResult b = run_suite(parallel);
  ASSERT_EQ(a.records.size(), b.records.size());
  ASSERT_FALSE(a.records.empty());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].name, b.records[i].name);
    EXPECT_EQ(a.records[i].group, b.records[i].group);
    EXPECT_EQ(a.records[i].samples, b.records[i].samples);
    EXPECT_EQ(a.records[i].max_error, b.records[i].max_error);
    EXPECT_EQ(a.records[i].pass, b.records[i].pass);
  }
  EXPECT_EQ(a.records.front().group, "tensor");
  EXPECT_EQ(a.records.back().group, "geometry");
  EXPECT_TRUE(a.pass);
}

TEST(Suite, GlobalOverrideCanForceFailure) {
  SuiteOptions o = tensor_only();
  o.override_all = 0.0;
  const SuiteResult r = run_suite(o);
  EXPECT_FALSE(r.pass);
}

TEST(Suite, PerPropertyOverrideTakesPrecedenceOverDefault) {
  SuiteOptions o = tensor_only();
  const SuiteResult base = run_suite(o);
  ASSERT_FALSE(base.records.empty());
  const PropertyRecord* nonzero = nullptr;
  for (const auto& r : base.records)
    if (r.max_error > 0.0 && r.tolerance > 0.0) nonzero = &r;
  ASSERT_NE(nonzero, nullptr);
  o.tolerance_overrides[nonzero->name] = nonzero->max_error / 2.0;
  const SuiteResult r = run_suite(o);
  for (const auto& rec : r.records) {
    if (rec.name == nonzero->name) {
      EXPECT_FALSE(rec.pass);
    }
  }
  EXPECT_FALSE(r.pass);
}

TEST(Suite, ExplicitThreadCountWins) {
  SuiteOptions o;
  o.threads = 3;
  EXPECT_EQ(resolve_threads(o), 3u);
  o.threads = 0;
  EXPECT_GE(resolve_threads(o), 1u);
}

}  // namespace
}  // namespace klts
