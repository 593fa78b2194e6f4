#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tambara/error.hpp"
#include "tambara/group.hpp"

using namespace tambara;

TEST(Group, BuiltinOrders) {
  EXPECT_EQ(builtin_group("C1").order(), 1);
  EXPECT_EQ(builtin_group("C6").order(), 6);
  EXPECT_EQ(builtin_group("S3").order(), 6);
  EXPECT_EQ(builtin_group("D4").order(), 8);
  EXPECT_EQ(builtin_group("Q8").order(), 8);
}

TEST(Group, SubgroupCountsMatchSubsetScan) {
  for (const auto& name : builtin_group_names()) {
    FiniteGroup g = builtin_group(name);
    EXPECT_EQ(g.subgroup_count(), oracle::count_subgroups(g)) << name;
  }
}

TEST(Group, KnownSubgroupCounts) {
  EXPECT_EQ(builtin_group("S3").subgroup_count(), 6);
  EXPECT_EQ(builtin_group("D4").subgroup_count(), 10);
  EXPECT_EQ(builtin_group("Q8").subgroup_count(), 6);
  EXPECT_EQ(builtin_group("C4").subgroup_count(), 3);
}

TEST(Group, ConjugacyClassesOfSubgroups) {
  EXPECT_EQ(builtin_group("S3").conjugacy_classes().size(), 4u);
  EXPECT_EQ(builtin_group("D4").conjugacy_classes().size(), 8u);
  EXPECT_EQ(builtin_group("C4").conjugacy_classes().size(), 3u);
}

TEST(Group, SubgroupOrderingEndpoints) {
  FiniteGroup g = builtin_group("S3");
  EXPECT_EQ(g.subgroup(g.trivial_subgroup()).order(), 1);
  EXPECT_EQ(g.subgroup(g.whole_group()).order(), 6);
  for (int k = 1; k < g.subgroup_count(); ++k)
    EXPECT_LE(g.subgroup(k - 1).order(), g.subgroup(k).order());
}

TEST(Group, RejectsBadTables) {
  auto kind = [](const std::vector<std::vector<int>>& t) {
    try {
      FiniteGroup::from_table("bad", t);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::UnknownSuite;
  };
  EXPECT_EQ(kind({{0, 1}, {1, 1}}), ErrorKind::NoInverse);
  EXPECT_EQ(kind({{1, 0}, {0, 0}}), ErrorKind::NoIdentity);
  EXPECT_EQ(kind({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}), ErrorKind::NonAssociative);
  EXPECT_EQ(kind({{0, 1}, {1}}), ErrorKind::MalformedSpec);
}

TEST(Group, LatticeCap) {
  EXPECT_THROW(subgroups(builtin_group("C30"), 24), Error);
  EXPECT_EQ(subgroups(builtin_group("D4"), 24).subgroups.size(), 10u);
}

TEST(Group, IntersectionAndConjugation) {
  FiniteGroup g = builtin_group("S3");
  for (int h = 0; h < g.subgroup_count(); ++h)
    for (int k = 0; k < g.subgroup_count(); ++k) {
      int m = g.intersect(h, k);
      EXPECT_EQ(g.subgroup(m).mask, g.subgroup(h).mask & g.subgroup(k).mask);
    }
  for (int h = 0; h < g.subgroup_count(); ++h)
    for (Elem e = 0; e < g.order(); ++e)
      EXPECT_EQ(g.class_of(g.conjugate_subgroup(h, e)), g.class_of(h));
}
