#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tambara/error.hpp"
#include "tambara/sample.hpp"

using namespace tambara;

namespace {

const char* kGroups[] = {"C2", "C3", "C4", "S3"};

}  // namespace

TEST(GSet, OrbitOfSubgroup) {
  FiniteGroup g = builtin_group("S3");
  for (int h = 0; h < g.subgroup_count(); ++h) {
    GSet o = make_orbit(g, h);
    EXPECT_EQ(o.size(), g.order() / g.subgroup(h).order());
    EXPECT_EQ(o.orbit_count(), 1);
    EXPECT_EQ(o.stabilizer(0), h);
  }
}

TEST(GSet, RejectsNonAction) {
  FiniteGroup g = builtin_group("C2");
  EXPECT_THROW(GSet::from_action(g, 2, {0, 1, 0, 0}), Error);
  EXPECT_NO_THROW(GSet::from_action(g, 2, {0, 1, 1, 0}));
}

TEST(GSet, RejectsNonEquivariantMap) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  GSet pt = terminal(g);
  EXPECT_THROW(EquivariantMap::make(pt, free, {0}), Error);
  EXPECT_NO_THROW(EquivariantMap::make(free, pt, {0, 0}));
}

TEST(GSet, MapCountsMatchExhaustiveScan) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(7);
    for (int k = 0; k < 40; ++k) {
      GSet x = random_gset(g, rng, {2, 5, true});
      GSet y = random_gset(g, rng, {3, 6, true});
      auto ox = oracle::raw(x), oy = oracle::raw(y);
      EXPECT_EQ(count_maps(x, y), static_cast<long long>(oracle::all_maps(ox, oy).size())) << name;
    }
  }
}

TEST(GSet, IsoAgreesWithPermutationSearch) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(11);
    for (int k = 0; k < 60; ++k) {
      GSet x = random_gset(g, rng, {3, 6, true});
      GSet y = random_gset(g, rng, {3, 6, true});
      EXPECT_EQ(find_iso(x, y).has_value(), oracle::iso_over(x, y, {}, {})) << name;
    }
  }
}

TEST(GSet, PullbackHasAllMatchingPairs) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(3);
    for (int k = 0; k < 40; ++k) {
      GSet d = random_gset(g, rng, {2, 4, false});
      EquivariantMap f = random_over(d, rng, {3, 6, true});
      EquivariantMap h = random_over(d, rng, {3, 6, true});
      Pullback pb = pullback(f, h);
      int pairs = 0;
      for (int a = 0; a < f.source().size(); ++a)
        for (int b = 0; b < h.source().size(); ++b)
          if (f(a) == h(b)) {
            ++pairs;
            int i = pb.index(a, b);
            EXPECT_EQ(pb.proj1(i), a);
            EXPECT_EQ(pb.proj2(i), b);
          }
      EXPECT_EQ(pb.object.size(), pairs);
      EXPECT_TRUE(is_cartesian(pb.proj2, pb.proj1, h, f));
    }
  }
}

TEST(GSet, ExtendFromRepsChecksStabilizers) {
  FiniteGroup g = builtin_group("C2");
  GSet pt = terminal(g);
  GSet free = make_orbit(g, 0);
  EXPECT_THROW(extend_from_reps(pt, free, {0}), Error);
  EXPECT_EQ(extend_from_reps(free, pt, {0}).values(), (std::vector<int>{0, 0}));
}

TEST(GSet, CoproductAndMonicity) {
  FiniteGroup g = builtin_group("C3");
  GSet a = make_orbit(g, 0);
  GSet b = terminal(g);
  Coproduct c = coproduct(a, b);
  EXPECT_EQ(c.object.size(), 4);
  EXPECT_TRUE(is_mono(c.inj1));
  EXPECT_TRUE(is_mono(c.inj2));
  EXPECT_TRUE(is_epi(codiagonal(a)));
  EXPECT_FALSE(is_mono(codiagonal(a)));
  EXPECT_EQ(describe(c.object), "C3/e + C3/C3");
}
