#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tambara/error.hpp"
#include "tambara/sample.hpp"

using namespace tambara;

namespace {

const char* kGroups[] = {"C2", "C3", "C4", "S3"};

GSet level(const FiniteGroup& g, Rng& rng) { return random_gset(g, rng, {2, 3, false}); }

oracle::RawBispan raw(const BispanClass& b) {
  const Bispan& r = b.representative();
  return {r.top(), r.middle(), r.r().values(), r.n().values(), r.t().values()};
}

// An isomorphic copy with shuffled carriers.
BispanClass shuffle(const BispanClass& b, Rng& rng) {
  const Bispan& r = b.representative();
  auto pz = oracle::shuffled(r.top().size(), rng);
  auto pw = oracle::shuffled(r.middle().size(), rng);
  GSet z = oracle::relabel(r.top(), pz), w = oracle::relabel(r.middle(), pw);
  std::vector<int> rv(z.size()), nv(z.size()), tv(w.size());
  for (int p = 0; p < z.size(); ++p) {
    rv[pz[p]] = r.r()(p);
    nv[pz[p]] = pw[r.n()(p)];
  }
  for (int q = 0; q < w.size(); ++q) tv[pw[q]] = r.t()(q);
  return BispanClass(Bispan::make(EquivariantMap::make(z, r.source(), rv), EquivariantMap::make(z, w, nv),
                                  EquivariantMap::make(w, r.target(), tv)));
}

// Evaluates b on an object over its source: pull back, take sections, push forward.
SliceObject act(const BispanClass& b, const SliceObject& a) {
  const Bispan& r = b.representative();
  Restriction pulled = restrict(r.r(), a);
  DependentProduct d = pi(r.n(), pulled.object);
  return sigma(r.t(), d.object());
}

}  // namespace

TEST(Polynomial, KeyEqualityAgreesWithDoubleIsoSearch) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(61);
    int equal = 0;
    for (int k = 0; k < 80; ++k) {
      GSet x = level(g, rng), y = level(g, rng);
      Shape mid{2, 3, true}, top{2, 4, true};
      BispanClass a = random_bispan(x, y, rng, mid, top);
      BispanClass b = rng.coin() ? shuffle(a, rng) : random_bispan(x, y, rng, mid, top);
      if (a.representative().top().size() > 5 || b.representative().top().size() > 5) continue;
      bool want = oracle::bispan_iso(raw(a), raw(b));
      equal += want;
      EXPECT_EQ(a == b, want) << name;
      auto w = find_bispan_iso(a, b);
      ASSERT_EQ(w.has_value(), want);
      if (!w) continue;
      const Bispan& ra = a.representative();
      const Bispan& rb = b.representative();
      for (int z = 0; z < ra.top().size(); ++z) {
        EXPECT_EQ(rb.r()(w->top.forward(z)), ra.r()(z));
        EXPECT_EQ(rb.n()(w->top.forward(z)), w->middle.forward(ra.n()(z)));
      }
      EXPECT_TRUE(is_iso(w->top.forward));
      EXPECT_TRUE(is_iso(w->middle.forward));
    }
    EXPECT_GT(equal, 10);
  }
}

TEST(Polynomial, GeneratorsAtIdentity) {
  FiniteGroup g = builtin_group("S3");
  GSet x = orbit_sum(g, {1, 4});
  auto id = EquivariantMap::identity(x);
  EXPECT_EQ(bt_of(id), identity_bispan(x));
  EXPECT_EQ(bn_of(id), identity_bispan(x));
  EXPECT_EQ(br_of(id), identity_bispan(x));
}

TEST(Polynomial, GeneratorFunctoriality) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(67);
    for (int k = 0; k < 40; ++k) {
      GSet z = level(g, rng);
      EquivariantMap f = random_over(z, rng, {2, 3, false});
      EquivariantMap h = random_over(f.source(), rng, {2, 4, false});
      EquivariantMap fh = compose(f, h);
      EXPECT_EQ(bt_of(fh), bispan_compose(bt_of(f), bt_of(h)));
      EXPECT_EQ(bn_of(fh), bispan_compose(bn_of(f), bn_of(h))) << name;
      EXPECT_EQ(br_of(fh), bispan_compose(br_of(h), br_of(f)));
    }
  }
}

TEST(Polynomial, NormAfterFoldUsesDistributor) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  BispanClass b = bispan_compose(bn_of(terminal_map(free)), bt_of(codiagonal(free)));
  const Bispan& r = b.representative();
  EXPECT_EQ(r.middle().size(), 4);
  std::multiset<std::pair<int, int>> want{{1, 2}, {1, 2}, {2, 1}};
  EXPECT_EQ(oracle::orbit_profile(oracle::raw(r.middle())), want);
  EXPECT_EQ(r.top().size(), 8);
}

TEST(Polynomial, RestrictionPastNorm) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(71);
    for (int k = 0; k < 40; ++k) {
      GSet d = level(g, rng);
      EquivariantMap f = random_over(d, rng, {2, 4, false});
      EquivariantMap h = random_over(d, rng, {2, 3, false});
      Pullback pb = pullback(h, f);
      // R_h N_f = N_{p1} R_{p2}
      EXPECT_EQ(bispan_compose(br_of(h), bn_of(f)), bispan_compose(bn_of(pb.proj1), br_of(pb.proj2))) << name;
    }
  }
}

TEST(Polynomial, IdentityAndCoherence) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(73);
    Shape mid{2, 3, true}, top{2, 3, true};
    for (int k = 0; k < 30; ++k) {
      GSet w = level(g, rng), x = level(g, rng), y = level(g, rng), z = level(g, rng);
      BispanClass b1 = random_bispan(w, x, rng, mid, top);
      BispanClass b2 = random_bispan(x, y, rng, mid, top);
      BispanClass b3 = random_bispan(y, z, rng, mid, top);
      Caps caps;
      caps.max_points = 1 << 16;
      EXPECT_EQ(bispan_compose(identity_bispan(x), b1), b1);
      EXPECT_EQ(bispan_compose(b1, identity_bispan(w)), b1);
      EXPECT_EQ(bispan_compose(b3, bispan_compose(b2, b1, caps), caps),
                bispan_compose(bispan_compose(b3, b2, caps), b1, caps))
          << name;
    }
  }
}

TEST(Polynomial, CompositeActsAsComposedAction) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(79);
    Shape mid{2, 3, true}, top{2, 3, true};
    for (int k = 0; k < 30; ++k) {
      GSet w = level(g, rng), x = level(g, rng), y = level(g, rng);
      BispanClass b1 = random_bispan(w, x, rng, mid, top);
      BispanClass b2 = random_bispan(x, y, rng, mid, top);
      SliceObject a(random_over(w, rng, {2, 3, true}));
      Caps caps;
      caps.max_points = 1 << 16;
      SliceObject lhs = act(bispan_compose(b2, b1, caps), a);
      SliceObject rhs = act(b2, act(b1, a));
      EXPECT_TRUE(find_slice_iso(lhs, rhs).has_value()) << name;
    }
  }
}

TEST(Polynomial, NormalFormRecomposes) {
  FiniteGroup g = builtin_group("S3");
  Rng rng(83);
  for (int k = 0; k < 30; ++k) {
    GSet x = level(g, rng), y = level(g, rng), z = level(g, rng);
    BispanClass c = bispan_compose(random_bispan(y, z, rng), random_bispan(x, y, rng));
    NormalForm nf = normal_form(c);
    EXPECT_EQ(bispan_compose(bt_of(nf.t), bispan_compose(bn_of(nf.n), br_of(nf.r))), c);
  }
}

TEST(Polynomial, EmbeddingIsFunctorial) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(89);
    for (int k = 0; k < 40; ++k) {
      GSet w = level(g, rng), x = level(g, rng), y = level(g, rng);
      SpanClass s1 = random_span(w, x, rng), s2 = random_span(x, y, rng);
      EXPECT_EQ(embed_span(span_compose(s2, s1)), bispan_compose(embed_span(s2), embed_span(s1))) << name;
    }
    GSet x = level(g, rng);
    EXPECT_EQ(embed_span(identity_span(x)), identity_bispan(x));
  }
}

TEST(Polynomial, ProductPairing) {
  FiniteGroup g = builtin_group("C2");
  Rng rng(97);
  for (int k = 0; k < 30; ++k) {
    GSet t = level(g, rng), x = level(g, rng), y = level(g, rng);
    BispanClass a = random_bispan(t, x, rng), b = random_bispan(t, y, rng);
    Coproduct c = coproduct(x, y);
    BispanClass p = bispan_pair(a, b);
    EXPECT_EQ(bispan_compose(br_of(c.inj1), p), a);
    EXPECT_EQ(bispan_compose(br_of(c.inj2), p), b);
  }
  GSet e = initial(g);
  GSet x = orbit_sum(g, {0});
  EXPECT_EQ(random_bispan(x, e, rng), zero_bispan(x, e));
}

TEST(Polynomial, SubcategoryMembership) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  IndexPair triv{TransferRelation::trivial(g), TransferRelation::trivial(g)};
  IndexPair full{TransferRelation::complete(g), TransferRelation::complete(g)};
  EXPECT_FALSE(in_subcategory_u(triv, bn_of(terminal_map(free))));
  EXPECT_TRUE(in_subcategory_u(full, bn_of(terminal_map(free))));
  EXPECT_TRUE(in_subcategory_u(triv, br_of(terminal_map(free))));
  EXPECT_TRUE(in_subcategory_u(triv, bn_of(codiagonal(free))));
}

TEST(Polynomial, SizeCap) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  EquivariantMap four = extend_from_reps(orbit_sum(g, {0, 0, 0, 0}), free, {0, 0, 0, 0});
  Caps caps;
  caps.max_points = 8;
  EXPECT_THROW(bispan_compose(bn_of(terminal_map(free)), bt_of(four), caps), Error);
  EXPECT_NO_THROW(bispan_compose(bn_of(terminal_map(free)), bt_of(four)));
}
