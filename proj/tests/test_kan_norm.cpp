#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tambara/error.hpp"
#include "tambara/kan_norm.hpp"
#include "tambara/sample.hpp"

using namespace tambara;

namespace {

struct OrbitMap {
  const char* group;
  int subgroup;
};

// G/H -> G/G for the pairs (C2,e), (C3,e), (C4,C2), (S3,C2), (S3,C3).
const OrbitMap kMaps[] = {{"C2", 0}, {"C3", 0}, {"C4", 1}, {"S3", 1}, {"S3", 4}};

EquivariantMap orbit_map(const OrbitMap& m) {
  return terminal_map(make_orbit(builtin_group(m.group), m.subgroup));
}

const Shape kSmall{2, 4, true};

SliceObject random_object(const GSet& x, Rng& rng) { return SliceObject(random_over(x, rng, kSmall)); }

}  // namespace

TEST(KanNorm, TAlongIdentityIsInvertible) {
  FiniteGroup g = builtin_group("S3");
  Rng rng(201);
  for (int k = 0; k < 20; ++k) {
    GSet x = random_gset(g, rng, {2, 4, false});
    SliceObject a = random_object(x, rng);
    BispanClass c = t_component(EquivariantMap::identity(x), a);
    const Bispan& t = c.representative();
    EXPECT_TRUE(is_iso(t.r()));
    EXPECT_TRUE(is_iso(t.n()));
    EXPECT_TRUE(is_iso(t.t()));
  }
}

TEST(KanNorm, TOfFreeOrbitIsNorm) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  EquivariantMap i = terminal_map(free);
  BispanClass t = t_component(i, SliceObject::identity(free));
  EXPECT_EQ(t, bn_of(i));
  EXPECT_EQ(t.representative().top().size(), 2);
  EXPECT_EQ(t.representative().middle().size(), 1);
}

TEST(KanNorm, TRequiresMultiplicativeMap) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  EquivariantMap i = terminal_map(free);
  EXPECT_THROW(t_component(TransferRelation::trivial(g), i, SliceObject::identity(free)), Error);
  EXPECT_NO_THROW(t_component(TransferRelation::complete(g), i, SliceObject::identity(free)));
}

TEST(KanNorm, TIsNatural) {
  for (const auto& m : kMaps) {
    EquivariantMap i = orbit_map(m);
    Rng rng(203);
    for (int k = 0; k < 100; ++k) {
      SliceObject a = random_object(i.source(), rng), b = random_object(i.source(), rng);
      SpanClass phi = random_span_over(a, b, rng, kSmall);
      BispanClass left = bispan_compose(t_component(i, b), embed_span(map_span_sigma(i, phi)));
      BispanClass right = bispan_compose(embed_span(map_span_pi(i, a, b, phi)), t_component(i, a));
      EXPECT_EQ(left, right) << m.group << " " << describe(phi);
    }
  }
}

TEST(KanNorm, KeyLemmaAndReassembly) {
  for (const auto& m : kMaps) {
    EquivariantMap i = orbit_map(m);
    Rng rng(205);
    for (int k = 0; k < 100; ++k) {
      SliceObject a = random_object(i.source(), rng);
      SliceObject b = random_object(i.target(), rng);
      BispanClass phi = random_bispan_over(sigma(i, a), b, rng, kSmall, kSmall);
      SigmaData d = sigma_decompose(i, a, b, phi);
      EXPECT_EQ(reassemble(i, d), phi);
      auto [lhs, rhs] = key_lemma_sides(i, a, d);
      EXPECT_EQ(lhs, rhs) << m.group << " " << describe(phi);
      EXPECT_EQ(lambda_map(i, a, colim_element(i, a, b, d)), phi);
    }
  }
}

TEST(KanNorm, KeyLemmaOnCounit) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  GSet pt = terminal(g);
  EquivariantMap i = terminal_map(free);
  SliceObject a = SliceObject::identity(free);
  SliceObject b = SliceObject::identity(pt);
  SigmaData d = sigma_decompose(i, a, b, bn_of(i));
  EXPECT_TRUE(key_lemma_check(i, a, d));
  EXPECT_EQ(d.b.domain().size(), 1);
  EXPECT_EQ(d.g_adj.underlying().source().size(), 2);
}

TEST(KanNorm, OmegaRoundTrip) {
  for (const auto& m : kMaps) {
    EquivariantMap i = orbit_map(m);
    Rng rng(207);
    for (int k = 0; k < 60; ++k) {
      SliceObject a = random_object(i.source(), rng), g = random_object(i.source(), rng);
      BispanClass psi = random_bispan_over(a, g, rng, kSmall, kSmall);
      BispanClass w = omega(i, a, g, psi);
      SliceObject pg = pi(i, g).object();
      ColimElement el = colim_element(i, a, pg, sigma_decompose(i, a, pg, w));
      EXPECT_EQ(lambda_map(i, a, el), w) << m.group;
      EXPECT_EQ(lambda_map(i, a, eta_unit(i, g, psi)), w);
    }
  }
}

TEST(KanNorm, OmegaOfIdentityIsT) {
  for (const auto& m : kMaps) {
    EquivariantMap i = orbit_map(m);
    Rng rng(209);
    SliceObject a = random_object(i.source(), rng);
    EXPECT_EQ(omega(i, a, a, identity_bispan(a.domain())), t_component(i, a));
  }
}

TEST(KanNorm, OmegaNaturalInSource) {
  for (const auto& m : kMaps) {
    EquivariantMap i = orbit_map(m);
    Rng rng(211);
    for (int k = 0; k < 60; ++k) {
      SliceObject a = random_object(i.source(), rng), a2 = random_object(i.source(), rng);
      SliceObject g = random_object(i.source(), rng);
      BispanClass phi = random_bispan_over(a, a2, rng, kSmall, kSmall);
      BispanClass psi = random_bispan_over(a2, g, rng, kSmall, kSmall);
      EXPECT_EQ(omega(i, a, g, bispan_compose(psi, phi)), bispan_compose(omega(i, a2, g, psi), map_bispan(i, phi)))
          << m.group;
    }
  }
}

TEST(KanNorm, LambdaRespectsCommaRelation) {
  for (const auto& m : kMaps) {
    EquivariantMap i = orbit_map(m);
    Rng rng(213);
    for (int k = 0; k < 60; ++k) {
      SliceObject a = random_object(i.source(), rng);
      SliceObject g = random_object(i.source(), rng), g2 = random_object(i.source(), rng);
      SliceObject beta = random_object(i.target(), rng);
      SliceObject pg2 = pi(i, g2).object();
      SpanClass chi = random_span_over(g, g2, rng, kSmall);
      SpanClass phi = random_span_over(pg2, beta, rng, kSmall);
      BispanClass psi = random_bispan_over(a, g, rng, kSmall, kSmall);
      auto [e1, e2] = comma_pair(i, g, g2, chi, phi, psi);
      EXPECT_EQ(lambda_map(i, a, e1), lambda_map(i, a, e2)) << m.group;
    }
  }
}

namespace {

// Every bispan Sigma alpha -> beta over y with carriers built from orbit
// multisets of at most cap points, deduplicated by double permutation search.
std::vector<oracle::RawBispan> brute_classes(const EquivariantMap& i, const SliceObject& alpha,
                                             const SliceObject& beta, int cap) {
  const FiniteGroup& g = i.source().group();
  std::vector<GSet> carriers;
  std::vector<int> ids;
  std::function<void(int, int)> rec = [&](int from, int left) {
    carriers.push_back(orbit_sum(g, ids));
    for (int h = from; h < g.subgroup_count(); ++h) {
      int size = g.order() / g.subgroup(h).order();
      if (size > left) continue;
      ids.push_back(h);
      rec(h, left - size);
      ids.pop_back();
    }
  };
  rec(0, cap);
  std::vector<oracle::RawBispan> classes;
  oracle::Raw ra = oracle::raw(alpha.domain()), rb = oracle::raw(beta.domain());
  for (const GSet& w : carriers) {
    oracle::Raw rw = oracle::raw(w);
    for (const auto& t : oracle::all_maps(rw, rb)) {
      for (const GSet& z : carriers) {
        oracle::Raw rz = oracle::raw(z);
        auto to_a = oracle::all_maps(rz, ra);
        auto to_w = oracle::all_maps(rz, rw);
        for (const auto& r : to_a)
          for (const auto& n : to_w) {
            bool over = true;
            for (int p = 0; p < z.size() && over; ++p) over = i(alpha(r[p])) == beta(t[n[p]]);
            if (!over) continue;
            oracle::RawBispan cand{z, w, r, n, t};
            bool seen = false;
            for (const auto& c : classes) seen = seen || oracle::bispan_iso(c, cand);
            if (!seen) classes.push_back(cand);
          }
      }
    }
  }
  return classes;
}

oracle::RawBispan raw_of(const BispanClass& c) {
  const Bispan& b = c.representative();
  return {b.top(), b.middle(), b.r().values(), b.n().values(), b.t().values()};
}

}  // namespace

TEST(KanNorm, EnumerationMatchesBruteForce) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  GSet pt = terminal(g);
  EquivariantMap i = terminal_map(free);
  Caps caps;
  caps.max_enum = 4;
  std::vector<std::pair<SliceObject, SliceObject>> cases = {
      {SliceObject::identity(free), SliceObject::identity(pt)},
      {SliceObject(codiagonal(free)), SliceObject::identity(pt)},
      {SliceObject::identity(free), SliceObject(terminal_map(free))},
  };
  for (const auto& [a, b] : cases) {
    LanEvaluation lan = lan_eval_representable(i, a, b, caps);
    auto brute = brute_classes(i, a, b, caps.max_enum);
    ASSERT_EQ(lan.classes.size(), brute.size());
    for (const auto& c : lan.classes) {
      bool hit = false;
      for (const auto& r : brute) hit = hit || oracle::bispan_iso(r, raw_of(c));
      EXPECT_TRUE(hit) << describe(c);
    }
    for (std::size_t k = 0; k < lan.classes.size(); ++k)
      EXPECT_EQ(lambda_map(i, a, lan.elements[k]), lan.classes[k]);
  }
}

TEST(KanNorm, EnumerationMatchesBruteForceOnOtherOrbits) {
  Caps caps;
  caps.max_enum = 4;
  for (OrbitMap m : {OrbitMap{"C3", 0}, OrbitMap{"S3", 4}, OrbitMap{"C4", 1}}) {
    EquivariantMap i = orbit_map(m);
    SliceObject a = SliceObject::identity(i.source());
    for (const SliceObject& b : {SliceObject::identity(i.target()), SliceObject(terminal_map(i.source()))}) {
      LanEvaluation lan = lan_eval_representable(i, a, b, caps);
      EXPECT_EQ(lan.classes.size(), brute_classes(i, a, b, caps.max_enum).size()) << m.group;
    }
  }
}

TEST(KanNorm, EnumerationContainsT) {
  for (const auto& m : kMaps) {
    EquivariantMap i = orbit_map(m);
    SliceObject a = SliceObject::identity(i.source());
    DependentProduct p = pi(i, a);
    LanEvaluation lan = lan_eval_representable(i, a, p.object());
    BispanClass t = t_component(i, a);
    EXPECT_TRUE(std::find(lan.classes.begin(), lan.classes.end(), t) != lan.classes.end()) << m.group;
  }
}

TEST(KanNorm, EnumerationIntoEmpty) {
  FiniteGroup g = builtin_group("C3");
  GSet free = make_orbit(g, 0);
  EquivariantMap i = terminal_map(free);
  LanEvaluation lan = lan_eval_representable(i, SliceObject::identity(free), SliceObject::empty(terminal(g)));
  ASSERT_EQ(lan.classes.size(), 1U);
  EXPECT_TRUE(lan.classes[0].is_zero());
}

TEST(KanNorm, EmptySourceGivesNaturalNumbers) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  EquivariantMap i = initial_map(free);
  SliceObject a = SliceObject::identity(initial(g));
  SliceObject b = SliceObject::identity(free);
  Caps caps;
  caps.max_enum = 6;
  LanEvaluation lan = lan_eval_representable(i, a, b, caps);
  // k copies of the free orbit over itself, k = 0..3
  ASSERT_EQ(lan.classes.size(), 4U);
  const BispanClass& zero = lan.classes.front();
  EXPECT_TRUE(zero.is_zero());
  for (const auto& c : lan.classes)
    for (const auto& d : lan.classes) {
      if (c.is_zero() && d.is_zero()) continue;
      EXPECT_FALSE(bispan_sum(c, d).is_zero());
    }
  BispanClass unit = lambda_map(i, a, eta_unit(i, a, identity_bispan(a.domain())));
  EXPECT_FALSE(unit.is_zero());
  EXPECT_EQ(unit.representative().middle().size(), 2);
}
