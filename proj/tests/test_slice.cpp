#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tambara/error.hpp"
#include "tambara/sample.hpp"

using namespace tambara;

namespace {

const char* kGroups[] = {"C2", "C3", "C4", "S3"};

struct Instance {
  EquivariantMap i;
  SliceObject alpha;
  SliceObject beta;
};

Instance sample(const FiniteGroup& g, Rng& rng) {
  GSet y = random_gset(g, rng, {2, 3, false});
  EquivariantMap i = random_over(y, rng, {2, 4, false});
  SliceObject alpha(random_over(i.source(), rng, {2, 4, true}));
  SliceObject beta(random_over(y, rng, {2, 4, true}));
  return {i, alpha, beta};
}

}  // namespace

TEST(Slice, PiOfFoldAlongFreeOrbit) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  EquivariantMap i = terminal_map(free);
  SliceObject fold(codiagonal(free));
  DependentProduct d = pi(i, fold);
  EXPECT_EQ(d.size(), 4);
  auto got = oracle::orbit_profile(oracle::raw(d.object().domain()));
  std::multiset<std::pair<int, int>> want{{1, 2}, {1, 2}, {2, 1}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(got, oracle::orbit_profile(oracle::sections(i, fold.structure())));
}

TEST(Slice, PiMatchesSectionEnumeration) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(21);
    for (int k = 0; k < 60; ++k) {
      Instance s = sample(g, rng);
      DependentProduct d = pi(s.i, s.alpha);
      auto want = oracle::sections(s.i, s.alpha.structure());
      EXPECT_EQ(d.size(), want.size);
      EXPECT_EQ(oracle::orbit_profile(oracle::raw(d.object().domain())), oracle::orbit_profile(want)) << name;
    }
  }
}

TEST(Slice, PiOfTerminalAndInitial) {
  FiniteGroup g = builtin_group("S3");
  GSet x = orbit_sum(g, {0, 2});
  Caps caps;
  caps.max_fiber = 9;
  EquivariantMap i = terminal_map(x);
  EXPECT_EQ(pi(i, SliceObject::identity(x), caps).size(), 1);
  EXPECT_EQ(pi(i, SliceObject::empty(x), caps).size(), 0);
  caps.max_fiber = 8;
  EXPECT_THROW(pi(i, SliceObject::identity(x), caps), Error);
}

TEST(Slice, RestrictAlongFreeOrbit) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  GSet two = orbit_sum(g, {1, 1});
  Restriction r = restrict(terminal_map(free), SliceObject(terminal_map(two)));
  EXPECT_EQ(r.object.domain().size(), 4);
  EXPECT_EQ(r.object.domain().orbit_count(), 2);
  EXPECT_EQ(r.object.anchor(), free);
}

TEST(Slice, CounitIndAtIdentityIsTheMap) {
  FiniteGroup g = builtin_group("C3");
  GSet free = make_orbit(g, 0);
  EquivariantMap i = terminal_map(free);
  AdjunctionCell c = adjunction_cell(CellKind::CounitInd, i, SliceObject::identity(i.target()));
  EXPECT_EQ(c.cell.underlying().values(), i.values());
}

TEST(Slice, HomSetBijectionCounts) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(5);
    for (int k = 0; k < 40; ++k) {
      Instance s = sample(g, rng);
      SliceObject sa = sigma(s.i, s.alpha);
      Restriction rb = restrict(s.i, s.beta);
      DependentProduct pa = pi(s.i, s.alpha);
      long long lhs1 = oracle::count_maps_over(sa.structure(), s.beta.structure());
      long long rhs1 = oracle::count_maps_over(s.alpha.structure(), rb.object.structure());
      long long lhs2 = oracle::count_maps_over(rb.object.structure(), s.alpha.structure());
      long long rhs2 = oracle::count_maps_over(s.beta.structure(), pa.object().structure());
      EXPECT_EQ(lhs1, rhs1) << name;
      EXPECT_EQ(lhs2, rhs2) << name;
      EXPECT_EQ(count_maps_over(sa.structure(), s.beta.structure()), lhs1);
    }
  }
}

TEST(Slice, AdjunctsRoundTrip) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(8);
    for (int k = 0; k < 25; ++k) {
      Instance s = sample(g, rng);
      SliceObject sa = sigma(s.i, s.alpha);
      for_each_map_over(sa.structure(), s.beta.structure(), [&](const EquivariantMap& m) {
        SliceMap f = SliceMap::make(sa, s.beta, m);
        SliceMap back = ind_coadjunct(s.i, s.alpha, s.beta, ind_adjunct(s.i, s.alpha, s.beta, f));
        EXPECT_EQ(back.underlying(), m);
        return true;
      });
      Restriction rb = restrict(s.i, s.beta);
      for_each_map_over(rb.object.structure(), s.alpha.structure(), [&](const EquivariantMap& m) {
        SliceMap h = SliceMap::make(rb.object, s.alpha, m);
        SliceMap back = coind_coadjunct(s.i, s.beta, s.alpha, coind_adjunct(s.i, s.beta, s.alpha, h));
        EXPECT_EQ(back.underlying(), m);
        return true;
      });
    }
  }
}

TEST(Slice, TriangleIdentities) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(13);
    for (int k = 0; k < 30; ++k) {
      Instance s = sample(g, rng);
      // induction: eps_{Sigma a} o Sigma(eta_a) = id
      AdjunctionCell eta = adjunction_cell(CellKind::UnitInd, s.i, s.alpha);
      AdjunctionCell eps = adjunction_cell(CellKind::CounitInd, s.i, sigma(s.i, s.alpha));
      EXPECT_EQ(compose(eps.cell, sigma_map(s.i, eta.cell)).underlying(),
                EquivariantMap::identity(s.alpha.domain()));
      // coinduction: Pi(eps_a) o eta_{Pi a} = id
      DependentProduct pa = pi(s.i, s.alpha);
      AdjunctionCell u = adjunction_cell(CellKind::UnitCoind, s.i, pa.object());
      AdjunctionCell c = adjunction_cell(CellKind::CounitCoind, s.i, s.alpha);
      DependentProduct pr = pi(s.i, c.cell.from());
      EXPECT_EQ(compose(pi_map(pr, pa, c.cell), u.cell).underlying(), EquivariantMap::identity(pa.object().domain()));
      // eps_{i* b} o i*(eta_b) = id
      AdjunctionCell ub = adjunction_cell(CellKind::UnitCoind, s.i, s.beta);
      Restriction rb = restrict(s.i, s.beta);
      Restriction rt = restrict(s.i, ub.cell.to());
      AdjunctionCell cb = adjunction_cell(CellKind::CounitCoind, s.i, rb.object);
      EXPECT_EQ(compose(cb.cell, restrict_map(rb, rt, ub.cell)).underlying(),
                EquivariantMap::identity(rb.object.domain()));
    }
  }
}

TEST(Slice, DistributorCommutes) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(17);
    for (int k = 0; k < 40; ++k) {
      GSet z = random_gset(g, rng, {2, 3, false});
      EquivariantMap gm = random_over(z, rng, {2, 4, false});
      EquivariantMap f = random_over(gm.source(), rng, {2, 4, true});
      Distributor d = distributor(f, gm);
      const SliceObject& corner = d.corner.object;
      for (int q = 0; q < corner.domain().size(); ++q) {
        EXPECT_EQ(f(d.eps(q)), corner(q));
        EXPECT_EQ(d.pi_g_f.object()(d.pulled(q)), gm(corner(q)));
      }
      EXPECT_TRUE(is_cartesian(d.pulled, corner.structure(), d.pi_g_f.object().structure(), gm));
    }
  }
}

TEST(Slice, SplitReassembles) {
  FiniteGroup g = builtin_group("C2");
  Coproduct c = coproduct(terminal(g), make_orbit(g, 0));
  Rng rng(4);
  for (int k = 0; k < 30; ++k) {
    SliceObject gamma(random_over(c.object, rng, {3, 6, true}));
    SliceSplit sp = slice_split(c.inj1, c.inj2, gamma);
    EXPECT_EQ(sp.left.object.domain().size() + sp.right.object.domain().size(), gamma.domain().size());
    EXPECT_TRUE(is_iso(sp.reassembly.forward));
    EXPECT_EQ(sp.reassembly.forward.target(), gamma.domain());
  }
  EXPECT_THROW(slice_split(c.inj1, c.inj1, SliceObject::identity(c.object)), Error);
}

TEST(Slice, FiberEquivalenceRoundTrip) {
  for (const char* name : kGroups) {
    FiniteGroup g = builtin_group(name);
    Rng rng(23);
    for (int h = 0; h < g.subgroup_count(); ++h) {
      GSet base = make_orbit(g, h);
      for (int k = 0; k < 5; ++k) {
        SliceObject beta(random_over(base, rng, {3, 6, true}));
        FiberData fd = fiber_equivalence(beta);
        EXPECT_EQ(fd.fiber.size() * base.size(), beta.domain().size());
        SliceObject back = induce_fiber(base, fd, fd.fiber);
        EXPECT_TRUE(find_slice_iso(back, beta).has_value()) << name;
      }
    }
  }
  FiniteGroup c2 = builtin_group("C2");
  EXPECT_THROW(fiber_equivalence(SliceObject::identity(orbit_sum(c2, {1, 1}))), Error);
}
