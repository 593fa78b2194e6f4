#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tambara/error.hpp"
#include "tambara/indexing.hpp"
#include "tambara/sample.hpp"

using namespace tambara;

namespace {

// Counts relations by scanning every subset of proper pairs and checking the
// closure conditions on element masks directly.
int brute_transfer_count(const FiniteGroup& g) {
  const auto& subs = g.subgroup_list();
  int n = static_cast<int>(subs.size());
  auto id_of = [&](ElemMask m) {
    for (int k = 0; k < n; ++k)
      if (subs[k].mask == m) return k;
    return -1;
  };
  auto conj = [&](ElemMask m, Elem e) {
    ElemMask out = 0;
    for (int a = 0; a < g.order(); ++a)
      if ((m >> a) & 1ULL) out |= 1ULL << g.mul(g.mul(e, a), g.inverse(e));
    return out;
  };
  std::vector<std::pair<int, int>> proper;
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      if (h != k && (subs[h].mask & ~subs[k].mask) == 0) proper.emplace_back(h, k);
  int count = 0;
  for (unsigned long long bits = 0; bits < (1ULL << proper.size()); ++bits) {
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int h = 0; h < n; ++h) rel[h][h] = 1;
    for (std::size_t t = 0; t < proper.size(); ++t)
      if ((bits >> t) & 1ULL) rel[proper[t].first][proper[t].second] = 1;
    bool ok = true;
    for (int h = 0; h < n && ok; ++h)
      for (int k = 0; k < n && ok; ++k) {
        if (!rel[h][k]) continue;
        for (Elem e = 0; e < g.order() && ok; ++e) ok = rel[id_of(conj(subs[h].mask, e))][id_of(conj(subs[k].mask, e))];
        for (int l = 0; l < n && ok; ++l) {
          if ((subs[l].mask & ~subs[k].mask) == 0) ok = rel[id_of(subs[h].mask & subs[l].mask)][l];
          if (ok && rel[k][l]) ok = rel[h][l];
        }
      }
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Indexing, MembershipOfMaps) {
  FiniteGroup g = builtin_group("C2");
  GSet free = make_orbit(g, 0);
  TransferRelation triv = TransferRelation::trivial(g);
  EXPECT_FALSE(contains_map(triv, terminal_map(free)));
  EXPECT_TRUE(contains_map(triv, codiagonal(free)));
  EXPECT_TRUE(contains_map(triv, codiagonal(orbit_sum(g, {0, 1}))));
  EXPECT_TRUE(contains_map(triv, EquivariantMap::identity(free)));
}

TEST(Indexing, TransferCountsMatchSubsetScan) {
  for (const char* name : {"C1", "C2", "C3", "C4", "C5", "C6", "S3", "Q8"}) {
    FiniteGroup g = builtin_group(name);
    EXPECT_EQ(static_cast<int>(enumerate_transfer_relations(g).size()), brute_transfer_count(g)) << name;
  }
  EXPECT_EQ(enumerate_transfer_relations(builtin_group("C1")).size(), 1u);
  EXPECT_EQ(enumerate_transfer_relations(builtin_group("C2")).size(), 2u);
  EXPECT_THROW(enumerate_transfer_relations(builtin_group("C30")), Error);
}

TEST(Indexing, EnumeratedRelationsValidate) {
  for (const char* name : {"C2", "C3", "C4", "S3"}) {
    FiniteGroup g = builtin_group(name);
    auto all = enumerate_transfer_relations(g);
    EXPECT_EQ(all.front(), TransferRelation::trivial(g));
    EXPECT_EQ(all.back(), TransferRelation::complete(g));
    for (const auto& r : all) {
      EXPECT_FALSE(transfer_axiom_violation(r).has_value());
      Certificate c = validate_indexing(r);
      EXPECT_TRUE(c.pass) << name << ": " << c.witness;
      EXPECT_TRUE(r.subset_of(all.back()));
      EXPECT_TRUE(all.front().subset_of(r));
      for (const auto& s : all) EXPECT_FALSE(transfer_axiom_violation(r.intersect(s)).has_value());
    }
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) EXPECT_FALSE(all[a].subset_of(all[b]) && !(all[a] == all[b]));
  }
}

TEST(Indexing, MissingRestrictionFailsWithPullback) {
  FiniteGroup g = builtin_group("C4");
  // subgroups: e, C2, C4
  std::vector<std::pair<int, int>> p{{0, 0}, {1, 1}, {2, 2}, {0, 2}};
  TransferRelation bad(g, p);
  ASSERT_TRUE(transfer_axiom_violation(bad).has_value());
  Certificate c = validate_indexing(bad);
  EXPECT_FALSE(c.pass);
  EXPECT_NE(c.witness.find("pullback"), std::string::npos);
}

TEST(Indexing, CompatibilityExtremes) {
  for (const char* name : {"C2", "C3", "S3"}) {
    FiniteGroup g = builtin_group(name);
    for (const auto& r : enumerate_transfer_relations(g)) {
      EXPECT_TRUE(is_compatible_pair(r, TransferRelation::trivial(g)).pass) << name;
      EXPECT_TRUE(is_compatible_pair(TransferRelation::complete(g), r).pass) << name;
    }
  }
}

TEST(Indexing, CompatibilityIsNotSymmetric) {
  FiniteGroup g = builtin_group("C4");
  auto all = enumerate_transfer_relations(g);
  bool found = false;
  for (const auto& a : all)
    for (const auto& m : all)
      if (is_compatible_pair(a, m).pass && !is_compatible_pair(m, a).pass) found = true;
  EXPECT_TRUE(found);
}

TEST(Indexing, SeparableWithComplement) {
  FiniteGroup g = builtin_group("C2");
  auto s = split_section(terminal_map(make_orbit(g, 0)));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->complement.object.size(), 3);
  std::multiset<std::pair<int, int>> want{{1, 2}, {2, 1}};
  EXPECT_EQ(oracle::orbit_profile(oracle::raw(s->complement.object)), want);
  for (const auto& name : builtin_group_names()) {
    FiniteGroup h = builtin_group(name);
    IndexPair full{TransferRelation::complete(h), TransferRelation::complete(h)};
    Caps caps;
    caps.max_points = 1 << 17;
    Certificate c = is_separable(full, {}, caps);
    EXPECT_TRUE(c.pass) << name << ": " << c.witness;
    EXPECT_EQ(c.skipped, 0) << name;
    IndexPair triv{TransferRelation::trivial(h), TransferRelation::trivial(h)};
    EXPECT_TRUE(is_separable(triv).pass);
  }
}

TEST(Indexing, SliceIndex) {
  FiniteGroup g = builtin_group("C2");
  IndexPair triv{TransferRelation::trivial(g), TransferRelation::trivial(g)};
  GSet free = make_orbit(g, 0);
  GSet pt = terminal(g);
  SlicedIndex s = slice_index(triv, pt);
  // the object free -> pt is not in O, but its identity is in O/pt
  SliceObject a(terminal_map(free));
  EXPECT_TRUE(s.additive(SliceMap::identity(a)));
  EXPECT_TRUE(s.compatible().pass);
  IndexPair mixed{TransferRelation::complete(g), TransferRelation::trivial(g)};
  EXPECT_TRUE(slice_index(mixed, free).compatible().pass);
}
