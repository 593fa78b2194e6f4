#include <gtest/gtest.h>

#include "io.hpp"
#include "tambara/error.hpp"
#include "tambara/sample.hpp"

using namespace tambara;
using io::Json;

namespace {

const std::filesystem::path kData = TAMBARA_TEST_DATA;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::MalformedSpec;
}

}  // namespace

TEST(Io, GroupsRoundTrip) {
  io::Loader ld;
  for (const char* n : {"C1", "C4", "S3", "D4", "Q8"}) {
    FiniteGroup g = builtin_group(n);
    EXPECT_EQ(ld.group(io::to_json(g)), g) << n;
  }
  FiniteGroup custom = FiniteGroup::from_table("V4", {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  Json j = io::to_json(custom);
  EXPECT_TRUE(j.contains("table"));
  EXPECT_EQ(ld.group(j), custom);
  Json gens = {{"name", "S3p"}, {"degree", 3}, {"generators", {{1, 0, 2}, {1, 2, 0}}}};
  EXPECT_EQ(ld.group(gens).order(), 6);
}

TEST(Io, SampledObjectsRoundTrip) {
  Rng rng(11);
  for (const char* n : {"C2", "C4", "S3", "Q8"}) {
    FiniteGroup g = builtin_group(n);
    for (int k = 0; k < 10; ++k) {
      io::Loader ld;
      GSet x = random_gset(g, rng, {2, 4, true}), y = random_gset(g, rng, {2, 4, false});
      EXPECT_EQ(ld.gset(io::to_json(x)), x);
      EquivariantMap f = random_over(y, rng, {3, 6, true});
      EXPECT_EQ(ld.map(io::to_json(f)), f);
      SliceObject a(f);
      EXPECT_EQ(ld.slice_object(io::to_json(a)), a);
      SpanClass s = random_span(x, y, rng, {2, 4, true});
      EXPECT_EQ(ld.span(io::to_json(s)), s);
      BispanClass b = random_bispan(x, y, rng, {2, 3, true}, {2, 3, true});
      EXPECT_EQ(ld.bispan(io::to_json(b)), b);
      MackeyValue v = burnside_value(f);
      EXPECT_EQ(ld.mackey_value(io::to_json(v)), v);
      TambaraValue t(b);
      EXPECT_EQ(ld.tambara_value(io::to_json(t)), t);
    }
  }
}

TEST(Io, RelationsRoundTrip) {
  io::Loader ld;
  FiniteGroup g = builtin_group("S3");
  for (const auto& o : {TransferRelation::trivial(g), TransferRelation::complete(g)})
    EXPECT_EQ(ld.relation(io::to_json(o)), o);
  TransferRelation c = ld.relation(Json((kData / "relation_c2_complete.json").string()));
  EXPECT_EQ(c, TransferRelation::complete(builtin_group("C2")));
}

TEST(Io, FilesResolveRelativeToTheirDirectory) {
  io::Loader ld;
  FiniteGroup c2 = builtin_group("C2");
  GSet free = make_orbit(c2, 0);
  EquivariantMap i = ld.map(Json((kData / "free_to_pt.json").string()));
  EXPECT_EQ(i, terminal_map(free));
  SpanClass t = ld.span(Json((kData / "span_transfer.json").string()));
  EXPECT_EQ(t, t_of(terminal_map(free)));
  BispanClass n = ld.bispan(Json((kData / "bispan_norm.json").string()));
  EXPECT_EQ(n, bn_of(terminal_map(free)));
}

TEST(Io, ActionFromGeneratorsIsClosed) {
  io::Loader ld;
  FiniteGroup c4 = builtin_group("C4");
  // element 1 generates C4
  Json j = {{"group", "C4"}, {"size", 4}, {"action", {{"1", {1, 2, 3, 0}}}}};
  GSet x = ld.gset(j);
  EXPECT_EQ(x.orbit_count(), 1);
  EXPECT_EQ(x.act(2, 0), 2);
}

TEST(Io, MalformedInputs) {
  io::Loader ld;
  EXPECT_EQ(kind_of([&] { ld.gset(Json{{"group", "C2"}}); }), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([&] { ld.gset(Json{{"group", "C2"}, {"size", 2}, {"action", {{"7", {1, 0}}}}}); }),
            ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([&] { ld.gset(Json{{"group", "C4"}, {"size", 2}, {"action", {{"2", {1, 0}}}}}); }),
            ErrorKind::MalformedSpec);
  // the generator of C2 must square to the identity
  EXPECT_EQ(kind_of([&] { ld.gset(Json{{"group", "C2"}, {"size", 3}, {"action", {{"1", {1, 2, 0}}}}}); }),
            ErrorKind::NotAnAction);
  EXPECT_EQ(kind_of([&] { ld.gset(Json("does-not-exist.json")); }), ErrorKind::MalformedSpec);
  Json bad_map = {{"source", {{"group", "C2"}, {"size", 2}, {"action", {{"1", {1, 0}}}}}},
                  {"target", {{"group", "C2"}, {"size", 2}, {"action", {{"1", {0, 1}}}}}},
                  {"values", {0, 1}}};
  EXPECT_EQ(kind_of([&] { ld.map(bad_map); }), ErrorKind::NotEquivariant);
  EXPECT_EQ(kind_of([&] { ld.relation(Json{{"group", "C2"}, {"admissible", {{0, 5}}}}); }), ErrorKind::NotASubgroup);
}
