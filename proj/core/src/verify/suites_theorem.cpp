#include <algorithm>
#include <functional>
#include <set>

#include "suites.hpp"
#include "tambara/error.hpp"
#include "tambara/functors.hpp"
#include "tambara/indexing.hpp"
#include "tambara/kan_norm.hpp"

namespace tambara::suites {

namespace {

std::string where(const FiniteGroup& g, const std::string& what) { return g.name() + ": " + what; }

struct OrbitMap {
  std::string group;
  int subgroup;
};

// G/H -> G/G.
const std::vector<OrbitMap>& orbit_maps() {
  static const std::vector<OrbitMap> m = {{"C2", 0}, {"C3", 0}, {"C4", 1}, {"S3", 1}, {"S3", 4}};
  return m;
}

EquivariantMap orbit_map(const OrbitMap& m) { return terminal_map(make_orbit(group_named(m.group), m.subgroup)); }

std::string label(const OrbitMap& m) {
  return m.group + "/" + subgroup_label(group_named(m.group), m.subgroup) + " -> pt";
}

const Shape kSmall{2, 4, true};

SliceObject random_object(const GSet& x, Rng& rng, const Shape& sh) { return SliceObject(random_over(x, rng, sh)); }

using OrbitBody = std::function<Verdict(const OrbitMap&, const EquivariantMap&, Rng&, const Shape&, const Caps&)>;

// per_map seeded cases for each orbit map; case k runs on map k % 5.
Check per_orbit_map(std::string name, int per_map, OrbitBody body) {
  Check c;
  c.name = std::move(name);
  c.cases = per_map * static_cast<int>(orbit_maps().size());
  c.run = [body = std::move(body)](const CaseContext& ctx) {
    const OrbitMap& m = orbit_maps()[ctx.index % orbit_maps().size()];
    Rng rng(ctx.seed);
    return body(m, orbit_map(m), rng, shrunk(kSmall, ctx.shrink), ctx.caps);
  };
  return c;
}

struct LanCase {
  OrbitMap map;
  SliceObject alpha;
  SliceObject beta;
};

std::vector<LanCase> lan_cases() {
  std::vector<LanCase> out;
  for (const auto& m : orbit_maps()) {
    EquivariantMap i = orbit_map(m);
    for (const auto& a : objects_over(i.source(), 3))
      for (const auto& b : objects_over(i.target(), 3)) out.push_back({m, SliceObject(a), SliceObject(b)});
  }
  return out;
}

std::string describe_case(const LanCase& c) {
  return label(c.map) + ", alpha " + describe(c.alpha.domain()) + ", beta " + describe(c.beta.domain());
}

// Carriers up to iso with at most cap points.
std::vector<GSet> carriers(const FiniteGroup& g, int cap) {
  std::vector<int> reps;
  for (const auto& cls : g.conjugacy_classes()) reps.push_back(cls.front());
  std::vector<GSet> out;
  std::vector<int> ids;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    out.push_back(orbit_sum(g, ids));
    for (std::size_t k = from; k < reps.size(); ++k) {
      int size = g.order() / g.subgroup(reps[k]).order();
      if (size > left) continue;
      ids.push_back(reps[k]);
      rec(k, left - size);
      ids.pop_back();
    }
  };
  rec(0, cap);
  return out;
}

// Bispan classes Sigma alpha -> beta over y found by trying every pair of
// carriers and every triple of maps.
std::set<BispanKey> naive_classes(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta, int cap) {
  const FiniteGroup& g = i.source().group();
  auto objs = carriers(g, cap);
  std::set<BispanKey> out;
  for (const GSet& w : objs)
    for_each_map(w, beta.domain(), [&](const EquivariantMap& t) {
      EquivariantMap down = compose(beta.structure(), t);
      for (const GSet& z : objs)
        for_each_map(z, alpha.domain(), [&](const EquivariantMap& r) {
          EquivariantMap across = compose(i, compose(alpha.structure(), r));
          for_each_map_over(across, down, [&](const EquivariantMap& n) {
            out.insert(BispanClass(Bispan::make(r, n, t)).key());
            return true;
          });
          return true;
        });
      return true;
    });
  return out;
}

bool terms_included(const MackeyValue& part, const MackeyValue& whole) {
  std::vector<SpanKey> a, b;
  for (const auto& t : part.terms()) a.push_back(t.key());
  for (const auto& t : whole.terms()) b.push_back(t.key());
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<BispanClass> bispan_in(const IndexPair& o, const GSet& x, const GSet& y, Rng& rng) {
  for (int t = 0; t < 12; ++t) {
    BispanClass b = random_bispan(x, y, rng, {2, 3, true}, {2, 3, true});
    if (in_subcategory_u(o, b)) return b;
  }
  return std::nullopt;
}

struct IndexCase {
  std::string group;
  TransferRelation relation;
};

std::vector<IndexCase> index_cases() {
  std::vector<IndexCase> out;
  for (const auto& n : law_groups())
    for (const auto& r : relations_of(n)) out.push_back({n, r});
  return out;
}

struct PairCase {
  std::string group;
  IndexPair pair;
};

std::vector<PairCase> compatible_pairs() {
  std::vector<PairCase> out;
  for (const auto& n : law_groups()) {
    const auto& rels = relations_of(n);
    for (const auto& a : rels)
      for (const auto& m : rels)
        if (is_compatible_pair(a, m).pass) out.push_back({n, IndexPair{a, m}});
  }
  return out;
}

const std::vector<PairCase>& cached_pairs() {
  static const std::vector<PairCase> p = compatible_pairs();
  return p;
}

// Epimorphisms between window objects of at most two orbits.
struct EpiCase {
  EquivariantMap i;
};

std::vector<EpiCase> window_epis() {
  std::vector<EpiCase> out;
  for (const auto& [x, y] : window_pairs(law_groups(), 2)) {
    int seen = 0;
    for_each_map(x, y, [&](const EquivariantMap& f) {
      if (is_epi(f)) out.push_back({f});
      return ++seen < 6;
    });
  }
  return out;
}

CompletedValue random_completed(const GSet& level, Rng& rng, const Shape& sh) {
  return CompletedValue(SliceObject(random_over(level, rng, sh)), SliceObject(random_over(level, rng, sh)));
}

// The orbit map whose empty source gives a value without inverses.
EquivariantMap empty_into_free() {
  const FiniteGroup& g = group_named("C2");
  return initial_map(make_orbit(g, 0));
}

}  // namespace

std::vector<Check> indexing_axioms() {
  std::vector<Check> out;

  out.push_back(exhaustive<IndexCase>("relations-validate", index_cases(), [](const IndexCase& c, const Caps&) -> Verdict {
    if (auto v = transfer_axiom_violation(c.relation)) return c.group + ": " + *v;
    Certificate cert = validate_indexing(c.relation);
    if (!cert.pass) return c.group + ": " + cert.witness;
    return std::nullopt;
  }));

  out.push_back(exhaustive<std::string>("relation-lattice", law_groups(), [](const std::string& n, const Caps&) -> Verdict {
    const auto& rels = relations_of(n);
    const FiniteGroup& g = group_named(n);
    if (!(rels.front() == TransferRelation::trivial(g))) return n + ": least relation is not the trivial one";
    if (!(rels.back() == TransferRelation::complete(g))) return n + ": greatest relation is not the complete one";
    for (const auto& a : rels) {
      if (!rels.front().subset_of(a) || !a.subset_of(rels.back())) return n + ": relation outside the extremes";
      for (const auto& b : rels) {
        TransferRelation m = a.intersect(b);
        if (auto v = transfer_axiom_violation(m)) return n + ": intersection is not a relation: " + *v;
        if (!m.subset_of(a) || !m.subset_of(b)) return n + ": intersection not below both";
      }
    }
    return std::nullopt;
  }));

  out.push_back(sampled("compatible-pairs-closed", law_groups(), 30, Shape{},
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          std::vector<IndexPair> pairs;
                          for (const auto& p : cached_pairs())
                            if (p.group == g.name()) pairs.push_back(p.pair);
                          const IndexPair& o = rng.pick(pairs);
                          GSet x = random_gset(g, rng, {2, 3, false}), y = random_gset(g, rng, {2, 3, false}),
                               z = random_gset(g, rng, {2, 3, false});
                          auto b1 = bispan_in(o, x, y, rng);
                          auto b2 = bispan_in(o, y, z, rng);
                          if (!b1 || !b2) return std::nullopt;
                          BispanClass c = bispan_compose(*b2, *b1, caps);
                          if (!in_subcategory_u(o, c)) return where(g, "composite leaves U(C,O): " + describe(c));
                          return std::nullopt;
                        }));

  out.push_back(exhaustive<PairCase>("slice-index-compatible", cached_pairs(), [](const PairCase& c, const Caps& caps) -> Verdict {
    for (const GSet& x : window_objects(group_named(c.group), 1)) {
      Certificate cert = slice_index(c.pair, x).compatible({2, 1}, caps);
      if (!cert.pass) return c.group + ": slice over " + describe(x) + ": " + cert.witness;
    }
    return std::nullopt;
  }));

  out.push_back(sampled("orbit-slice-is-stabilizer-sets", law_groups(), 20, Shape{3, 6, true},
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          GSet base = make_orbit(g, rng.below(g.subgroup_count()));
                          SliceObject beta(random_over(base, rng, sh));
                          FiberData fd = fiber_equivalence(beta);
                          if (fd.fiber.size() * base.size() != beta.domain().size())
                            return where(g, "fiber size does not divide evenly");
                          if (!find_slice_iso(induce_fiber(base, fd, fd.fiber), beta))
                            return where(g, "inducing the fiber does not recover " + describe(beta.domain()));
                          return std::nullopt;
                        }));

  out.push_back(sampled("sum-induced-on-spans", law_groups(), 30, kSmall,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          SliceObject a2(random_over(s.i.source(), rng, sh));
                          SliceObject a3(random_over(s.i.source(), rng, sh));
                          SpanClass s1 = random_span_over(s.alpha, a2, rng, sh);
                          SpanClass s2 = random_span_over(a2, a3, rng, sh);
                          SpanClass lhs = map_span_sigma(s.i, span_compose(s2, s1));
                          SpanClass rhs = span_compose(map_span_sigma(s.i, s2), map_span_sigma(s.i, s1));
                          if (lhs != rhs) return where(g, "Sigma does not preserve span composition");
                          if (!span_is_over(rhs, sigma(s.i, s.alpha), sigma(s.i, a3)))
                            return where(g, "Sigma image not over y");
                          for (const auto& o : relations_of(g.name()))
                            if (in_subcategory(o, s1) && !in_subcategory(o, map_span_sigma(s.i, s1)))
                              return where(g, "Sigma leaves the index");
                          return std::nullopt;
                        }));

  out.push_back(per_orbit_map("pi-induced-on-spans", 20,
                              [](const OrbitMap& m, const EquivariantMap& i, Rng& rng, const Shape& sh,
                                 const Caps& caps) -> Verdict {
                                SliceObject a = random_object(i.source(), rng, sh), b = random_object(i.source(), rng, sh),
                                            c = random_object(i.source(), rng, sh);
                                SpanClass s1 = random_span_over(a, b, rng, sh), s2 = random_span_over(b, c, rng, sh);
                                SpanClass lhs = map_span_pi(i, a, c, span_compose(s2, s1), caps);
                                SpanClass rhs =
                                    span_compose(map_span_pi(i, b, c, s2, caps), map_span_pi(i, a, b, s1, caps));
                                if (lhs != rhs) return label(m) + ": Pi does not preserve span composition";
                                SpanClass id = map_span_pi(i, a, a, identity_span(a.domain()), caps);
                                if (id != identity_span(pi(i, a, caps).object().domain()))
                                  return label(m) + ": Pi does not preserve identities";
                                return std::nullopt;
                              }));

  out.push_back(sampled("sum-induced-on-bispans", law_groups(), 20, kSmall,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          SliceObject a2(random_over(s.i.source(), rng, sh));
                          SliceObject a3(random_over(s.i.source(), rng, sh));
                          BispanClass b1 = random_bispan_over(s.alpha, a2, rng, sh, sh);
                          BispanClass b2 = random_bispan_over(a2, a3, rng, sh, sh);
                          BispanClass lhs = map_bispan(s.i, bispan_compose(b2, b1, caps));
                          BispanClass rhs = bispan_compose(map_bispan(s.i, b2), map_bispan(s.i, b1), caps);
                          if (lhs != rhs) return where(g, "Sigma does not preserve bispan composition");
                          if (!bispan_is_over(rhs, sigma(s.i, s.alpha), sigma(s.i, a3)))
                            return where(g, "Sigma image not over y");
                          return std::nullopt;
                        }));

  Check broken;
  broken.name = "broken-relation-rejected";
  broken.cases = 1;
  broken.negative = true;
  broken.max_shrink = 0;
  broken.run = [](const CaseContext&) -> Verdict {
    const FiniteGroup& g = group_named("C4");
    // e -> C4 admitted without e -> C2
    TransferRelation bad(g, {{0, 0}, {1, 1}, {2, 2}, {0, 2}});
    Certificate cert = validate_indexing(bad);
    if (!cert.pass) return "C4 relation {e <= C4} rejected: " + cert.witness;
    return std::nullopt;
  };
  out.push_back(broken);

  return out;
}

std::vector<Check> separability_mazur() {
  std::vector<Check> out;

  out.push_back(exhaustive<std::string>("indices-separable", builtin_group_names(), [](const std::string& n, const Caps& caps) -> Verdict {
    const FiniteGroup& g = group_named(n);
    Caps wide = caps;
    wide.max_points = std::max(caps.max_points, 1 << 17);
    Certificate full = is_separable({TransferRelation::complete(g), TransferRelation::complete(g)}, {}, wide);
    if (!full.pass) return n + ": complete index not separable: " + full.witness;
    if (full.skipped) return n + ": " + std::to_string(full.skipped) + " instances over the caps";
    Certificate triv = is_separable({TransferRelation::trivial(g), TransferRelation::trivial(g)}, {}, wide);
    if (!triv.pass) return n + ": trivial index not separable: " + triv.witness;
    return std::nullopt;
  }));

  out.push_back(sampled("norm-summand-sampled", law_groups(), 30, Shape{2, 3, true},
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          GSet y = random_gset(g, rng, {1, 3, false});
                          EquivariantMap i = random_over(y, rng, {2, 3, false});
                          MackeyValue a = burnside_value(random_over(i.source(), rng, sh));
                          MackeyValue b = burnside_value(random_over(i.source(), rng, sh));
                          if (!terms_included(burnside_norm(i, a, caps), burnside_norm(i, mackey_add(a, b), caps)))
                            return where(g, "N(a) is not a summand of N(a + b)");
                          return std::nullopt;
                        }));

  out.push_back(exhaustive<EpiCase>("norm-summand-window", window_epis(), [](const EpiCase& c, const Caps& caps) -> Verdict {
    auto vals = objects_over(c.i.source(), 2);
    for (const auto& a : vals)
      for (const auto& b : vals) {
        MackeyValue va = burnside_value(a), vb = burnside_value(b);
        if (!terms_included(burnside_norm(c.i, va, caps), burnside_norm(c.i, mackey_add(va, vb), caps)))
          return "N(a) is not a summand of N(a + b) along " + describe(c.i.source()) + " -> " + describe(c.i.target());
      }
    return std::nullopt;
  }));

  out.push_back(sampled("mazur-formula", law_groups(), 30, Shape{2, 4, true},
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          GSet y = random_gset(g, rng, {1, 3, false});
                          EquivariantMap i = random_over(y, rng, {2, 3, false});
                          CompletedValue a = random_completed(i.source(), rng, sh),
                                         b = random_completed(i.source(), rng, sh);
                          auto m = mazur_split(i, a, b, caps);
                          if (!m) return where(g, "no split section");
                          if (m->norm_sum != completed_add(m->norm_a, m->other))
                            return where(g, "N(a + b) differs from N(a) + rest");
                          if (m->norm_sum != completed_norm(i, completed_add(a, b)))
                            return where(g, "split norm differs from the marks norm");
                          return std::nullopt;
                        }));

  Check minus_one;
  minus_one.name = "norm-of-minus-one";
  minus_one.cases = 1;
  minus_one.max_shrink = 0;
  minus_one.run = [](const CaseContext&) -> Verdict {
    const FiniteGroup& g = group_named("C2");
    GSet free = make_orbit(g, 0);
    GSet pt = terminal(g);
    CompletedValue one = group_complete(burnside_value(EquivariantMap::identity(free)));
    CompletedValue n = completed_norm(terminal_map(free), completed_neg(one));
    CompletedValue want(SliceObject(terminal_map(free)), SliceObject::identity(pt));
    if (n != want) return "N(-1) = " + describe(n) + ", expected [C2/e] - [pt]";
    return std::nullopt;
  };
  out.push_back(minus_one);

  return out;
}

std::vector<Check> main_theorem() {
  std::vector<Check> out;

  out.push_back(exhaustive<LanCase>("key-lemma", lan_cases(), [](const LanCase& c, const Caps& caps) -> Verdict {
    EquivariantMap i = orbit_map(c.map);
    LanEvaluation lan = lan_eval_representable(i, c.alpha, c.beta, caps);
    for (const auto& phi : lan.classes) {
      SigmaData d = sigma_decompose(i, c.alpha, c.beta, phi);
      if (!key_lemma_check(i, c.alpha, d, caps)) return describe_case(c) + ": key lemma fails on " + describe(phi);
      if (reassemble(i, d) != phi) return describe_case(c) + ": decomposition does not reassemble " + describe(phi);
    }
    return std::nullopt;
  }));

  out.push_back(per_orbit_map("t-naturality", 100,
                              [](const OrbitMap& m, const EquivariantMap& i, Rng& rng, const Shape& sh,
                                 const Caps& caps) -> Verdict {
                                SliceObject a = random_object(i.source(), rng, sh), b = random_object(i.source(), rng, sh);
                                SpanClass phi = random_span_over(a, b, rng, sh);
                                BispanClass left = bispan_compose(t_component(i, b, caps),
                                                                  embed_span(map_span_sigma(i, phi)), caps);
                                BispanClass right = bispan_compose(embed_span(map_span_pi(i, a, b, phi, caps)),
                                                                   t_component(i, a, caps), caps);
                                if (left != right) return label(m) + ": t not natural at " + describe(phi);
                                return std::nullopt;
                              }));

  out.push_back(per_orbit_map("omega-round-trip", 60,
                              [](const OrbitMap& m, const EquivariantMap& i, Rng& rng, const Shape& sh,
                                 const Caps& caps) -> Verdict {
                                SliceObject a = random_object(i.source(), rng, sh), g = random_object(i.source(), rng, sh);
                                BispanClass psi = random_bispan_over(a, g, rng, sh, sh);
                                BispanClass w = omega(i, a, g, psi, caps);
                                SliceObject pg = pi(i, g, caps).object();
                                ColimElement el = colim_element(i, a, pg, sigma_decompose(i, a, pg, w), caps);
                                if (lambda_map(i, a, el, caps) != w)
                                  return label(m) + ": lambda of the decomposed omega differs";
                                if (lambda_map(i, a, eta_unit(i, g, psi, caps), caps) != w)
                                  return label(m) + ": lambda of the unit element differs from omega";
                                return std::nullopt;
                              }));

  out.push_back(per_orbit_map("omega-natural-in-source", 60,
                              [](const OrbitMap& m, const EquivariantMap& i, Rng& rng, const Shape& sh,
                                 const Caps& caps) -> Verdict {
                                SliceObject a = random_object(i.source(), rng, sh), a2 = random_object(i.source(), rng, sh),
                                            g = random_object(i.source(), rng, sh);
                                BispanClass phi = random_bispan_over(a, a2, rng, sh, sh);
                                BispanClass psi = random_bispan_over(a2, g, rng, sh, sh);
                                BispanClass l = omega(i, a, g, bispan_compose(psi, phi, caps), caps);
                                BispanClass r = bispan_compose(omega(i, a2, g, psi, caps), map_bispan(i, phi), caps);
                                if (l != r) return label(m) + ": omega not natural along " + describe(phi);
                                return std::nullopt;
                              }));

  out.push_back(per_orbit_map("comma-relation", 60,
                              [](const OrbitMap& m, const EquivariantMap& i, Rng& rng, const Shape& sh,
                                 const Caps& caps) -> Verdict {
                                SliceObject a = random_object(i.source(), rng, sh);
                                SliceObject g = random_object(i.source(), rng, sh), g2 = random_object(i.source(), rng, sh);
                                SliceObject beta = random_object(i.target(), rng, sh);
                                SliceObject pg2 = pi(i, g2, caps).object();
                                SpanClass chi = random_span_over(g, g2, rng, sh);
                                SpanClass phi = random_span_over(pg2, beta, rng, sh);
                                BispanClass psi = random_bispan_over(a, g, rng, sh, sh);
                                auto [e1, e2] = comma_pair(i, g, g2, chi, phi, psi, caps);
                                if (lambda_map(i, a, e1, caps) != lambda_map(i, a, e2, caps))
                                  return label(m) + ": related elements have different images";
                                return std::nullopt;
                              }));

  out.push_back(exhaustive<LanCase>("lambda-bijective", lan_cases(), [](const LanCase& c, const Caps& caps) -> Verdict {
    EquivariantMap i = orbit_map(c.map);
    LanEvaluation lan = lan_eval_representable(i, c.alpha, c.beta, caps);
    std::set<BispanKey> seen;
    for (std::size_t k = 0; k < lan.classes.size(); ++k) {
      if (!seen.insert(lan.classes[k].key()).second) return describe_case(c) + ": repeated class";
      if (lambda_map(i, c.alpha, lan.elements[k], caps) != lan.classes[k])
        return describe_case(c) + ": lambda misses " + describe(lan.classes[k]);
    }
    Caps small = caps;
    small.max_enum = std::min(caps.max_enum, 4);
    LanEvaluation bounded = small.max_enum == caps.max_enum ? lan : lan_eval_representable(i, c.alpha, c.beta, small);
    std::set<BispanKey> got;
    for (const auto& b : bounded.classes) got.insert(b.key());
    if (got != naive_classes(i, c.alpha, c.beta, small.max_enum))
      return describe_case(c) + ": enumeration differs from the naive search at " + std::to_string(small.max_enum) +
             " points";
    return std::nullopt;
  }));

  return out;
}

std::vector<Check> mackey_preservation() {
  std::vector<Check> out;

  out.push_back(exhaustive<EpiCase>("zero-preserved", window_epis(), [](const EpiCase& c, const Caps& caps) -> Verdict {
    if (!completed_norm(c.i, CompletedValue::zero(c.i.source())).is_zero())
      return "N(0) is not 0 along " + describe(c.i.source()) + " -> " + describe(c.i.target());
    if (!burnside_norm(c.i, mackey_zero(terminal(c.i.source().group()), c.i.source()), caps).is_zero())
      return "Burnside N(0) is not 0 along " + describe(c.i.source()) + " -> " + describe(c.i.target());
    return std::nullopt;
  }));

  out.push_back(exhaustive<EpiCase>("invertibles-preserved", window_epis(), [](const EpiCase& c, const Caps& caps) -> Verdict {
    const FiniteGroup& g = c.i.source().group();
    IndexPair full{TransferRelation::complete(g), TransferRelation::complete(g)};
    if (!contains_map(full.multiplicative, c.i)) return std::string("map outside the index");
    for (const auto& p : objects_over(c.i.source(), 2))
      for (const auto& q : objects_over(c.i.source(), 2)) {
        CompletedValue a(SliceObject{p}, SliceObject{q});
        auto m = mazur_split(c.i, a, completed_neg(a), caps);
        if (!m) return "no split section along " + describe(c.i.source()) + " -> " + describe(c.i.target());
        if (!m->norm_sum.is_zero()) return "N(a - a) is not 0 for a = " + describe(a);
        if (!completed_add(m->norm_a, m->other).is_zero()) return "N(a) has no inverse for a = " + describe(a);
        if (!completed_add(completed_norm(c.i, a), completed_neg(completed_norm(c.i, a))).is_zero())
          return "N(a) - N(a) is not 0 for a = " + describe(a);
      }
    return std::nullopt;
  }));

  Check value;
  value.name = "empty-source-value";
  value.cases = 1;
  value.max_shrink = 0;
  value.run = [](const CaseContext& ctx) -> Verdict {
    EquivariantMap i = empty_into_free();
    SliceObject a = SliceObject::identity(i.source());
    SliceObject b = SliceObject::identity(i.target());
    LanEvaluation lan = lan_eval_representable(i, a, b, ctx.caps);
    const int free_size = i.target().size();
    const std::size_t expect = static_cast<std::size_t>(ctx.caps.max_enum / free_size) + 1;
    if (lan.classes.size() != expect)
      return "expected " + std::to_string(expect) + " classes, found " + std::to_string(lan.classes.size());
    std::vector<int> counts;
    for (const auto& c : lan.classes) {
      const Bispan& r = c.representative();
      if (r.top().size() != 0 || r.middle().size() % free_size != 0) return "unexpected class " + describe(c);
      counts.push_back(r.middle().size() / free_size);
    }
    std::sort(counts.begin(), counts.end());
    for (std::size_t k = 0; k < counts.size(); ++k)
      if (counts[k] != static_cast<int>(k)) return "classes are not k copies of the free orbit";
    for (const auto& c : lan.classes)
      for (const auto& d : lan.classes)
        if (!(c.is_zero() && d.is_zero()) && bispan_sum(c, d).is_zero()) return "found an additive inverse";
    return std::nullopt;
  };
  out.push_back(value);

  Check control;
  control.name = "empty-source-is-mackey";
  control.cases = 1;
  control.negative = true;
  control.max_shrink = 0;
  control.run = [](const CaseContext& ctx) -> Verdict {
    EquivariantMap i = empty_into_free();
    SliceObject a = SliceObject::identity(i.source());
    SliceObject b = SliceObject::identity(i.target());
    LanEvaluation lan = lan_eval_representable(i, a, b, ctx.caps);
    std::string listed;
    for (const auto& c : lan.classes) {
      int k = c.representative().middle().size() / i.target().size();
      listed += (listed.empty() ? "" : ", ") + std::to_string(k) + "[C2/e]";
    }
    for (const auto& c : lan.classes) {
      if (c.is_zero()) continue;
      bool inverse = false;
      for (const auto& d : lan.classes) inverse = inverse || bispan_sum(c, d).is_zero();
      if (!inverse)
        return "along empty -> C2/e the value is {" + listed + "}, a copy of N: " + describe(c) + " has no inverse";
    }
    if (!completed_norm(i, CompletedValue::zero(i.source())).is_zero())
      return std::string("along empty -> C2/e the norm of 0 is not 0");
    return std::nullopt;
  };
  out.push_back(control);

  return out;
}

std::vector<Check> forgetful_cube() {
  std::vector<Check> out;

  out.push_back(sampled("tambara-to-mackey", law_groups(), 30, Shape{2, 3, true},
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          GSet x = random_gset(g, rng, {2, 3, false}), y = random_gset(g, rng, {2, 3, false});
                          SpanClass phi = random_span(x, y, rng, {3, 6, true});
                          EquivariantMap w = random_over(x, rng, sh);
                          TambaraValue t = forget_act(phi, burnside_tambara(w), caps);
                          if (burnside_value(t.element().representative().t()) != mackey_act(phi, burnside_value(w)))
                            return where(g, "forgetful action differs from the Mackey action");
                          return std::nullopt;
                        }));

  out.push_back(sampled("mackey-index-inclusion", law_groups(), 30, Shape{3, 6, true},
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          const auto& rels = relations_of(g.name());
                          const TransferRelation& o = rng.pick(rels);
                          GSet x = random_gset(g, rng, {2, 3, false}), y = random_gset(g, rng, {2, 3, false});
                          SpanClass phi = random_span(x, y, rng, sh);
                          if (!in_subcategory(o, t_of(codiagonal(y))) || !in_subcategory(o, r_of(coproduct(y, y).inj1)))
                            return where(g, "addition maps outside A(C,O)");
                          if (!in_subcategory(o, phi)) return std::nullopt;
                          for (const auto& o2 : rels)
                            if (o.subset_of(o2) && !in_subcategory(o2, phi))
                              return where(g, "span of a smaller index missing from a larger one");
                          return std::nullopt;
                        }));

  out.push_back(sampled("cube-commutes", law_groups(), 30, Shape{3, 6, true},
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          std::vector<IndexPair> pairs;
                          for (const auto& p : cached_pairs())
                            if (p.group == g.name()) pairs.push_back(p.pair);
                          const IndexPair& o = rng.pick(pairs);
                          GSet x = random_gset(g, rng, {2, 3, false}), y = random_gset(g, rng, {2, 3, false});
                          SpanClass phi = random_span(x, y, rng, sh);
                          if (in_subcategory_u(o, embed_span(phi)) != in_subcategory(o.additive, phi))
                            return where(g, "embedding does not respect the additive index");
                          for (const auto& p : pairs) {
                            bool below = o.additive.subset_of(p.additive) && o.multiplicative.subset_of(p.multiplicative);
                            if (!below) continue;
                            auto b = bispan_in(o, x, y, rng);
                            if (b && !in_subcategory_u(p, *b)) return where(g, "bispan of a smaller pair missing from a larger one");
                          }
                          EquivariantMap w = random_over(x, rng, {2, 3, true});
                          TambaraValue via_u = forget_act(phi, burnside_tambara(w), caps);
                          TambaraValue direct = tambara_act(embed_span(phi), burnside_tambara(w), caps);
                          if (via_u != direct) return where(g, "forgetting before or after acting differs");
                          return std::nullopt;
                        }));

  out.push_back(sampled("restricted-functor", law_groups(), 20, Shape{2, 3, true},
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          GSet y = random_gset(g, rng, {1, 2, false});
                          EquivariantMap i = random_over(y, rng, {2, 3, false});
                          SliceFunctor f(SliceObject(random_over(y, rng, sh)));
                          SliceFunctor r = restrict_functor(TransferRelation::complete(g), i, f);
                          SliceObject alpha(random_over(i.source(), rng, sh));
                          SliceObject beta = r.level_of(alpha);
                          if (!(beta == sigma(i, alpha))) return where(g, "restricted level is not Sigma alpha");
                          for (int k = 0; k < 4; ++k) {
                            TambaraValue va(random_bispan(f.representing().domain(), beta.domain(), rng));
                            TambaraValue vb(random_bispan(f.representing().domain(), beta.domain(), rng));
                            if (!r.is_value(alpha, va) || !r.is_value(alpha, vb)) continue;
                            if (r.add(alpha, va, vb, caps) != f.add(beta, va, vb, caps))
                              return where(g, "restricted addition differs");
                          }
                          return std::nullopt;
                        }));

  return out;
}

}  // namespace tambara::suites
