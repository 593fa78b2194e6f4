#include "suites.hpp"
#include "tambara/functors.hpp"

namespace tambara::suites {

namespace {

std::string where(const FiniteGroup& g, const std::string& what) { return g.name() + ": " + what; }

GSet level(const FiniteGroup& g, Rng& rng, int points = 4) { return random_gset(g, rng, {2, points, false}); }

// A span in A(C, O), or nothing after a few tries.
std::optional<SpanClass> span_in(const TransferRelation& o, const GSet& x, const GSet& y, Rng& rng, const Shape& sh) {
  for (int t = 0; t < 12; ++t) {
    SpanClass s = random_span(x, y, rng, sh);
    if (in_subcategory(o, s)) return s;
  }
  return std::nullopt;
}

// Same span with its apex points renumbered.
SpanClass relabel_span(const SpanClass& s, Rng& rng) {
  const Span& r = s.representative();
  const GSet& z = r.apex();
  std::vector<int> perm(z.size());
  for (int k = 0; k < z.size(); ++k) perm[k] = k;
  for (int k = z.size() - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
  const int n = z.size();
  std::vector<int> act(static_cast<std::size_t>(z.group().order()) * n);
  for (Elem e = 0; e < z.group().order(); ++e)
    for (int p = 0; p < n; ++p) act[e * n + perm[p]] = perm[z.act(e, p)];
  GSet w = GSet::from_action(z.group(), n, std::move(act));
  std::vector<int> l(n), rv(n);
  for (int p = 0; p < n; ++p) {
    l[perm[p]] = r.left()(p);
    rv[perm[p]] = r.right()(p);
  }
  return SpanClass(Span::make(EquivariantMap::make(w, r.source(), l), EquivariantMap::make(w, r.target(), rv)));
}

// Same bispan with top and middle points renumbered.
BispanClass relabel_bispan(const BispanClass& b, Rng& rng) {
  const Bispan& r = b.representative();
  auto shuffle = [&](const GSet& x, std::vector<int>& perm) {
    const int n = x.size();
    perm.resize(n);
    for (int k = 0; k < n; ++k) perm[k] = k;
    for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
    std::vector<int> act(static_cast<std::size_t>(x.group().order()) * n);
    for (Elem e = 0; e < x.group().order(); ++e)
      for (int p = 0; p < n; ++p) act[e * n + perm[p]] = perm[x.act(e, p)];
    return GSet::from_action(x.group(), n, std::move(act));
  };
  std::vector<int> pz, pw;
  GSet z = shuffle(r.top(), pz);
  GSet w = shuffle(r.middle(), pw);
  std::vector<int> rv(z.size()), nv(z.size()), tv(w.size());
  for (int p = 0; p < z.size(); ++p) {
    rv[pz[p]] = r.r()(p);
    nv[pz[p]] = pw[r.n()(p)];
  }
  for (int q = 0; q < w.size(); ++q) tv[pw[q]] = r.t()(q);
  return BispanClass(Bispan::make(EquivariantMap::make(z, r.source(), rv), EquivariantMap::make(z, w, nv),
                                  EquivariantMap::make(w, r.target(), tv)));
}

SliceObject evaluate(const BispanClass& b, const SliceObject& a, const Caps& caps) {
  const Bispan& r = b.representative();
  Restriction pulled = restrict(r.r(), a);
  DependentProduct d = pi(r.n(), pulled.object, caps);
  return sigma(r.t(), d.object());
}

const Shape kMid{2, 3, true};
const Shape kTop{2, 3, true};

}  // namespace

std::vector<Check> lindner_laws() {
  std::vector<Check> out;
  const Shape apex{3, 6, true};

  out.push_back(sampled("span-associativity", law_groups(), 200, apex,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          GSet w = level(g, rng), x = level(g, rng), y = level(g, rng), z = level(g, rng);
                          SpanClass s1 = random_span(w, x, rng, sh), s2 = random_span(x, y, rng, sh),
                                    s3 = random_span(y, z, rng, sh);
                          SpanClass l = span_compose(s3, span_compose(s2, s1));
                          SpanClass r = span_compose(span_compose(s3, s2), s1);
                          if (l != r) return where(g, "association orders differ: " + describe(l) + " vs " + describe(r));
                          return std::nullopt;
                        }));

  out.push_back(sampled("span-identity", law_groups(), 200, apex,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          GSet x = level(g, rng), y = level(g, rng);
                          SpanClass s = random_span(x, y, rng, sh);
                          if (span_compose(identity_span(y), s) != s) return where(g, "left identity fails");
                          if (span_compose(s, identity_span(x)) != s) return where(g, "right identity fails");
                          return std::nullopt;
                        }));

  out.push_back(sampled("composite-apex-is-fiber-product", law_groups(), 50, apex,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          GSet w = level(g, rng), x = level(g, rng), y = level(g, rng);
                          SpanClass s1 = random_span(w, x, rng, sh), s2 = random_span(x, y, rng, sh);
                          const Span& a = s1.representative();
                          const Span& b = s2.representative();
                          int pairs = 0;
                          for (int p = 0; p < a.apex().size(); ++p)
                            for (int q = 0; q < b.apex().size(); ++q) pairs += a.right()(p) == b.left()(q);
                          int got = span_compose(s2, s1).representative().apex().size();
                          if (got != pairs)
                            return where(g, "composite apex has " + std::to_string(got) + " points, expected " +
                                                std::to_string(pairs));
                          return std::nullopt;
                        }));

  out.push_back(sampled("restriction-transfer-exchange", law_groups(), 50, apex,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps&) -> Verdict {
                          GSet d = level(g, rng);
                          EquivariantMap f = random_over(d, rng, {2, 4, false});
                          EquivariantMap h = random_over(d, rng, {2, 4, false});
                          Pullback pb = pullback(f, h);
                          if (span_compose(r_of(h), t_of(f)) != span_compose(t_of(pb.proj2), r_of(pb.proj1)))
                            return where(g, "R_h T_f differs from T R through the pullback");
                          return std::nullopt;
                        }));

  out.push_back(sampled("transfer-restriction-normal-form", law_groups(), 50, apex,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          GSet x = level(g, rng), y = level(g, rng);
                          SpanClass s = random_span(x, y, rng, sh);
                          TRDecomposition d = tr_decompose(s);
                          if (span_compose(t_of(d.t), r_of(d.r)) != s) return where(g, "T_t R_r does not recompose");
                          if (relabel_span(s, rng) != s) return where(g, "renumbered apex changes the class");
                          return std::nullopt;
                        }));

  out.push_back(sampled("indexed-spans-closed", law_groups(), 50, apex,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          const TransferRelation& o = rng.pick(relations_of(g.name()));
                          GSet x = level(g, rng), y = level(g, rng), z = level(g, rng);
                          if (!in_subcategory(o, identity_span(x))) return where(g, "identity outside A(C,O)");
                          auto s1 = span_in(o, x, y, rng, sh);
                          auto s2 = span_in(o, y, z, rng, sh);
                          if (!s1 || !s2) return std::nullopt;
                          if (!in_subcategory(o, span_compose(*s2, *s1)))
                            return where(g, "composite of indexed spans leaves A(C,O)");
                          return std::nullopt;
                        }));

  return out;
}

std::vector<Check> polynomial_laws() {
  std::vector<Check> out;
  const Shape none{};

  out.push_back(sampled("bispan-associativity", law_groups(), 220, none,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          GSet w = level(g, rng, 3), x = level(g, rng, 3), y = level(g, rng, 3), z = level(g, rng, 3);
                          BispanClass b1 = random_bispan(w, x, rng, kMid, kTop);
                          BispanClass b2 = random_bispan(x, y, rng, kMid, kTop);
                          BispanClass b3 = random_bispan(y, z, rng, kMid, kTop);
                          BispanClass l = bispan_compose(b3, bispan_compose(b2, b1, caps), caps);
                          BispanClass r = bispan_compose(bispan_compose(b3, b2, caps), b1, caps);
                          if (l != r) return where(g, "association orders differ: " + describe(l) + " vs " + describe(r));
                          return std::nullopt;
                        }));

  out.push_back(sampled("bispan-identity", law_groups(), 200, none,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          GSet x = level(g, rng), y = level(g, rng);
                          BispanClass b = random_bispan(x, y, rng, kMid, kTop);
                          if (bispan_compose(identity_bispan(y), b, caps) != b) return where(g, "left identity fails");
                          if (bispan_compose(b, identity_bispan(x), caps) != b) return where(g, "right identity fails");
                          return std::nullopt;
                        }));

  out.push_back(sampled("norm-after-transfer-distributes", law_groups(), 50, none,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          GSet z = random_gset(g, rng, {2, 3, false});
                          EquivariantMap gm = random_over(z, rng, {2, 4, false});
                          EquivariantMap f = random_over(gm.source(), rng, {2, 4, true});
                          Distributor d = distributor(f, gm, caps);
                          BispanClass want(Bispan::make(d.eps, d.pulled, d.pi_g_f.object().structure()));
                          if (bispan_compose(bn_of(gm), bt_of(f), caps) != want)
                            return where(g, "N_g T_f differs from its distributor form");
                          if (!is_cartesian(d.pulled, d.corner.object.structure(), d.pi_g_f.object().structure(), gm))
                            return where(g, "distributor square not cartesian");
                          return std::nullopt;
                        }));

  out.push_back(sampled("restriction-past-norm", law_groups(), 50, none,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          GSet d = level(g, rng, 3);
                          EquivariantMap f = random_over(d, rng, {2, 4, false});
                          EquivariantMap h = random_over(d, rng, {2, 3, false});
                          Pullback pb = pullback(h, f);
                          if (bispan_compose(br_of(h), bn_of(f), caps) !=
                              bispan_compose(bn_of(pb.proj1), br_of(pb.proj2), caps))
                            return where(g, "R_h N_f differs from N R through the pullback");
                          return std::nullopt;
                        }));

  out.push_back(sampled("normal-form-recomposes", law_groups(), 50, none,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          GSet x = level(g, rng, 3), y = level(g, rng, 3), z = level(g, rng, 3);
                          BispanClass c = bispan_compose(random_bispan(y, z, rng, kMid, kTop),
                                                         random_bispan(x, y, rng, kMid, kTop), caps);
                          NormalForm nf = normal_form(c);
                          BispanClass back =
                              bispan_compose(bt_of(nf.t), bispan_compose(bn_of(nf.n), br_of(nf.r), caps), caps);
                          if (back != c) return where(g, "T N R of the normal form differs from the bispan");
                          return std::nullopt;
                        }));

  out.push_back(sampled("class-key-matches-iso-search", law_groups(), 50, none,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps&) -> Verdict {
                          GSet x = level(g, rng, 3), y = level(g, rng, 3);
                          BispanClass a = random_bispan(x, y, rng, kMid, kTop);
                          BispanClass b = rng.coin() ? relabel_bispan(a, rng) : random_bispan(x, y, rng, kMid, kTop);
                          bool by_key = a == b;
                          bool by_search = find_bispan_iso(a, b).has_value();
                          if (by_key != by_search)
                            return where(g, std::string("key says ") + (by_key ? "equal" : "different") +
                                                ", iso search disagrees: " + describe(a) + " / " + describe(b));
                          return std::nullopt;
                        }));

  out.push_back(sampled("composite-acts-as-composed-action", law_groups(), 40, none,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          GSet w = level(g, rng, 3), x = level(g, rng, 3), y = level(g, rng, 3);
                          BispanClass b1 = random_bispan(w, x, rng, kMid, kTop);
                          BispanClass b2 = random_bispan(x, y, rng, kMid, kTop);
                          SliceObject a(random_over(w, rng, {2, 3, true}));
                          SliceObject lhs = evaluate(bispan_compose(b2, b1, caps), a, caps);
                          SliceObject rhs = evaluate(b2, evaluate(b1, a, caps), caps);
                          if (!find_slice_iso(lhs, rhs)) return where(g, "composite acts differently on " + describe(a.domain()));
                          return std::nullopt;
                        }));

  out.push_back(sampled("embedding-is-functor", law_groups(), 50, Shape{3, 6, true},
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          GSet w = level(g, rng), x = level(g, rng), y = level(g, rng);
                          SpanClass s1 = random_span(w, x, rng, sh), s2 = random_span(x, y, rng, sh);
                          if (embed_span(span_compose(s2, s1)) != bispan_compose(embed_span(s2), embed_span(s1), caps))
                            return where(g, "embedding does not preserve composition");
                          if (embed_span(identity_span(x)) != identity_bispan(x))
                            return where(g, "embedding does not preserve identities");
                          return std::nullopt;
                        }));

  return out;
}

std::vector<Check> product_universality() {
  std::vector<Check> out;
  const Shape apex{3, 6, true};

  out.push_back(sampled("span-product-pairing", law_groups(), 50, apex,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          GSet t = level(g, rng), x = level(g, rng), y = level(g, rng);
                          SpanClass a = random_span(t, x, rng, sh), b = random_span(t, y, rng, sh);
                          Coproduct c = coproduct(x, y);
                          SpanClass p = span_pair(a, b);
                          if (span_compose(r_of(c.inj1), p) != a || span_compose(r_of(c.inj2), p) != b)
                            return where(g, "projections of the pairing differ");
                          SpanClass q = random_span(t, c.object, rng, sh);
                          if (span_pair(span_compose(r_of(c.inj1), q), span_compose(r_of(c.inj2), q)) != q)
                            return where(g, "pairing of projections differs");
                          return std::nullopt;
                        }));

  out.push_back(sampled("bispan-product-pairing", law_groups(), 50, Shape{},
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          GSet t = level(g, rng, 3), x = level(g, rng, 3), y = level(g, rng, 3);
                          BispanClass a = random_bispan(t, x, rng, kMid, kTop), b = random_bispan(t, y, rng, kMid, kTop);
                          Coproduct c = coproduct(x, y);
                          BispanClass p = bispan_pair(a, b);
                          if (bispan_compose(br_of(c.inj1), p, caps) != a || bispan_compose(br_of(c.inj2), p, caps) != b)
                            return where(g, "projections of the pairing differ");
                          BispanClass q = random_bispan(t, c.object, rng, kMid, kTop);
                          if (bispan_pair(bispan_compose(br_of(c.inj1), q, caps), bispan_compose(br_of(c.inj2), q, caps)) != q)
                            return where(g, "pairing of projections differs");
                          return std::nullopt;
                        }));

  out.push_back(exhaustive<GSet>("empty-is-terminal", window(law_groups(), 2), [](const GSet& x, const Caps&) -> Verdict {
    GSet e = initial(x.group());
    Rng rng(static_cast<std::uint64_t>(x.size()));
    for (int k = 0; k < 4; ++k) {
      if (random_span(x, e, rng) != zero_span(x, e)) return "nonzero span into empty from " + describe(x);
      if (random_bispan(x, e, rng) != zero_bispan(x, e)) return "nonzero bispan into empty from " + describe(x);
    }
    if (identity_span(e) != zero_span(e, e)) return std::string("identity on empty is not zero");
    return std::nullopt;
  }));

  out.push_back(sampled("indexed-products-complete", law_groups(), 40, apex,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          const auto& rels = relations_of(g.name());
                          const TransferRelation& o = rng.pick(rels);
                          GSet t = level(g, rng), x = level(g, rng), y = level(g, rng);
                          Coproduct c = coproduct(x, y);
                          if (!in_subcategory(o, r_of(c.inj1)) || !in_subcategory(o, r_of(c.inj2)))
                            return where(g, "product projections outside A(C,O)");
                          if (!in_subcategory(o, r_of(codiagonal(t))) || !in_subcategory(o, t_of(codiagonal(t))))
                            return where(g, "fold outside A(C,O)");
                          auto a = span_in(o, t, x, rng, sh);
                          auto b = span_in(o, t, y, rng, sh);
                          if (!a || !b) return std::nullopt;
                          SpanClass p = span_pair(*a, *b);
                          if (!in_subcategory(o, p)) return where(g, "pairing of indexed spans leaves A(C,O)");
                          for (const auto& o2 : rels)
                            if (o.subset_of(o2) && !in_subcategory(o2, p))
                              return where(g, "span in a smaller index missing from a larger one");
                          return std::nullopt;
                        }));

  return out;
}

std::vector<Check> mackey_factorization() {
  std::vector<Check> out;
  const Shape sh{2, 4, true};

  out.push_back(sampled("addition-through-fold", law_groups(), 40, sh,
                        [](const FiniteGroup& g, Rng& rng, const Shape& s, const Caps&) -> Verdict {
                          GSet src = rng.coin() ? terminal(g) : random_gset(g, rng, {1, 3, false});
                          GSet x = level(g, rng);
                          MackeyValue a = MackeyValue::of(random_span(src, x, rng, s));
                          MackeyValue b = MackeyValue::of(random_span(src, x, rng, s));
                          if (mackey_add_via_fold(a, b) != mackey_add(a, b))
                            return where(g, "fold addition differs from term union");
                          if (mackey_add(a, b) != mackey_add(b, a)) return where(g, "addition not commutative");
                          if (mackey_add(a, mackey_zero(src, x)) != a) return where(g, "zero not neutral");
                          return std::nullopt;
                        }));

  Check desk;
  desk.name = "burnside-desk-values";
  desk.cases = 1;
  desk.max_shrink = 0;
  desk.run = [](const CaseContext& ctx) -> Verdict {
    FiniteGroup g = group_named("C2");
    GSet free = make_orbit(g, 0);
    MackeyValue f = burnside_value(terminal_map(free));
    if (burnside_mul(f, f) != mackey_add(f, f)) return "[C2/e]^2 = " + describe(burnside_mul(f, f));
    MackeyValue one = burnside_value(EquivariantMap::identity(free));
    MackeyValue n2 = burnside_norm(terminal_map(free), mackey_add(one, one), ctx.caps);
    std::multiset<std::pair<int, int>> want{{1, 2}, {1, 2}, {2, 1}};
    if (orbit_profile(burnside_object(n2).domain()) != want) return "N(2) = " + describe(n2);
    DependentProduct d = pi(terminal_map(free), SliceObject(codiagonal(free)), ctx.caps);
    if (orbit_profile(d.object().domain()) != want) return "Pi of the fold is " + describe(d.object().domain());
    MackeyValue n1 = burnside_norm(terminal_map(free), one, ctx.caps);
    if (n2 == mackey_add(n1, n1)) return std::string("norm is additive on 1 + 1");
    return std::nullopt;
  };
  out.push_back(desk);

  out.push_back(sampled("norm-route-agreement", law_groups(), 30, sh,
                        [](const FiniteGroup& g, Rng& rng, const Shape& s, const Caps& caps) -> Verdict {
                          GSet y = random_gset(g, rng, {2, 3, false});
                          EquivariantMap i = random_over(y, rng, {2, 4, false});
                          MackeyValue v = burnside_value(random_over(i.source(), rng, s));
                          if (completed_norm(i, group_complete(v)) != group_complete(burnside_norm(i, v, caps)))
                            return where(g, "marks norm differs from the Pi norm");
                          return std::nullopt;
                        }));

  out.push_back(sampled("marks-round-trip", law_groups(), 30, sh,
                        [](const FiniteGroup& g, Rng& rng, const Shape& s, const Caps&) -> Verdict {
                          GSet y = random_gset(g, rng, {2, 3, false});
                          CompletedValue v(SliceObject(random_over(y, rng, s)), SliceObject(random_over(y, rng, s)));
                          std::vector<std::vector<long long>> marks(y.size(),
                                                                    std::vector<long long>(g.subgroup_count(), 0));
                          for (int p = 0; p < y.size(); ++p)
                            for (int l = 0; l < g.subgroup_count(); ++l)
                              if (g.is_subgroup_of(l, y.stabilizer(p))) marks[p][l] = fixed_count(v, p, l);
                          if (from_marks(y, marks) != v) return where(g, "marks do not determine " + describe(v));
                          return std::nullopt;
                        }));

  out.push_back(sampled("group-completion", law_groups(), 30, sh,
                        [](const FiniteGroup& g, Rng& rng, const Shape& s, const Caps&) -> Verdict {
                          GSet y = random_gset(g, rng, {2, 3, false});
                          MackeyValue a = burnside_value(random_over(y, rng, s));
                          MackeyValue b = burnside_value(random_over(y, rng, s));
                          CompletedValue ca = group_complete(a), cb = group_complete(b);
                          if (group_complete(mackey_add(a, b)) != completed_add(ca, cb))
                            return where(g, "completion is not additive");
                          if (!completed_add(ca, completed_neg(ca)).is_zero()) return where(g, "no inverse after completion");
                          if (group_complete(mackey_add(a, b), b) != ca) return where(g, "(a + b) - b differs from a");
                          if (is_invertible(a) != a.is_zero()) return where(g, "nonzero Burnside value invertible");
                          return std::nullopt;
                        }));

  out.push_back(sampled("tambara-semiring", {"C2", "C3"}, 20, sh,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          GSet x = random_gset(g, rng, {1, 3, false});
                          TambaraValue a = burnside_tambara(random_over(x, rng, {2, 3, true}));
                          TambaraValue b = burnside_tambara(random_over(x, rng, {2, 3, true}));
                          TambaraValue c = burnside_tambara(random_over(x, rng, {1, 3, true}));
                          TambaraValue zero = tambara_zero(a.source(), x);
                          TambaraValue one = tambara_one(a.source(), x, caps);
                          if (tambara_add(a, b, caps) != tambara_add(b, a, caps)) return where(g, "+ not commutative");
                          if (tambara_mul(a, b, caps) != tambara_mul(b, a, caps)) return where(g, "* not commutative");
                          if (tambara_add(a, zero, caps) != a) return where(g, "0 not neutral");
                          if (tambara_mul(a, one, caps) != a) return where(g, "1 not neutral");
                          if (tambara_mul(a, zero, caps) != zero) return where(g, "0 does not annihilate");
                          if (tambara_mul(a, tambara_add(b, c, caps), caps) !=
                              tambara_add(tambara_mul(a, b, caps), tambara_mul(a, c, caps), caps))
                            return where(g, "* does not distribute over +");
                          if (tambara_add(a, tambara_add(b, c, caps), caps) != tambara_add(tambara_add(a, b, caps), c, caps))
                            return where(g, "+ not associative");
                          if (tambara_mul(a, tambara_mul(b, c, caps), caps) != tambara_mul(tambara_mul(a, b, caps), c, caps))
                            return where(g, "* not associative");
                          return std::nullopt;
                        }));

  out.push_back(sampled("tambara-matches-burnside", law_groups(), 15, sh,
                        [](const FiniteGroup& g, Rng& rng, const Shape&, const Caps& caps) -> Verdict {
                          GSet x = random_gset(g, rng, {1, 2, false});
                          EquivariantMap u = random_over(x, rng, {2, 3, true}), v = random_over(x, rng, {2, 3, true});
                          TambaraValue sum = tambara_add(burnside_tambara(u), burnside_tambara(v), caps);
                          TambaraValue prod = tambara_mul(burnside_tambara(u), burnside_tambara(v), caps);
                          if (burnside_value(sum.element().representative().t()) !=
                              mackey_add(burnside_value(u), burnside_value(v)))
                            return where(g, "Tambara sum differs from Burnside sum");
                          if (burnside_value(prod.element().representative().t()) !=
                              burnside_mul(burnside_value(u), burnside_value(v)))
                            return where(g, "Tambara product differs from Burnside product");
                          return std::nullopt;
                        }));

  return out;
}

}  // namespace tambara::suites
