#include "suites.hpp"
#include "tambara/functors.hpp"
#include "tambara/indexing.hpp"

namespace tambara::suites {

namespace {

std::string where(const FiniteGroup& g, const std::string& what) { return g.name() + ": " + what; }

std::vector<GSet> window_with_empty(int max_orbits) {
  std::vector<GSet> out;
  for (const auto& n : law_groups()) {
    out.push_back(initial(group_named(n)));
    for (const GSet& x : window_objects(group_named(n), max_orbits)) out.push_back(x);
  }
  return out;
}

// x, y on the same group with every map x -> y.
struct MapCase {
  GSet x;
  GSet y;
  std::vector<EquivariantMap> maps;
};

std::vector<MapCase> window_maps(int max_orbits, int max_maps) {
  std::vector<MapCase> out;
  for (const auto& [x, y] : window_pairs(law_groups(), max_orbits)) {
    MapCase c{x, y, {}};
    for_each_map(x, y, [&](const EquivariantMap& f) {
      c.maps.push_back(f);
      return static_cast<int>(c.maps.size()) < max_maps;
    });
    if (!c.maps.empty()) out.push_back(std::move(c));
  }
  return out;
}

bool is_pullback_in_slice(const EquivariantMap& top, const EquivariantMap& left, const EquivariantMap& right,
                          const EquivariantMap& bottom) {
  Pullback pb = pullback(bottom, right);
  if (compose(bottom, left) != compose(right, top)) return false;
  EquivariantMap cmp = pullback_factor(pb, left, top);
  return is_iso(cmp);
}

}  // namespace

std::vector<Check> lccdc_axioms() {
  std::vector<Check> out;

  out.push_back(exhaustive<std::pair<GSet, GSet>>(
      "coproducts-disjoint", window_pairs(law_groups(), 3), [](const std::pair<GSet, GSet>& xy, const Caps&) -> Verdict {
        Coproduct c = coproduct(xy.first, xy.second);
        if (!is_mono(c.inj1) || !is_mono(c.inj2)) return "coproduct injection not mono for " + describe(c.object);
        if (pullback(c.inj1, c.inj2).object.size() != 0) return "injections meet in " + describe(c.object);
        std::vector<int> hit(c.object.size(), 0);
        for (int p = 0; p < xy.first.size(); ++p) ++hit[c.inj1(p)];
        for (int p = 0; p < xy.second.size(); ++p) ++hit[c.inj2(p)];
        for (int h : hit)
          if (h != 1) return "injections do not cover " + describe(c.object);
        return std::nullopt;
      }));

  out.push_back(exhaustive<GSet>("maps-into-empty", window_with_empty(3), [](const GSet& x, const Caps&) -> Verdict {
    GSet e = initial(x.group());
    long long n = count_maps(x, e);
    if (n != (x.size() == 0 ? 1 : 0)) return "unexpected maps " + describe(x) + " -> empty";
    if (x.size() == 0 && objects_over(e, 6).size() != 1) return "slice over empty is not trivial";
    return std::nullopt;
  }));

  out.push_back(exhaustive<GSet>("epi-from-initial", window_with_empty(3), [](const GSet& z, const Caps&) -> Verdict {
    EquivariantMap phi = initial_map(z);
    Coproduct zz = coproduct(z, z);
    // phi is epi exactly when the two coprojections agree, i.e. z is empty.
    bool categorical_epi = zz.inj1 == zz.inj2;
    if (is_epi(phi) != categorical_epi) return "epi test disagrees with coprojections on " + describe(z);
    if (categorical_epi && !is_iso(phi)) return "epi from empty is not iso onto " + describe(z);
    return std::nullopt;
  }));

  out.push_back(exhaustive<MapCase>("fold-square", window_maps(2, 8), [](const MapCase& c, const Caps&) -> Verdict {
    for (const auto& f : c.maps)
      if (!is_cartesian(coproduct_map(f, f), codiagonal(c.x), codiagonal(c.y), f))
        return "fold square not cartesian for f: " + describe(c.x) + " -> " + describe(c.y);
    return std::nullopt;
  }));

  out.push_back(exhaustive<MapCase>("inclusion-sum-square", window_maps(2, 8), [](const MapCase& c, const Caps&) -> Verdict {
    for (const auto& f : c.maps)
      for (const auto& g : {c.maps.front(), EquivariantMap::identity(c.y)}) {
        Coproduct cx = coproduct(c.x, g.source());
        Coproduct cy = coproduct(c.y, g.target());
        if (!is_cartesian(f, cx.inj1, cy.inj1, coproduct_map(f, g)))
          return "inclusion square not cartesian over " + describe(cy.object);
      }
    return std::nullopt;
  }));

  out.push_back(exhaustive<std::pair<GSet, GSet>>(
      "slice-coproducts-disjoint", window_pairs(law_groups(), 1),
      [](const std::pair<GSet, GSet>& xy, const Caps&) -> Verdict {
        const GSet& x = xy.first;
        auto objs = objects_over(x, 3);
        for (const auto& a : objs)
          for (const auto& b : objs) {
            Coproduct c = coproduct(a.source(), b.source());
            EquivariantMap ab = copair(a, b);
            if (compose(ab, c.inj1) != a || compose(ab, c.inj2) != b) return "copair not over " + describe(x);
            Pullback meet = pullback(c.inj1, c.inj2);
            if (meet.object.size() != 0 || count_maps(meet.object, initial(x.group())) != 1)
              return "slice coproduct injections meet over " + describe(x);
            if (!is_mono(c.inj1) || !is_mono(c.inj2)) return "slice injection not mono over " + describe(x);
          }
        return std::nullopt;
      }));

  out.push_back(exhaustive<std::pair<GSet, GSet>>(
      "slice-split-round-trip", window_pairs(law_groups(), 1),
      [](const std::pair<GSet, GSet>& xy, const Caps&) -> Verdict {
        Coproduct c = coproduct(xy.first, xy.second);
        for (const auto& gm : objects_over(c.object, 4)) {
          SliceObject gamma(gm);
          SliceSplit sp = slice_split(c.inj1, c.inj2, gamma);
          const EquivariantMap& fw = sp.reassembly.forward;
          if (!is_iso(fw)) return "split does not reassemble over " + describe(c.object);
          EquivariantMap glued = copair(compose(c.inj1, sp.left.object.structure()),
                                        compose(c.inj2, sp.right.object.structure()));
          if (compose(gamma.structure(), fw) != glued) return "reassembly not over " + describe(c.object);
        }
        for (const auto& a : objects_over(xy.first, 3))
          for (const auto& b : objects_over(xy.second, 3)) {
            SliceObject glued(coproduct_map(a, b));
            SliceSplit sp = slice_split(c.inj1, c.inj2, glued);
            if (!find_slice_iso(sp.left.object, SliceObject(a)) || !find_slice_iso(sp.right.object, SliceObject(b)))
              return "split of a sum does not return its parts over " + describe(c.object);
          }
        return std::nullopt;
      }));

  out.push_back(exhaustive<MapCase>("dep-prod-of-empty", window_maps(2, 4), [](const MapCase& c, const Caps& caps) -> Verdict {
    for (const auto& i : c.maps) {
      DependentProduct d = pi(i, SliceObject::empty(c.x), caps);
      std::vector<int> missed;
      std::vector<bool> hit(c.y.size(), false);
      for (int p = 0; p < c.x.size(); ++p) hit[i(p)] = true;
      for (int q = 0; q < c.y.size(); ++q)
        if (!hit[q]) missed.push_back(q);
      SubSet rest = sub_gset(c.y, missed);
      if (!find_slice_iso(d.object(), SliceObject(rest.inclusion)))
        return "Pi of empty is not the complement of the image in " + describe(c.y);
      if (is_epi(i) && d.size() != 0) return "Pi along an epi keeps points of the empty object";
    }
    return std::nullopt;
  }));

  return out;
}

std::vector<Check> adjunction_cartesian() {
  std::vector<Check> out;
  const Shape shape{2, 4, true};

  out.push_back(sampled("triangle-identities", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          AdjunctionCell eta = adjunction_cell(CellKind::UnitInd, s.i, s.alpha, caps);
                          AdjunctionCell eps = adjunction_cell(CellKind::CounitInd, s.i, sigma(s.i, s.alpha), caps);
                          if (compose(eps.cell, sigma_map(s.i, eta.cell)).underlying() !=
                              EquivariantMap::identity(s.alpha.domain()))
                            return where(g, "induction triangle fails at " + describe(s.alpha.domain()));
                          DependentProduct pa = pi(s.i, s.alpha, caps);
                          AdjunctionCell u = adjunction_cell(CellKind::UnitCoind, s.i, pa.object(), caps);
                          AdjunctionCell c = adjunction_cell(CellKind::CounitCoind, s.i, s.alpha, caps);
                          DependentProduct pr = pi(s.i, c.cell.from(), caps);
                          if (compose(pi_map(pr, pa, c.cell), u.cell).underlying() !=
                              EquivariantMap::identity(pa.object().domain()))
                            return where(g, "coinduction triangle fails at Pi of " + describe(s.alpha.domain()));
                          AdjunctionCell ub = adjunction_cell(CellKind::UnitCoind, s.i, s.beta, caps);
                          Restriction rb = restrict(s.i, s.beta);
                          Restriction rt = restrict(s.i, ub.cell.to());
                          AdjunctionCell cb = adjunction_cell(CellKind::CounitCoind, s.i, rb.object, caps);
                          if (compose(cb.cell, restrict_map(rb, rt, ub.cell)).underlying() !=
                              EquivariantMap::identity(rb.object.domain()))
                            return where(g, "restriction triangle fails at " + describe(s.beta.domain()));
                          return std::nullopt;
                        }));

  out.push_back(sampled("induction-hom-bijection", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          SliceObject sa = sigma(s.i, s.alpha);
                          Restriction rb = restrict(s.i, s.beta);
                          long long l = count_maps_over(sa.structure(), s.beta.structure());
                          long long r = count_maps_over(s.alpha.structure(), rb.object.structure());
                          if (l != r)
                            return where(g, "|Hom(Sigma a, b)| = " + std::to_string(l) + " but |Hom(a, i*b)| = " +
                                                std::to_string(r));
                          return std::nullopt;
                        }));

  out.push_back(sampled("coinduction-hom-bijection", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          Restriction rb = restrict(s.i, s.beta);
                          DependentProduct pa = pi(s.i, s.alpha, caps);
                          long long l = count_maps_over(rb.object.structure(), s.alpha.structure());
                          long long r = count_maps_over(s.beta.structure(), pa.object().structure());
                          if (l != r)
                            return where(g, "|Hom(i*b, a)| = " + std::to_string(l) + " but |Hom(b, Pi a)| = " +
                                                std::to_string(r));
                          return std::nullopt;
                        }));

  out.push_back(sampled("adjuncts-round-trip", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          SliceObject sa = sigma(s.i, s.alpha);
                          Verdict bad;
                          int budget = 64;
                          for_each_map_over(sa.structure(), s.beta.structure(), [&](const EquivariantMap& m) {
                            SliceMap f = SliceMap::make(sa, s.beta, m);
                            SliceMap back = ind_coadjunct(s.i, s.alpha, s.beta, ind_adjunct(s.i, s.alpha, s.beta, f));
                            if (back.underlying() != m) bad = where(g, "induction adjunct does not round trip");
                            return !bad && --budget > 0;
                          });
                          if (bad) return bad;
                          Restriction rb = restrict(s.i, s.beta);
                          budget = 64;
                          for_each_map_over(rb.object.structure(), s.alpha.structure(), [&](const EquivariantMap& m) {
                            SliceMap h = SliceMap::make(rb.object, s.alpha, m);
                            SliceMap back = coind_coadjunct(s.i, s.beta, s.alpha,
                                                            coind_adjunct(s.i, s.beta, s.alpha, h, caps), caps);
                            if (back.underlying() != m) bad = where(g, "coinduction adjunct does not round trip");
                            return !bad && --budget > 0;
                          });
                          return bad;
                        }));

  out.push_back(sampled("sum-of-pullback-is-product", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          Restriction rb = restrict(s.i, s.beta);
                          Product p = product(s.i.source(), s.beta.domain());
                          std::vector<int> keep;
                          for (int k = 0; k < p.object.size(); ++k)
                            if (s.i(p.proj1(k)) == s.beta(p.proj2(k))) keep.push_back(k);
                          SubSet fibered = sub_gset(p.object, keep);
                          EquivariantMap l1 = compose(p.proj1, fibered.inclusion);
                          EquivariantMap l2 = compose(p.proj2, fibered.inclusion);
                          if (!find_iso_over(rb.object.domain(), fibered.object,
                                             {rb.object.structure(), rb.top}, {l1, l2}))
                            return where(g, "Sigma i* b differs from i x b for b = " + describe(s.beta.domain()));
                          return std::nullopt;
                        }));

  out.push_back(sampled("pi-preserves-limits", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          DependentProduct top = pi(s.i, SliceObject::identity(s.i.source()), caps);
                          if (!is_iso(top.object().structure())) return where(g, "Pi of the terminal is not terminal");
                          SliceObject a2(random_over(s.i.source(), rng, sh));
                          Pullback ab = pullback(s.alpha.structure(), a2.structure());
                          SliceObject prod(compose(s.alpha.structure(), ab.proj1));
                          DependentProduct pp = pi(s.i, prod, caps);
                          DependentProduct p1 = pi(s.i, s.alpha, caps);
                          DependentProduct p2 = pi(s.i, a2, caps);
                          SliceMap m1 = pi_map(pp, p1, SliceMap::make(prod, s.alpha, ab.proj1));
                          SliceMap m2 = pi_map(pp, p2, SliceMap::make(prod, a2, ab.proj2));
                          Pullback want = pullback(p1.object().structure(), p2.object().structure());
                          if (!find_iso_over(pp.object().domain(), want.object, {m1.underlying(), m2.underlying()},
                                             {want.proj1, want.proj2}))
                            return where(g, "Pi of a product is not the product of Pis");
                          return std::nullopt;
                        }));

  out.push_back(sampled("restriction-preserves-pullbacks", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          const SliceObject& d = s.beta;
                          SliceMap gm = random_map_into(d, rng, sh);
                          SliceMap hm = random_map_into(d, rng, sh);
                          Pullback pb = pullback(gm.underlying(), hm.underlying());
                          SliceObject p(compose(d.structure(), compose(gm.underlying(), pb.proj1)));
                          Restriction rp = restrict(s.i, p), rb = restrict(s.i, gm.from()),
                                      rc = restrict(s.i, hm.from()), rd = restrict(s.i, d);
                          auto top = restrict_map(rp, rc, SliceMap::make(p, hm.from(), pb.proj2));
                          auto left = restrict_map(rp, rb, SliceMap::make(p, gm.from(), pb.proj1));
                          auto right = restrict_map(rc, rd, hm);
                          auto bottom = restrict_map(rb, rd, gm);
                          if (!is_cartesian(top.underlying(), left.underlying(), right.underlying(),
                                            bottom.underlying()))
                            return where(g, "i* of a pullback square is not cartesian");
                          return std::nullopt;
                        }));

  out.push_back(sampled("unit-counit-squares-cartesian", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          SliceMap f = random_map_into(s.alpha, rng, sh);
                          const SliceObject& a = f.from();
                          AdjunctionCell ea = adjunction_cell(CellKind::UnitInd, s.i, a, caps);
                          AdjunctionCell eb = adjunction_cell(CellKind::UnitInd, s.i, s.alpha, caps);
                          Restriction ra = restrict(s.i, sigma(s.i, a));
                          Restriction rb = restrict(s.i, sigma(s.i, s.alpha));
                          SliceMap right = restrict_map(ra, rb, sigma_map(s.i, f));
                          if (!is_cartesian(ea.cell.underlying(), f.underlying(), right.underlying(),
                                            eb.cell.underlying()))
                            return where(g, "unit naturality square not cartesian");
                          SliceMap k = random_map_into(s.beta, rng, sh);
                          AdjunctionCell ca = adjunction_cell(CellKind::CounitInd, s.i, k.from(), caps);
                          AdjunctionCell cb = adjunction_cell(CellKind::CounitInd, s.i, s.beta, caps);
                          Restriction rk = restrict(s.i, k.from());
                          Restriction rbeta = restrict(s.i, s.beta);
                          SliceMap left = sigma_map(s.i, restrict_map(rk, rbeta, k));
                          if (!is_cartesian(ca.cell.underlying(), left.underlying(), k.underlying(),
                                            cb.cell.underlying()))
                            return where(g, "counit naturality square not cartesian");
                          return std::nullopt;
                        }));

  out.push_back(sampled("sum-preserves-reflects-pullbacks", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          SliceMap gm = random_map_into(s.alpha, rng, sh);
                          SliceMap hm = random_map_into(s.alpha, rng, sh);
                          Pullback pb = pullback(gm.underlying(), hm.underlying());
                          EquivariantMap q = rng.coin() ? EquivariantMap::identity(pb.object)
                                                        : random_over(pb.object, rng, {2, 4, true});
                          EquivariantMap left = compose(pb.proj1, q);
                          EquivariantMap top = compose(pb.proj2, q);
                          bool in_slice = is_pullback_in_slice(top, left, hm.underlying(), gm.underlying());
                          SliceObject sq(compose(s.alpha.structure(), compose(gm.underlying(), left)));
                          SliceMap sl = sigma_map(s.i, SliceMap::make(sq, gm.from(), left));
                          SliceMap st = sigma_map(s.i, SliceMap::make(sq, hm.from(), top));
                          bool after = is_cartesian(st.underlying(), sl.underlying(),
                                                    sigma_map(s.i, hm).underlying(), sigma_map(s.i, gm).underlying());
                          if (in_slice != after)
                            return where(g, std::string("square is ") + (in_slice ? "" : "not ") +
                                                "cartesian over x but its Sigma image " + (after ? "is" : "is not"));
                          return std::nullopt;
                        }));

  out.push_back(sampled("adjunct-square-cartesian", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          auto g0 = random_map_over(sigma(s.i, s.alpha).structure(), s.beta.structure(), rng);
                          for (int tries = 0; !g0 && tries < 8; ++tries) {
                            s = slice_instance(g, rng, sh);
                            g0 = random_map_over(sigma(s.i, s.alpha).structure(), s.beta.structure(), rng);
                          }
                          if (!g0) return std::nullopt;
                          const SliceObject& b = s.alpha;
                          const SliceObject& d = s.beta;
                          SliceObject sb = sigma(s.i, b);
                          SliceMap q = random_map_into(d, rng, sh);
                          Pullback pb = pullback(*g0, q.underlying());
                          EquivariantMap z = rng.coin() ? EquivariantMap::identity(pb.object)
                                                        : random_over(pb.object, rng, {2, 4, true});
                          EquivariantMap p = compose(pb.proj1, z);
                          EquivariantMap t = compose(pb.proj2, z);
                          SliceObject a(compose(b.structure(), p));
                          bool square_a = is_cartesian(t, p, q.underlying(), *g0);
                          SliceMap top = ind_adjunct(s.i, a, q.from(), SliceMap::make(sigma(s.i, a), q.from(), t));
                          SliceMap bottom = ind_adjunct(s.i, b, d, SliceMap::make(sb, d, *g0));
                          Restriction rc = restrict(s.i, q.from()), rd = restrict(s.i, d);
                          SliceMap right = restrict_map(rc, rd, q);
                          bool square_b =
                              is_cartesian(top.underlying(), p, right.underlying(), bottom.underlying());
                          if (square_a != square_b)
                            return where(g, std::string("square ") + (square_a ? "is" : "is not") +
                                                " cartesian but its adjunct " + (square_b ? "is" : "is not"));
                          return std::nullopt;
                        }));

  return out;
}

std::vector<Check> hoyer_appendix() {
  std::vector<Check> out;
  const Shape shape{2, 4, true};

  out.push_back(sampled("slice-of-slice-hom", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          EquivariantMap u = random_over(s.alpha.domain(), rng, sh);
                          EquivariantMap v = random_over(s.alpha.domain(), rng, sh);
                          EquivariantMap to_y = compose(s.i, s.alpha.structure());
                          long long seen = 0;
                          for_each_map_over(compose(to_y, u), compose(to_y, v), [&](const EquivariantMap& m) {
                            if (compose(v, m) == u) ++seen;
                            return true;
                          });
                          long long want = count_maps_over(u, v);
                          if (seen != want)
                            return where(g, "maps over Sigma a: " + std::to_string(seen) + ", over a: " +
                                                std::to_string(want));
                          return std::nullopt;
                        }));

  out.push_back(sampled("sliced-adjunction", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          const SliceObject& alpha = s.alpha;
                          EquivariantMap w = random_over(alpha.domain(), rng, sh);
                          EquivariantMap u = random_over(alpha.domain(), rng, sh);
                          SliceObject sa = sigma(s.i, alpha);
                          SliceObject sw = sigma(s.i, SliceObject(compose(alpha.structure(), w)));
                          Restriction r1 = restrict(s.i, sw), r0 = restrict(s.i, sa);
                          SliceMap gw = restrict_map(r1, r0, SliceMap::make(sw, sa, w));
                          AdjunctionCell eta = adjunction_cell(CellKind::UnitInd, s.i, alpha, caps);
                          if (!(eta.cell.to() == r0.object)) return where(g, "unit lands outside i* Sigma a");
                          Pullback pb = pullback(eta.cell.underlying(), gw.underlying());
                          long long l = count_maps_over(u, pb.proj1);
                          long long r = count_maps_over(u, w);
                          if (l != r)
                            return where(g, "sliced adjunction counts " + std::to_string(l) + " vs " +
                                                std::to_string(r));
                          if (!find_iso_over(pb.object, w.source(), {pb.proj1}, {w}))
                            return where(g, "pullback along the unit does not recover the object");
                          return std::nullopt;
                        }));

  out.push_back(sampled("sliced-composite", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          GSet z = random_gset(g, rng, {2, 3, false});
                          EquivariantMap j = random_over(z, rng, {2, 4, false});
                          EquivariantMap i = random_over(j.source(), rng, {2, 4, false});
                          SliceObject b(random_over(z, rng, sh));
                          EquivariantMap c = random_over(b.domain(), rng, sh);
                          Pullback once = pullback(compose(j, i), compose(b.structure(), c));
                          Restriction rj = restrict(j, SliceObject(compose(b.structure(), c)));
                          Restriction ri = restrict(i, rj.object);
                          if (!find_iso_over(once.object, ri.object.domain(), {once.proj1, once.proj2},
                                             {ri.object.structure(), compose(rj.top, ri.top)}))
                            return where(g, "restriction along j o i differs from i* j*");
                          return std::nullopt;
                        }));

  out.push_back(sampled("pullback-along-induction-counit", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          EquivariantMap gamma = random_over(s.beta.domain(), rng, sh);
                          Restriction rb = restrict(s.i, s.beta);
                          Pullback lhs = pullback(rb.top, gamma);
                          SliceObject bg(compose(s.beta.structure(), gamma));
                          Restriction rc = restrict(s.i, bg);
                          SliceMap m = restrict_map(rc, rb, SliceMap::make(bg, s.beta, gamma));
                          if (!find_iso_over(lhs.object, rc.object.domain(), {lhs.proj1, lhs.proj2},
                                             {m.underlying(), rc.top}))
                            return where(g, "pullback along the counit differs from Sigma i* over b");
                          return std::nullopt;
                        }));

  out.push_back(sampled("norm-restriction-exchange", law_groups(), 30, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps& caps) -> Verdict {
                          SliceInstance s = slice_instance(g, rng, sh);
                          Restriction rb = restrict(s.i, s.beta);
                          EquivariantMap u = random_over(rb.object.domain(), rng, sh);
                          DependentProduct lhs = pi(rb.top, SliceObject(u), caps);
                          SliceObject a(compose(rb.object.structure(), u));
                          DependentProduct pa = pi(s.i, a, caps);
                          DependentProduct pb = pi(s.i, rb.object, caps);
                          SliceMap pm = pi_map(pa, pb, SliceMap::make(a, rb.object, u));
                          AdjunctionCell eta = adjunction_cell(CellKind::UnitCoind, s.i, s.beta, caps);
                          if (!(eta.cell.to() == pb.object())) return where(g, "unit lands outside Pi i* b");
                          Pullback rhs = pullback(eta.cell.underlying(), pm.underlying());
                          if (!find_iso_over(lhs.object().domain(), rhs.object, {lhs.object().structure()},
                                             {rhs.proj1}))
                            return where(g, "Pi along the counit differs from the unit pullback of Pi_i over " +
                                                describe(s.beta.domain()));
                          return std::nullopt;
                        }));

  out.push_back(sampled("action-is-additive", law_groups(), 40, shape,
                        [](const FiniteGroup& g, Rng& rng, const Shape& sh, const Caps&) -> Verdict {
                          GSet src = rng.coin() ? terminal(g) : random_gset(g, rng, {1, 3, false});
                          GSet x = random_gset(g, rng, {2, 4, false});
                          GSet y = random_gset(g, rng, {2, 4, true});
                          SpanClass phi = random_span(x, y, rng, sh);
                          MackeyValue s1 = MackeyValue::of(random_span(src, x, rng, sh));
                          MackeyValue s2 = MackeyValue::of(random_span(src, x, rng, sh));
                          MackeyValue lhs = mackey_act(phi, mackey_add(s1, s2));
                          MackeyValue rhs = mackey_add(mackey_act(phi, s1), mackey_act(phi, s2));
                          if (lhs != rhs) return where(g, "action not additive: " + describe(lhs) + " vs " + describe(rhs));
                          if (!mackey_act(phi, mackey_zero(src, x)).is_zero()) return where(g, "action moves zero");
                          return std::nullopt;
                        }));

  return out;
}

}  // namespace tambara::suites
