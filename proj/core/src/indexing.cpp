#include "tambara/indexing.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tambara/error.hpp"

namespace tambara {

namespace {

std::vector<int> class_reps(const FiniteGroup& g) {
  std::vector<int> reps;
  for (const auto& c : g.conjugacy_classes()) reps.push_back(c.front());
  return reps;
}

std::string pair_label(const FiniteGroup& g, int h, int k) {
  return "(" + subgroup_label(g, h) + ", " + subgroup_label(g, k) + ")";
}

std::string map_label(const EquivariantMap& f) { return describe(f.source()) + " -> " + describe(f.target()); }

void visit_maps(const GSet& x, const GSet& y, const std::function<void(const EquivariantMap&)>& fn) {
  for_each_map(x, y, [&](const EquivariantMap& m) {
    fn(m);
    return true;
  });
}

}  // namespace

std::vector<GSet> window_objects(const FiniteGroup& g, int max_orbits) {
  std::vector<int> reps = class_reps(g);
  std::vector<GSet> out;
  std::vector<int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!pick.empty()) out.push_back(orbit_sum(g, pick));
    if (static_cast<int>(pick.size()) == max_orbits) return;
    for (std::size_t k = from; k < reps.size(); ++k) {
      pick.push_back(reps[k]);
      rec(k);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

std::optional<std::string> transfer_axiom_violation(const TransferRelation& o) {
  const FiniteGroup& g = o.group();
  int n = g.subgroup_count();
  for (int h = 0; h < n; ++h)
    if (!o.admits(h, h)) return "not reflexive at " + subgroup_label(g, h);
  for (auto [h, k] : o.pairs()) {
    for (Elem e = 0; e < g.order(); ++e) {
      int ch = g.conjugate_subgroup(h, e), ck = g.conjugate_subgroup(k, e);
      if (!o.admits(ch, ck)) return "conjugate of " + pair_label(g, h, k) + " missing";
    }
    for (int l = 0; l < n; ++l)
      if (g.is_subgroup_of(l, k) && !o.admits(g.intersect(h, l), l))
        return "restriction of " + pair_label(g, h, k) + " to " + subgroup_label(g, l) + " missing";
    for (int l = 0; l < n; ++l)
      if (o.admits(k, l) && !o.admits(h, l)) return "composite " + pair_label(g, h, l) + " missing";
  }
  return std::nullopt;
}

TransferRelation transfer_closure(const FiniteGroup& g, const std::vector<std::pair<int, int>>& pairs) {
  int n = g.subgroup_count();
  std::vector<char> adm(static_cast<std::size_t>(n) * n, 0);
  for (int h = 0; h < n; ++h) adm[h * n + h] = 1;
  for (auto [h, k] : pairs) {
    if (h < 0 || k < 0 || h >= n || k >= n || !g.is_subgroup_of(h, k))
      fail(ErrorKind::MalformedSpec, "transfer_closure: pair is not (H, K) with H <= K");
    adm[h * n + k] = 1;
  }
  bool grew = true;
  auto add = [&](int h, int k) {
    if (!adm[h * n + k]) {
      adm[h * n + k] = 1;
      grew = true;
    }
  };
  while (grew) {
    grew = false;
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        if (!adm[h * n + k]) continue;
        for (Elem e = 0; e < g.order(); ++e) add(g.conjugate_subgroup(h, e), g.conjugate_subgroup(k, e));
        for (int l = 0; l < n; ++l) {
          if (g.is_subgroup_of(l, k)) add(g.intersect(h, l), l);
          if (adm[k * n + l]) add(h, l);
        }
      }
  }
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      if (adm[h * n + k]) out.emplace_back(h, k);
  return TransferRelation(g, out);
}

Certificate validate_indexing(const TransferRelation& o, const Window& w) {
  const FiniteGroup& g = o.group();
  Certificate cert;
  auto fail_with = [&](std::string s) {
    if (cert.pass) cert.witness = std::move(s);
    cert.pass = false;
  };
  std::vector<GSet> objects = window_objects(g, w.max_orbits);
  std::vector<GSet> orbits = window_objects(g, 1);
  // wide: every isomorphism of the window
  for (const GSet& x : objects) {
    visit_maps(x, x, [&](const EquivariantMap& m) {
      if (!is_iso(m)) return;
      ++cert.checked;
      if (!contains_map(o, m)) fail_with("isomorphism " + map_label(m) + " not admitted");
    });
  }
  // pullback stable: f in O over an orbit b, pulled back along any orbit map into b
  for (const GSet& b : orbits)
    for (const GSet& x : objects)
      visit_maps(x, b, [&](const EquivariantMap& f) {
        if (!contains_map(o, f)) return;
        for (const GSet& c : orbits)
          visit_maps(c, b, [&](const EquivariantMap& h) {
            ++cert.checked;
            Pullback pb = pullback(h, f);
            if (!contains_map(o, pb.proj1))
              fail_with("pullback of " + map_label(f) + " along " + map_label(h) + " gives " + map_label(pb.proj1) +
                        " outside the relation");
          });
      });
  // closed under composition of orbit maps
  for (const GSet& x : orbits)
    for (const GSet& y : orbits)
      visit_maps(x, y, [&](const EquivariantMap& f) {
        if (!contains_map(o, f)) return;
        for (const GSet& z : orbits)
          visit_maps(y, z, [&](const EquivariantMap& h) {
            if (!contains_map(o, h)) return;
            ++cert.checked;
            EquivariantMap hf = compose(h, f);
            if (!contains_map(o, hf)) fail_with("composite " + map_label(hf) + " not admitted");
          });
      });
  // finite-coproduct complete
  for (const GSet& x : objects) {
    ++cert.checked;
    if (!contains_map(o, initial_map(x))) fail_with("initial map into " + describe(x) + " not admitted");
    for (const GSet& y : objects) {
      if (x.orbit_count() + y.orbit_count() > w.max_orbits) continue;
      Coproduct c = coproduct(x, y);
      cert.checked += 2;
      if (!contains_map(o, c.inj1) || !contains_map(o, c.inj2))
        fail_with("coproduct injections of " + describe(c.object) + " not admitted");
      for (const GSet& z : orbits)
        visit_maps(x, z, [&](const EquivariantMap& f) {
          if (!contains_map(o, f)) return;
          visit_maps(y, z, [&](const EquivariantMap& h) {
            if (!contains_map(o, h)) return;
            ++cert.checked;
            if (!contains_map(o, copair(f, h))) fail_with("copairing into " + describe(z) + " not admitted");
          });
        });
    }
  }
  return cert;
}

namespace {

// Every (i in O_m : x -> y over an orbit y, alpha in O_a : a -> x) in the window.
void for_each_pi_instance(const FiniteGroup& g, const TransferRelation& additive,
                          const TransferRelation& multiplicative, const Window& w,
                          const std::function<void(const EquivariantMap&, const EquivariantMap&)>& fn) {
  std::vector<GSet> sources = window_objects(g, w.pi_orbits);
  std::vector<GSet> orbits = window_objects(g, 1);
  for (const GSet& y : orbits)
    for (const GSet& x : sources)
      visit_maps(x, y, [&](const EquivariantMap& i) {
        if (!contains_map(multiplicative, i)) return;
        for (const GSet& a : sources)
          visit_maps(a, x, [&](const EquivariantMap& alpha) {
            if (contains_map(additive, alpha)) fn(i, alpha);
          });
      });
}

}  // namespace

Certificate is_compatible_pair(const TransferRelation& additive, const TransferRelation& multiplicative,
                               const Window& w, const Caps& caps) {
  Certificate cert;
  for_each_pi_instance(additive.group(), additive, multiplicative, w,
                       [&](const EquivariantMap& i, const EquivariantMap& alpha) {
                         try {
                           DependentProduct d = pi(i, SliceObject(alpha), caps);
                           ++cert.checked;
                           if (!contains_map(additive, d.object().structure()) && cert.pass) {
                             cert.pass = false;
                             cert.witness = "Pi along " + map_label(i) + " of " + map_label(alpha) + " is " +
                                            map_label(d.object().structure()) + ", not additive";
                           }
                         } catch (const Error& e) {
                           if (e.kind() != ErrorKind::SizeCapExceeded) throw;
                           ++cert.skipped;
                         }
                       });
  return cert;
}

std::optional<SplitSection> split_section(const EquivariantMap& f, const Caps& caps) {
  const GSet& x = f.source();
  const GSet& y = f.target();
  SliceObject fold(codiagonal(x));
  SliceObject top = SliceObject::identity(y);
  Restriction r = restrict(f, top);
  // f^* id_y is id_x up to the pairing p -> (p, f p); send it to the first copy.
  std::vector<int> h(r.object.domain().size());
  for (int k = 0; k < r.object.domain().size(); ++k) h[k] = r.square.proj1(k);
  SliceMap first = SliceMap::make(r.object, fold, EquivariantMap::make(r.object.domain(), fold.domain(), h));
  SliceMap j = coind_adjunct(f, top, fold, first, caps);
  const GSet& d = j.to().domain();
  std::vector<char> hit(d.size(), 0);
  for (int q = 0; q < y.size(); ++q) hit[j(q)] = 1;
  std::vector<int> rest;
  for (int p = 0; p < d.size(); ++p)
    if (!hit[p]) rest.push_back(p);
  for (int p : rest)
    for (Elem e = 0; e < d.group().order(); ++e)
      if (hit[d.act(e, p)]) return std::nullopt;
  SubSet comp = sub_gset(d, rest);
  EquivariantMap both = copair(j.underlying(), comp.inclusion);
  auto inv = inverse(both);
  if (!inv) return std::nullopt;
  return SplitSection{f, j, comp, IsoWitness{both, *inv}};
}

Certificate is_separable(const IndexPair& index, const Window& w, const Caps& caps) {
  Certificate cert;
  const FiniteGroup& g = index.multiplicative.group();
  std::vector<GSet> sources = window_objects(g, w.pi_orbits);
  for (const GSet& y : window_objects(g, 1))
    for (const GSet& x : sources)
      visit_maps(x, y, [&](const EquivariantMap& f) {
        if (!contains_map(index.multiplicative, f)) return;
        try {
          auto s = split_section(f, caps);
          ++cert.checked;
          if (!s) {
            if (cert.pass) cert.witness = "no complement for j at " + map_label(f);
            cert.pass = false;
            return;
          }
          cert.details.push_back(map_label(f) + ": complement " + describe(s->complement.object));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SizeCapExceeded) throw;
          ++cert.skipped;
        }
      });
  return cert;
}

bool SlicedIndex::additive(const SliceMap& f) const { return contains_map(index_.additive, f.underlying()); }
bool SlicedIndex::multiplicative(const SliceMap& f) const {
  return contains_map(index_.multiplicative, f.underlying());
}

Certificate SlicedIndex::compatible(const Window& w, const Caps& caps) const {
  Certificate cert;
  const FiniteGroup& g = anchor_.group();
  std::vector<GSet> sources = window_objects(g, w.pi_orbits);
  // i : alpha -> beta over the anchor, gm : gamma -> alpha; Pi in the slice is Pi of the underlying maps.
  for (const GSet& b : sources)
    visit_maps(b, anchor_, [&](const EquivariantMap& beta) {
      for (const GSet& a : sources)
        visit_maps(a, b, [&](const EquivariantMap& i) {
          SliceMap im = SliceMap::trusted(SliceObject(compose(beta, i)), SliceObject(beta), i);
          if (!multiplicative(im)) return;
          for (const GSet& c : sources)
            visit_maps(c, a, [&](const EquivariantMap& gm) {
              if (!contains_map(index_.additive, gm)) return;
              try {
                DependentProduct d = pi(i, SliceObject(gm), caps);
                ++cert.checked;
                SliceMap out = SliceMap::trusted(SliceObject(compose(beta, d.object().structure())), SliceObject(beta),
                                                 d.object().structure());
                if (!additive(out) && cert.pass) {
                  cert.pass = false;
                  cert.witness = "Pi along " + map_label(i) + " over " + describe(anchor_) + " leaves the relation";
                }
              } catch (const Error& e) {
                if (e.kind() != ErrorKind::SizeCapExceeded) throw;
                ++cert.skipped;
              }
            });
        });
    });
  return cert;
}

SlicedIndex slice_index(const IndexPair& index, const GSet& x) { return SlicedIndex(index, x); }

std::vector<TransferRelation> enumerate_transfer_relations(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order)
    fail(ErrorKind::GroupTooLarge, "transfer relations are enumerated for groups of order at most " +
                                       std::to_string(max_order));
  int n = g.subgroup_count();
  std::vector<std::pair<int, int>> proper;
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      if (h != k && g.is_subgroup_of(h, k)) proper.emplace_back(h, k);
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<TransferRelation> found;
  std::vector<TransferRelation> queue{TransferRelation::trivial(g)};
  seen.insert(queue.front().pairs());
  while (!queue.empty()) {
    TransferRelation r = queue.back();
    queue.pop_back();
    found.push_back(r);
    for (auto hk : proper) {
      if (r.admits(hk.first, hk.second)) continue;
      auto ps = r.pairs();
      ps.push_back(hk);
      TransferRelation next = transfer_closure(g, ps);
      if (seen.insert(next.pairs()).second) queue.push_back(next);
    }
  }
  std::sort(found.begin(), found.end(), [](const TransferRelation& a, const TransferRelation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.pairs() < b.pairs();
  });
  return found;
}

}  // namespace tambara
