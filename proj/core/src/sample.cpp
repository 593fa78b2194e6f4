#include "tambara/sample.hpp"

#include <functional>

namespace tambara {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<int> subgroups_below(const FiniteGroup& g, ElemMask mask, int max_index) {
  std::vector<int> out;
  for (int id = 0; id < g.subgroup_count(); ++id) {
    const Subgroup& h = g.subgroup(id);
    if ((h.mask & ~mask) == 0 && g.order() / h.order() <= max_index) out.push_back(id);
  }
  return out;
}

Assembled assemble(const FiniteGroup& g, const std::vector<int>& subgroup_ids, const std::vector<GSet>& targets,
                   const std::vector<std::vector<int>>& images) {
  GSet x = orbit_sum(g, subgroup_ids);
  Assembled out{x, {}};
  for (std::size_t l = 0; l < targets.size(); ++l) out.legs.push_back(extend_from_reps(x, targets[l], images[l]));
  return out;
}

namespace {

ElemMask full_mask(const FiniteGroup& g) { return g.subgroup(g.whole_group()).mask; }

int orbit_budget(Rng& rng, const Shape& shape) {
  int lo = shape.allow_empty ? 0 : 1;
  return lo + rng.below(shape.max_orbits - lo + 1);
}

// Adds orbits over the given targets; each orbit picks a point per target and
// a subgroup of the intersected stabilizers.
Assembled grow(const FiniteGroup& g, Rng& rng, const Shape& shape, const std::vector<GSet>& targets) {
  int want = orbit_budget(rng, shape);
  int left = shape.max_points;
  std::vector<int> ids;
  std::vector<std::vector<int>> images(targets.size());
  for (const GSet& t : targets)
    if (t.size() == 0) want = 0;
  for (int k = 0; k < want; ++k) {
    ElemMask m = full_mask(g);
    std::vector<int> pts;
    for (const GSet& t : targets) {
      int p = rng.below(t.size());
      pts.push_back(p);
      m &= g.subgroup(t.stabilizer(p)).mask;
    }
    auto cands = subgroups_below(g, m, left);
    if (cands.empty()) break;
    int h = rng.pick(cands);
    ids.push_back(h);
    left -= g.order() / g.subgroup(h).order();
    for (std::size_t l = 0; l < targets.size(); ++l) images[l].push_back(pts[l]);
  }
  return assemble(g, ids, targets, images);
}

}  // namespace

GSet random_gset(const FiniteGroup& g, Rng& rng, const Shape& shape) { return grow(g, rng, shape, {}).object; }

EquivariantMap random_over(const GSet& x, Rng& rng, const Shape& shape) {
  return grow(x.group(), rng, shape, {x}).legs[0];
}

std::optional<EquivariantMap> random_map(const GSet& x, const GSet& y, Rng& rng) {
  const FiniteGroup& g = x.group();
  std::vector<int> reps;
  for (int o = 0; o < x.orbit_count(); ++o) {
    const Subgroup& s = g.subgroup(x.stabilizer(x.orbit_rep(o)));
    std::vector<int> cands;
    for (int q = 0; q < y.size(); ++q)
      if ((s.mask & ~g.subgroup(y.stabilizer(q)).mask) == 0) cands.push_back(q);
    if (cands.empty()) return std::nullopt;
    reps.push_back(rng.pick(cands));
  }
  return extend_from_reps(x, y, reps);
}

SpanClass random_span(const GSet& x, const GSet& y, Rng& rng, const Shape& shape) {
  Assembled a = grow(x.group(), rng, shape, {x, y});
  return SpanClass(Span::make(a.legs[0], a.legs[1]));
}

BispanClass random_bispan(const GSet& x, const GSet& y, Rng& rng, const Shape& middle, const Shape& top) {
  EquivariantMap t = random_over(y, rng, middle);
  Assembled z = grow(x.group(), rng, top, {x, t.source()});
  return BispanClass(Bispan::make(z.legs[0], z.legs[1], t));
}

std::vector<EquivariantMap> objects_over(const GSet& q, int max_points) {
  const FiniteGroup& g = q.group();
  struct Type {
    int point;
    int subgroup;
    int size;
  };
  std::vector<Type> types;
  for (int o = 0; o < q.orbit_count(); ++o) {
    int p = q.orbit_rep(o);
    const Subgroup& h = g.subgroup(q.stabilizer(p));
    for (int k : subgroups_below(g, h.mask, g.order())) {
      bool least = true;
      for (Elem e : h.elements) least = least && g.conjugate_subgroup(k, e) >= k;
      int size = g.order() / g.subgroup(k).order();
      if (least && size <= max_points) types.push_back({p, k, size});
    }
  }
  std::vector<EquivariantMap> out;
  std::vector<int> ids, images;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    out.push_back(assemble(g, ids, {q}, {images}).legs[0]);
    for (std::size_t t = from; t < types.size(); ++t) {
      if (types[t].size > left) continue;
      ids.push_back(types[t].subgroup);
      images.push_back(types[t].point);
      rec(t, left - types[t].size);
      ids.pop_back();
      images.pop_back();
    }
  };
  rec(0, max_points);
  return out;
}

SpanClass random_span_over(const SliceObject& alpha, const SliceObject& beta, Rng& rng, const Shape& shape) {
  Pullback p = pullback(alpha.structure(), beta.structure());
  EquivariantMap m = random_over(p.object, rng, shape);
  return SpanClass(Span::make(compose(p.proj1, m), compose(p.proj2, m)));
}

BispanClass random_bispan_over(const SliceObject& alpha, const SliceObject& beta, Rng& rng, const Shape& middle,
                               const Shape& top) {
  EquivariantMap f = random_over(beta.domain(), rng, middle);
  Pullback p = pullback(alpha.structure(), compose(beta.structure(), f));
  EquivariantMap m = random_over(p.object, rng, top);
  return BispanClass(Bispan::make(compose(p.proj1, m), compose(p.proj2, m), f));
}

}  // namespace tambara
