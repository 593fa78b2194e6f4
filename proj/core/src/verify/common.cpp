#include <map>
#include <mutex>

#include "suites.hpp"
#include "tambara/indexing.hpp"

namespace tambara::suites {

const FiniteGroup& group_named(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, FiniteGroup> groups;
  std::lock_guard<std::mutex> lock(mu);
  auto it = groups.find(name);
  if (it == groups.end()) it = groups.emplace(name, builtin_group(name)).first;
  return it->second;
}

const std::vector<std::string>& law_groups() {
  static const std::vector<std::string> g = {"C2", "C3", "C4", "S3"};
  return g;
}

Shape shrunk(Shape s, int shrink) {
  s.max_orbits = std::max(1, s.max_orbits - shrink);
  s.max_points = std::max(1, s.max_points - 2 * shrink);
  return s;
}

Check sampled(std::string name, const std::vector<std::string>& groups, int per_group, Shape shape, SampledBody body) {
  Check c;
  c.name = std::move(name);
  c.cases = per_group * static_cast<int>(groups.size());
  c.run = [groups, shape, body = std::move(body)](const CaseContext& ctx) {
    const FiniteGroup& g = group_named(groups[ctx.index % groups.size()]);
    Rng rng(ctx.seed);
    return body(g, rng, shrunk(shape, ctx.shrink), ctx.caps);
  };
  return c;
}

std::vector<GSet> window(const std::vector<std::string>& groups, int max_orbits) {
  std::vector<GSet> out;
  for (const auto& n : groups)
    for (const GSet& x : window_objects(group_named(n), max_orbits)) out.push_back(x);
  return out;
}

std::vector<std::pair<GSet, GSet>> window_pairs(const std::vector<std::string>& groups, int max_orbits) {
  std::vector<std::pair<GSet, GSet>> out;
  for (const auto& n : groups) {
    auto objs = window_objects(group_named(n), max_orbits);
    for (const GSet& x : objs)
      for (const GSet& y : objs) out.emplace_back(x, y);
  }
  return out;
}

const std::vector<TransferRelation>& relations_of(const std::string& group) {
  static std::mutex mu;
  static std::map<std::string, std::vector<TransferRelation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(group);
  if (it == cache.end()) it = cache.emplace(group, enumerate_transfer_relations(group_named(group))).first;
  return it->second;
}

std::multiset<std::pair<int, int>> orbit_profile(const GSet& x) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& o : orbit_decomposition(x))
    out.emplace(static_cast<int>(o.points.size()), x.group().subgroup(o.stabilizer).order());
  return out;
}

SliceInstance slice_instance(const FiniteGroup& g, Rng& rng, const Shape& shape) {
  GSet y = random_gset(g, rng, {std::min(2, shape.max_orbits), std::min(3, shape.max_points), false});
  EquivariantMap i = random_over(y, rng, {shape.max_orbits, shape.max_points, false});
  SliceObject alpha(random_over(i.source(), rng, shape));
  SliceObject beta(random_over(y, rng, shape));
  return {i, alpha, beta};
}

std::optional<EquivariantMap> random_map_over(const EquivariantMap& alpha, const EquivariantMap& beta, Rng& rng) {
  const GSet& x = alpha.source();
  const GSet& y = beta.source();
  const FiniteGroup& g = x.group();
  std::vector<int> images;
  for (int o = 0; o < x.orbit_count(); ++o) {
    int p = x.orbit_rep(o);
    std::vector<int> cands;
    for (int c = 0; c < y.size(); ++c)
      if (beta(c) == alpha(p) && g.is_subgroup_of(x.stabilizer(p), y.stabilizer(c))) cands.push_back(c);
    if (cands.empty()) return std::nullopt;
    images.push_back(rng.pick(cands));
  }
  return extend_from_reps(x, y, images);
}

SliceMap random_map_into(const SliceObject& alpha, Rng& rng, const Shape& shape) {
  EquivariantMap m = random_over(alpha.domain(), rng, shape);
  return SliceMap::make(SliceObject(compose(alpha.structure(), m)), alpha, m);
}

}  // namespace tambara::suites
