#include "tambara/gset.hpp"

#include <algorithm>
#include <map>

#include "tambara/error.hpp"

namespace tambara {
namespace detail {

struct GSetData {
  FiniteGroup group;
  int size = 0;
  std::vector<int> act;
  std::vector<int> orbit_of;
  std::vector<std::vector<int>> orbits;
  std::vector<int> stabilizer;

  GSetData(FiniteGroup g, int n, std::vector<int> a) : group(std::move(g)), size(n), act(std::move(a)) {}

  void index_orbits() {
    const int order = group.order();
    orbit_of.assign(size, -1);
    stabilizer.assign(size, 0);
    for (int p = 0; p < size; ++p) {
      if (orbit_of[p] >= 0) continue;
      int o = static_cast<int>(orbits.size());
      orbits.emplace_back();
      for (int g = 0; g < order; ++g) {
        int q = act[g * size + p];
        if (orbit_of[q] < 0) {
          orbit_of[q] = o;
          orbits[o].push_back(q);
        }
      }
      std::sort(orbits[o].begin(), orbits[o].end());
    }
    for (int p = 0; p < size; ++p) {
      ElemMask m = 0;
      for (int g = 0; g < order; ++g)
        if (act[g * size + p] == p) m |= ElemMask{1} << g;
      stabilizer[p] = group.subgroup_id(m);
    }
  }
};

}  // namespace detail

namespace {

void check_action(const FiniteGroup& g, int size, const std::vector<int>& act) {
  const int n = g.order();
  if (size < 0 || static_cast<long long>(act.size()) != static_cast<long long>(n) * size)
    fail(ErrorKind::NotAnAction, "action table has wrong shape");
  for (int v : act)
    if (v < 0 || v >= size) fail(ErrorKind::NotAnAction, "action value out of range");
  for (int p = 0; p < size; ++p)
    if (act[g.identity() * size + p] != p) fail(ErrorKind::NotAnAction, "identity moves point " + std::to_string(p));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int p = 0; p < size; ++p)
        if (act[a * size + act[b * size + p]] != act[g.mul(a, b) * size + p])
          fail(ErrorKind::NotAnAction, "composition law fails at point " + std::to_string(p));
}

}  // namespace

GSet GSet::from_action(FiniteGroup g, int size, std::vector<int> act) {
  check_action(g, size, act);
  return trusted(std::move(g), size, std::move(act));
}

GSet GSet::trusted(FiniteGroup g, int size, std::vector<int> act) {
  auto d = std::make_shared<detail::GSetData>(std::move(g), size, std::move(act));
  d->index_orbits();
  return GSet(std::move(d));
}

const FiniteGroup& GSet::group() const { return d_->group; }
int GSet::size() const { return d_->size; }
int GSet::act(Elem g, int p) const { return d_->act[g * d_->size + p]; }
const std::vector<int>& GSet::action_table() const { return d_->act; }
int GSet::orbit_count() const { return static_cast<int>(d_->orbits.size()); }
int GSet::orbit_of(int p) const { return d_->orbit_of[p]; }
const std::vector<int>& GSet::orbit(int o) const { return d_->orbits[o]; }
int GSet::stabilizer(int p) const { return d_->stabilizer[p]; }

bool GSet::operator==(const GSet& o) const {
  if (d_ == o.d_) return true;
  return d_->size == o.d_->size && d_->act == o.d_->act && d_->group == o.d_->group;
}

void validate_gset(const GSet& x) { check_action(x.group(), x.size(), x.action_table()); }

EquivariantMap EquivariantMap::make(GSet source, GSet target, std::vector<int> values) {
  if (source.group() != target.group()) fail(ErrorKind::GroupMismatch, "map between G-sets over different groups");
  if (static_cast<int>(values.size()) != source.size()) fail(ErrorKind::MalformedSpec, "map has wrong length");
  for (int v : values)
    if (v < 0 || v >= target.size()) fail(ErrorKind::MalformedSpec, "map value out of range");
  const int n = source.group().order();
  for (int g = 0; g < n; ++g)
    for (int p = 0; p < source.size(); ++p)
      if (values[source.act(g, p)] != target.act(g, values[p]))
        fail(ErrorKind::NotEquivariant, "map fails equivariance at point " + std::to_string(p));
  return EquivariantMap(std::move(source), std::move(target), std::move(values));
}

EquivariantMap EquivariantMap::trusted(GSet source, GSet target, std::vector<int> values) {
  return EquivariantMap(std::move(source), std::move(target), std::move(values));
}

EquivariantMap EquivariantMap::identity(const GSet& x) {
  std::vector<int> v(x.size());
  for (int p = 0; p < x.size(); ++p) v[p] = p;
  return EquivariantMap(x, x, std::move(v));
}

EquivariantMap compose(const EquivariantMap& g, const EquivariantMap& f) {
  if (f.target() != g.source()) fail(ErrorKind::NotComposable, "compose: codomain and domain differ");
  std::vector<int> v(f.source().size());
  for (int p = 0; p < f.source().size(); ++p) v[p] = g(f(p));
  return EquivariantMap::trusted(f.source(), g.target(), std::move(v));
}

GSet make_orbit(const FiniteGroup& g, int subgroup_id) {
  if (subgroup_id < 0 || subgroup_id >= g.subgroup_count()) fail(ErrorKind::NotASubgroup, "bad subgroup id");
  const Subgroup& h = g.subgroup(subgroup_id);
  const int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<Elem> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem k : h.elements) coset_of[g.mul(x, k)] = c;
  }
  const int size = static_cast<int>(reps.size());
  std::vector<int> act(static_cast<std::size_t>(n) * size);
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < size; ++c) act[k * size + c] = coset_of[g.mul(k, reps[c])];
  return GSet::trusted(g, size, std::move(act));
}

GSet make_orbit(const FiniteGroup& g, const Subgroup& h) {
  int id = g.subgroup_id(h.mask);
  if (id < 0) fail(ErrorKind::NotASubgroup, "make_orbit expects a subgroup");
  return make_orbit(g, id);
}

std::vector<OrbitInfo> orbit_decomposition(const GSet& x) {
  std::vector<OrbitInfo> out;
  for (int o = 0; o < x.orbit_count(); ++o) {
    OrbitInfo info;
    info.points = x.orbit(o);
    info.stabilizer = x.stabilizer(x.orbit_rep(o));
    info.stabilizer_class = x.group().class_of(info.stabilizer);
    out.push_back(std::move(info));
  }
  return out;
}

namespace {

// Least (leg values..., stabilizer) over the orbit, and the point attaining it.
std::pair<std::vector<int>, int> orbit_min(const GSet& x, int o, const std::vector<EquivariantMap>& legs) {
  std::vector<int> best;
  int arg = -1;
  std::vector<int> cur(legs.size() + 1);
  for (int p : x.orbit(o)) {
    for (std::size_t k = 0; k < legs.size(); ++k) cur[k] = legs[k](p);
    cur[legs.size()] = x.stabilizer(p);
    if (arg < 0 || cur < best) {
      best = cur;
      arg = p;
    }
  }
  return {best, arg};
}

}  // namespace

std::vector<std::vector<int>> orbit_signatures(const GSet& x, const std::vector<EquivariantMap>& legs) {
  std::vector<std::vector<int>> sig;
  sig.reserve(x.orbit_count());
  for (int o = 0; o < x.orbit_count(); ++o) sig.push_back(orbit_min(x, o, legs).first);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::optional<IsoWitness> find_iso_over(const GSet& x, const GSet& y, const std::vector<EquivariantMap>& legs_x,
                                        const std::vector<EquivariantMap>& legs_y) {
  if (x.group() != y.group() || x.size() != y.size() || x.orbit_count() != y.orbit_count()) return std::nullopt;
  if (legs_x.size() != legs_y.size()) return std::nullopt;
  for (std::size_t k = 0; k < legs_x.size(); ++k)
    if (legs_x[k].target() != legs_y[k].target()) return std::nullopt;
  std::map<std::vector<int>, std::vector<int>> pool;
  for (int o = 0; o < y.orbit_count(); ++o) {
    auto [sig, p] = orbit_min(y, o, legs_y);
    pool[sig].push_back(p);
  }
  const int n = x.group().order();
  std::vector<int> fwd(x.size(), -1), bwd(y.size(), -1);
  for (int o = 0; o < x.orbit_count(); ++o) {
    auto [sig, p] = orbit_min(x, o, legs_x);
    auto it = pool.find(sig);
    if (it == pool.end() || it->second.empty()) return std::nullopt;
    int q = it->second.back();
    it->second.pop_back();
    for (int g = 0; g < n; ++g) {
      fwd[x.act(g, p)] = y.act(g, q);
      bwd[y.act(g, q)] = x.act(g, p);
    }
  }
  return IsoWitness{EquivariantMap::trusted(x, y, fwd), EquivariantMap::trusted(y, x, bwd)};
}

std::optional<IsoWitness> find_iso(const GSet& x, const GSet& y) { return find_iso_over(x, y, {}, {}); }

GSet terminal(const FiniteGroup& g) { return GSet::trusted(g, 1, std::vector<int>(g.order(), 0)); }
GSet initial(const FiniteGroup& g) { return GSet::trusted(g, 0, {}); }

EquivariantMap terminal_map(const GSet& x) {
  return EquivariantMap::trusted(x, terminal(x.group()), std::vector<int>(x.size(), 0));
}

EquivariantMap initial_map(const GSet& x) { return EquivariantMap::trusted(initial(x.group()), x, {}); }

Pullback pullback(const EquivariantMap& f, const EquivariantMap& g) {
  if (f.source().group() != g.source().group()) fail(ErrorKind::GroupMismatch, "pullback over different groups");
  if (f.target() != g.target()) fail(ErrorKind::NotComposable, "pullback legs have different targets");
  const GSet& a = f.source();
  const GSet& b = g.source();
  const int zs = f.target().size();
  std::vector<std::vector<int>> fiber(zs);
  Pullback pb{initial(a.group()), EquivariantMap::identity(a), EquivariantMap::identity(b), {}, {}};
  pb.position.assign(b.size(), 0);
  for (int q = 0; q < b.size(); ++q) {
    pb.position[q] = static_cast<int>(fiber[g(q)].size());
    fiber[g(q)].push_back(q);
  }
  pb.offset.assign(a.size(), 0);
  std::vector<int> left, right;
  for (int p = 0; p < a.size(); ++p) {
    pb.offset[p] = static_cast<int>(left.size());
    for (int q : fiber[f(p)]) {
      left.push_back(p);
      right.push_back(q);
    }
  }
  const int size = static_cast<int>(left.size());
  const int n = a.group().order();
  std::vector<int> act(static_cast<std::size_t>(n) * size);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < size; ++i) act[k * size + i] = pb.index(a.act(k, left[i]), b.act(k, right[i]));
  pb.object = GSet::trusted(a.group(), size, std::move(act));
  pb.proj1 = EquivariantMap::trusted(pb.object, a, std::move(left));
  pb.proj2 = EquivariantMap::trusted(pb.object, b, std::move(right));
  return pb;
}

Product product(const GSet& x, const GSet& y) {
  if (x.group() != y.group()) fail(ErrorKind::GroupMismatch, "product over different groups");
  Pullback pb = pullback(terminal_map(x), terminal_map(y));
  return Product{pb.object, pb.proj1, pb.proj2};
}

Coproduct coproduct(const GSet& x, const GSet& y) {
  if (x.group() != y.group()) fail(ErrorKind::GroupMismatch, "coproduct over different groups");
  const int n = x.group().order();
  const int size = x.size() + y.size();
  std::vector<int> act(static_cast<std::size_t>(n) * size);
  for (int k = 0; k < n; ++k) {
    for (int p = 0; p < x.size(); ++p) act[k * size + p] = x.act(k, p);
    for (int q = 0; q < y.size(); ++q) act[k * size + x.size() + q] = x.size() + y.act(k, q);
  }
  GSet s = GSet::trusted(x.group(), size, std::move(act));
  std::vector<int> i1(x.size()), i2(y.size());
  for (int p = 0; p < x.size(); ++p) i1[p] = p;
  for (int q = 0; q < y.size(); ++q) i2[q] = x.size() + q;
  return Coproduct{s, EquivariantMap::trusted(x, s, std::move(i1)), EquivariantMap::trusted(y, s, std::move(i2))};
}

bool is_epi(const EquivariantMap& f) {
  std::vector<bool> hit(f.target().size(), false);
  for (int v : f.values()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_mono(const EquivariantMap& f) {
  std::vector<bool> hit(f.target().size(), false);
  for (int v : f.values()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_iso(const EquivariantMap& f) { return f.source().size() == f.target().size() && is_mono(f); }

std::optional<EquivariantMap> inverse(const EquivariantMap& f) {
  if (!is_iso(f)) return std::nullopt;
  std::vector<int> v(f.target().size());
  for (int p = 0; p < f.source().size(); ++p) v[f(p)] = p;
  return EquivariantMap::trusted(f.target(), f.source(), std::move(v));
}

EquivariantMap codiagonal(const GSet& x) {
  auto id = EquivariantMap::identity(x);
  return copair(id, id);
}

EquivariantMap copair(const EquivariantMap& f, const EquivariantMap& g) {
  if (f.target() != g.target()) fail(ErrorKind::NotComposable, "copair: targets differ");
  Coproduct c = coproduct(f.source(), g.source());
  std::vector<int> v = f.values();
  v.insert(v.end(), g.values().begin(), g.values().end());
  return EquivariantMap::trusted(c.object, f.target(), std::move(v));
}

EquivariantMap coproduct_map(const EquivariantMap& f, const EquivariantMap& g) {
  Coproduct s = coproduct(f.source(), g.source());
  Coproduct t = coproduct(f.target(), g.target());
  std::vector<int> v = f.values();
  for (int q : g.values()) v.push_back(f.target().size() + q);
  return EquivariantMap::trusted(s.object, t.object, std::move(v));
}

EquivariantMap pair_into_product(const EquivariantMap& f, const EquivariantMap& g) {
  if (f.source() != g.source()) fail(ErrorKind::NotComposable, "pair: sources differ");
  Product p = product(f.target(), g.target());
  std::vector<int> v(f.source().size());
  for (int z = 0; z < f.source().size(); ++z) v[z] = f(z) * g.target().size() + g(z);
  return EquivariantMap::trusted(f.source(), p.object, std::move(v));
}

SubSet sub_gset(const GSet& x, const std::vector<int>& points) {
  std::vector<int> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<int> local(x.size(), -1);
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) local[pts[i]] = i;
  const int n = x.group().order();
  const int size = static_cast<int>(pts.size());
  std::vector<int> act(static_cast<std::size_t>(n) * size);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < size; ++i) {
      int q = local[x.act(k, pts[i])];
      if (q < 0) fail(ErrorKind::NotAnAction, "point set is not closed under the action");
      act[k * size + i] = q;
    }
  GSet s = GSet::trusted(x.group(), size, std::move(act));
  return SubSet{s, EquivariantMap::trusted(s, x, pts)};
}

EquivariantMap pullback_factor(const Pullback& pb, const EquivariantMap& m1, const EquivariantMap& m2) {
  if (m1.source() != m2.source()) fail(ErrorKind::NotComposable, "cone legs have different sources");
  std::vector<int> v(m1.source().size());
  const auto& f_vals = pb.proj1.values();
  for (int z = 0; z < m1.source().size(); ++z) {
    int idx = pb.index(m1(z), m2(z));
    if (idx < 0 || idx >= pb.object.size() || f_vals[idx] != m1(z) || pb.proj2(idx) != m2(z))
      fail(ErrorKind::NotComposable, "cone does not commute");
    v[z] = idx;
  }
  return EquivariantMap::trusted(m1.source(), pb.object, std::move(v));
}

bool is_cartesian(const EquivariantMap& top, const EquivariantMap& left, const EquivariantMap& right,
                  const EquivariantMap& bottom) {
  if (top.source() != left.source() || top.target() != right.source() || left.target() != bottom.source() ||
      right.target() != bottom.target())
    return false;
  for (int p = 0; p < top.source().size(); ++p)
    if (right(top(p)) != bottom(left(p))) return false;
  Pullback pb = pullback(right, bottom);
  if (pb.object.size() != top.source().size()) return false;
  std::vector<bool> hit(pb.object.size(), false);
  for (int p = 0; p < top.source().size(); ++p) {
    int idx = pb.index(top(p), left(p));
    if (hit[idx]) return false;
    hit[idx] = true;
  }
  return true;
}

EquivariantMap extend_from_reps(const GSet& x, const GSet& y, const std::vector<int>& rep_images) {
  if (x.group() != y.group()) fail(ErrorKind::GroupMismatch, "extend_from_reps over different groups");
  const FiniteGroup& g = x.group();
  std::vector<int> v(x.size(), -1);
  for (int o = 0; o < x.orbit_count(); ++o) {
    int p = x.orbit_rep(o);
    int q = rep_images[o];
    if (!g.is_subgroup_of(x.stabilizer(p), y.stabilizer(q)))
      fail(ErrorKind::NotEquivariant, "stabilizer of orbit representative not contained in target's");
    for (int k = 0; k < g.order(); ++k) v[x.act(k, p)] = y.act(k, q);
  }
  return EquivariantMap::trusted(x, y, std::move(v));
}

namespace {

std::vector<std::vector<int>> rep_candidates(const EquivariantMap& alpha, const EquivariantMap& beta) {
  const GSet& x = alpha.source();
  const GSet& y = beta.source();
  const FiniteGroup& g = x.group();
  std::vector<std::vector<int>> cand(x.orbit_count());
  for (int o = 0; o < x.orbit_count(); ++o) {
    int p = x.orbit_rep(o);
    for (int c = 0; c < y.size(); ++c)
      if (beta(c) == alpha(p) && g.is_subgroup_of(x.stabilizer(p), y.stabilizer(c))) cand[o].push_back(c);
  }
  return cand;
}

}  // namespace

void for_each_map_over(const EquivariantMap& alpha, const EquivariantMap& beta,
                       const std::function<bool(const EquivariantMap&)>& visit) {
  if (alpha.target() != beta.target()) fail(ErrorKind::AnchorMismatch, "maps over different bases");
  auto cand = rep_candidates(alpha, beta);
  const int m = static_cast<int>(cand.size());
  for (const auto& c : cand)
    if (c.empty()) return;
  std::vector<int> pick(m, 0);
  std::vector<int> images(m);
  while (true) {
    for (int o = 0; o < m; ++o) images[o] = cand[o][pick[o]];
    if (!visit(extend_from_reps(alpha.source(), beta.source(), images))) return;
    int o = m - 1;
    while (o >= 0 && ++pick[o] == static_cast<int>(cand[o].size())) pick[o--] = 0;
    if (o < 0) return;
  }
}

void for_each_map(const GSet& x, const GSet& y, const std::function<bool(const EquivariantMap&)>& visit) {
  for_each_map_over(terminal_map(x), terminal_map(y), visit);
}

long long count_maps_over(const EquivariantMap& alpha, const EquivariantMap& beta) {
  if (alpha.target() != beta.target()) fail(ErrorKind::AnchorMismatch, "maps over different bases");
  long long total = 1;
  for (const auto& c : rep_candidates(alpha, beta)) total *= static_cast<long long>(c.size());
  return total;
}

long long count_maps(const GSet& x, const GSet& y) { return count_maps_over(terminal_map(x), terminal_map(y)); }

GSet orbit_sum(const FiniteGroup& g, const std::vector<int>& subgroup_ids) {
  GSet acc = initial(g);
  for (int h : subgroup_ids) acc = coproduct(acc, make_orbit(g, h)).object;
  return acc;
}

std::string describe(const GSet& x) {
  if (x.size() == 0) return "0";
  std::string s;
  for (int o = 0; o < x.orbit_count(); ++o) {
    if (o) s += " + ";
    s += x.group().name() + "/" + subgroup_label(x.group(), x.stabilizer(x.orbit_rep(o)));
  }
  return s;
}

}  // namespace tambara
