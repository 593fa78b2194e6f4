#include "tambara/polynomial.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "tambara/error.hpp"

namespace tambara {

Bispan Bispan::make(EquivariantMap r, EquivariantMap n, EquivariantMap t) {
  if (r.source() != n.source()) fail(ErrorKind::MalformedSpec, "bispan r and n legs have different sources");
  if (n.target() != t.source()) fail(ErrorKind::MalformedSpec, "bispan n and t legs do not chain");
  return Bispan(std::move(r), std::move(n), std::move(t));
}

namespace {

std::vector<std::vector<int>> fibers_of(const EquivariantMap& n) {
  std::vector<std::vector<int>> f(n.target().size());
  for (int z = 0; z < n.source().size(); ++z) f[n(z)].push_back(z);
  return f;
}

// K-orbits of the fiber over w, each with its least (r value, stabilizer) and
// the point attaining it; sorted by signature.
struct FiberOrbit {
  int r = 0;
  int stab = 0;
  int point = 0;
  bool operator<(const FiberOrbit& o) const { return std::tie(r, stab, point) < std::tie(o.r, o.stab, o.point); }
};

std::vector<FiberOrbit> fiber_orbits(const Bispan& b, const std::vector<int>& fiber, int w) {
  const GSet& z = b.top();
  const Subgroup& k = z.group().subgroup(b.middle().stabilizer(w));
  std::vector<FiberOrbit> out;
  std::vector<int> seen;
  for (int p : fiber) {
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    FiberOrbit best{-1, -1, -1};
    for (Elem g : k.elements) {
      int q = z.act(g, p);
      if (std::find(seen.begin(), seen.end(), q) == seen.end()) seen.push_back(q);
      FiberOrbit cur{b.r()(q), z.stabilizer(q), q};
      if (best.point < 0 || std::tie(cur.r, cur.stab) < std::tie(best.r, best.stab)) best = cur;
    }
    out.push_back(best);
  }
  std::sort(out.begin(), out.end(), [](const FiberOrbit& a, const FiberOrbit& c) {
    return std::tie(a.r, a.stab) < std::tie(c.r, c.stab);
  });
  return out;
}

std::vector<int> point_signature(const Bispan& b, const std::vector<std::vector<int>>& fibers, int w) {
  auto orbits = fiber_orbits(b, fibers[w], w);
  std::vector<int> sig{b.t()(w), b.middle().stabilizer(w), static_cast<int>(orbits.size())};
  for (const auto& o : orbits) {
    sig.push_back(o.r);
    sig.push_back(o.stab);
  }
  return sig;
}

// Least signature over each middle orbit, with the point attaining it.
std::vector<std::pair<std::vector<int>, int>> component_signatures(const Bispan& b) {
  auto fibers = fibers_of(b.n());
  const GSet& w = b.middle();
  std::vector<std::pair<std::vector<int>, int>> out;
  for (int o = 0; o < w.orbit_count(); ++o) {
    std::vector<int> best;
    int arg = -1;
    for (int p : w.orbit(o)) {
      auto s = point_signature(b, fibers, p);
      if (arg < 0 || s < best) {
        best = std::move(s);
        arg = p;
      }
    }
    out.emplace_back(std::move(best), arg);
  }
  return out;
}

BispanKey compute_key(const Bispan& b) {
  BispanKey key;
  for (auto& [sig, p] : component_signatures(b)) key.push_back(std::move(sig));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

BispanClass::BispanClass(Bispan rep) : rep_(std::move(rep)), key_(compute_key(rep_)) {}

bool BispanClass::operator==(const BispanClass& o) const {
  return key_ == o.key_ && source() == o.source() && target() == o.target();
}

BispanClass identity_bispan(const GSet& x) {
  auto id = EquivariantMap::identity(x);
  return BispanClass(Bispan::make(id, id, id));
}

BispanClass zero_bispan(const GSet& x, const GSet& y) {
  GSet e = initial(x.group());
  return BispanClass(Bispan::make(initial_map(x), EquivariantMap::identity(e), initial_map(y)));
}

BispanClass bt_of(const EquivariantMap& f) {
  auto id = EquivariantMap::identity(f.source());
  return BispanClass(Bispan::make(id, id, f));
}

BispanClass bn_of(const EquivariantMap& f) {
  return BispanClass(Bispan::make(EquivariantMap::identity(f.source()), f, EquivariantMap::identity(f.target())));
}

BispanClass br_of(const EquivariantMap& f) {
  auto id = EquivariantMap::identity(f.source());
  return BispanClass(Bispan::make(f, id, id));
}

BispanClass bispan_compose(const BispanClass& b2, const BispanClass& b1, const Caps& caps) {
  if (b1.target() != b2.source()) fail(ErrorKind::EndpointMismatch, "bispan_compose: middle objects differ");
  const Bispan& a = b1.representative();
  const Bispan& b = b2.representative();
  // R_{h2} T_{f1} = T_{p2} R_{p1}
  Pullback p = pullback(a.t(), b.r());
  // N_{g2} T_{p2} = T_{Pi} N_{pulled} R_{eps}
  Distributor d = distributor(p.proj2, b.n(), caps);
  // R_{p1 o eps} N_{g1} = N_{m2} R_{m1}
  EquivariantMap k = compose(p.proj1, d.eps);
  std::vector<long long> per(a.middle().size(), 0);
  for (int z = 0; z < a.top().size(); ++z) ++per[a.n()(z)];
  long long bound = 0;
  for (int q = 0; q < k.source().size(); ++q) bound += per[k(q)];
  if (bound > caps.max_points)
    fail(ErrorKind::SizeCapExceeded, "bispan_compose: top object of size " + std::to_string(bound));
  Pullback m = pullback(a.n(), k);
  return BispanClass(Bispan::make(compose(a.r(), m.proj1), compose(d.pulled, m.proj2),
                                  compose(b.t(), d.pi_g_f.object().structure())));
}

NormalForm normal_form(const BispanClass& b) {
  const Bispan& r = b.representative();
  return NormalForm{r.t(), r.n(), r.r()};
}

BispanClass embed_span(const SpanClass& s) {
  const Span& r = s.representative();
  return BispanClass(Bispan::make(r.left(), EquivariantMap::identity(r.apex()), r.right()));
}

bool in_subcategory_u(const IndexPair& o, const BispanClass& b) {
  return contains_map(o.additive, b.representative().t()) && contains_map(o.multiplicative, b.representative().n());
}

bool bispan_is_over(const BispanClass& b, const SliceObject& alpha, const SliceObject& beta) {
  if (alpha.anchor() != beta.anchor()) return false;
  if (b.source() != alpha.domain() || b.target() != beta.domain()) return false;
  const Bispan& r = b.representative();
  for (int z = 0; z < r.top().size(); ++z)
    if (alpha(r.r()(z)) != beta(r.t()(r.n()(z)))) return false;
  return true;
}

BispanClass map_bispan(const EquivariantMap&, const BispanClass& b) { return b; }

BispanClass bispan_sum(const BispanClass& a, const BispanClass& b) {
  if (a.source() != b.source() || a.target() != b.target())
    fail(ErrorKind::EndpointMismatch, "bispan_sum: endpoints differ");
  const Bispan& x = a.representative();
  const Bispan& y = b.representative();
  return BispanClass(Bispan::make(copair(x.r(), y.r()), coproduct_map(x.n(), y.n()), copair(x.t(), y.t())));
}

BispanClass bispan_pair(const BispanClass& a, const BispanClass& b) {
  if (a.source() != b.source()) fail(ErrorKind::EndpointMismatch, "bispan_pair: sources differ");
  const Bispan& x = a.representative();
  const Bispan& y = b.representative();
  return BispanClass(Bispan::make(copair(x.r(), y.r()), coproduct_map(x.n(), y.n()), coproduct_map(x.t(), y.t())));
}

std::vector<BispanClass> bispan_components(const BispanClass& b) {
  const Bispan& r = b.representative();
  std::vector<BispanClass> out;
  for (int o = 0; o < r.middle().orbit_count(); ++o) {
    SubSet mid = sub_gset(r.middle(), r.middle().orbit(o));
    std::vector<int> pts;
    for (int z = 0; z < r.top().size(); ++z)
      if (r.middle().orbit_of(r.n()(z)) == o) pts.push_back(z);
    SubSet top = sub_gset(r.top(), pts);
    std::vector<int> local(r.middle().size(), -1);
    for (int k = 0; k < mid.object.size(); ++k) local[mid.inclusion(k)] = k;
    std::vector<int> nv(top.object.size());
    for (int k = 0; k < top.object.size(); ++k) nv[k] = local[r.n()(top.inclusion(k))];
    out.emplace_back(Bispan::make(compose(r.r(), top.inclusion),
                                  EquivariantMap::trusted(top.object, mid.object, std::move(nv)),
                                  compose(r.t(), mid.inclusion)));
  }
  return out;
}

bool is_summand(const BispanClass& part, const BispanClass& whole) {
  if (part.source() != whole.source() || part.target() != whole.target()) return false;
  const auto& a = part.key();
  const auto& b = whole.key();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<BispanIso> find_bispan_iso(const BispanClass& a, const BispanClass& b) {
  if (a.source() != b.source() || a.target() != b.target() || a.key() != b.key()) return std::nullopt;
  const Bispan& x = a.representative();
  const Bispan& y = b.representative();
  const FiniteGroup& g = x.top().group();
  auto fx = fibers_of(x.n());
  auto fy = fibers_of(y.n());
  std::map<std::vector<int>, std::vector<int>> pool;
  for (auto& [sig, w] : component_signatures(y)) pool[sig].push_back(w);
  std::vector<int> wf(x.middle().size(), -1), wb(y.middle().size(), -1);
  std::vector<int> zf(x.top().size(), -1), zb(y.top().size(), -1);
  for (auto& [sig, w] : component_signatures(x)) {
    auto& bucket = pool[sig];
    if (bucket.empty()) return std::nullopt;
    int w2 = bucket.back();
    bucket.pop_back();
    // Match fiber K-orbits with equal signatures, then spread by K and by G.
    auto ox = fiber_orbits(x, fx[w], w);
    auto oy = fiber_orbits(y, fy[w2], w2);
    if (ox.size() != oy.size()) return std::nullopt;
    const Subgroup& k = g.subgroup(x.middle().stabilizer(w));
    std::vector<std::pair<int, int>> fiber_match;
    for (std::size_t t = 0; t < ox.size(); ++t)
      for (Elem h : k.elements) fiber_match.emplace_back(x.top().act(h, ox[t].point), y.top().act(h, oy[t].point));
    for (Elem e = 0; e < g.order(); ++e) {
      wf[x.middle().act(e, w)] = y.middle().act(e, w2);
      wb[y.middle().act(e, w2)] = x.middle().act(e, w);
      for (auto [p, q] : fiber_match) {
        zf[x.top().act(e, p)] = y.top().act(e, q);
        zb[y.top().act(e, q)] = x.top().act(e, p);
      }
    }
  }
  return BispanIso{IsoWitness{EquivariantMap::trusted(x.top(), y.top(), zf), EquivariantMap::trusted(y.top(), x.top(), zb)},
                   IsoWitness{EquivariantMap::trusted(x.middle(), y.middle(), wf),
                              EquivariantMap::trusted(y.middle(), x.middle(), wb)}};
}

std::string describe(const BispanClass& b) {
  const Bispan& r = b.representative();
  return "[" + std::to_string(b.source().size()) + " <- " + describe(r.top()) + " -> " + describe(r.middle()) + " -> " +
         std::to_string(b.target().size()) + "]";
}

}  // namespace tambara
