#include "tambara/slice.hpp"

#include <algorithm>

#include "tambara/error.hpp"

namespace tambara {

SliceMap SliceMap::make(SliceObject from, SliceObject to, EquivariantMap underlying) {
  if (from.anchor() != to.anchor()) fail(ErrorKind::AnchorMismatch, "slice map between different anchors");
  if (underlying.source() != from.domain() || underlying.target() != to.domain())
    fail(ErrorKind::NotComposable, "slice map has wrong endpoints");
  for (int p = 0; p < from.domain().size(); ++p)
    if (to(underlying(p)) != from(p)) fail(ErrorKind::AnchorMismatch, "slice map does not commute with structure");
  return SliceMap(std::move(from), std::move(to), std::move(underlying));
}

SliceMap compose(const SliceMap& g, const SliceMap& f) {
  if (!(f.to() == g.from())) fail(ErrorKind::NotComposable, "slice maps do not chain");
  return SliceMap::trusted(f.from(), g.to(), compose(g.underlying(), f.underlying()));
}

std::optional<IsoWitness> find_slice_iso(const SliceObject& a, const SliceObject& b) {
  if (a.anchor() != b.anchor()) return std::nullopt;
  return find_iso_over(a.domain(), b.domain(), {a.structure()}, {b.structure()});
}

SliceObject sigma(const EquivariantMap& i, const SliceObject& alpha) {
  if (alpha.anchor() != i.source()) fail(ErrorKind::AnchorMismatch, "sigma: object not over the domain of i");
  return SliceObject(compose(i, alpha.structure()));
}

SliceMap sigma_map(const EquivariantMap& i, const SliceMap& f) {
  return SliceMap::trusted(sigma(i, f.from()), sigma(i, f.to()), f.underlying());
}

Restriction restrict(const EquivariantMap& i, const SliceObject& beta) {
  if (beta.anchor() != i.target()) fail(ErrorKind::AnchorMismatch, "restrict: object not over the codomain of i");
  Pullback pb = pullback(i, beta.structure());
  return Restriction{SliceObject(pb.proj1), pb.proj2, pb};
}

SliceMap restrict_map(const Restriction& from, const Restriction& to, const SliceMap& f) {
  const auto& sq = from.square;
  std::vector<int> v(sq.object.size());
  for (int k = 0; k < sq.object.size(); ++k) v[k] = to.index(sq.proj1(k), f(sq.proj2(k)));
  return SliceMap::trusted(from.object, to.object, EquivariantMap::trusted(from.object.domain(), to.object.domain(), v));
}

DependentProduct::DependentProduct(const EquivariantMap& i, const SliceObject& alpha, const Caps& caps)
    : i_(i), alpha_(alpha) {
  if (alpha.anchor() != i.source()) fail(ErrorKind::AnchorMismatch, "pi: object not over the domain of i");
  const GSet& x = i.source();
  const GSet& y = i.target();
  const GSet& a = alpha.domain();
  fibers_.assign(y.size(), {});
  fiber_pos_.assign(x.size(), 0);
  for (int p = 0; p < x.size(); ++p) {
    fiber_pos_[p] = static_cast<int>(fibers_[i(p)].size());
    fibers_[i(p)].push_back(p);
  }
  preimage_.assign(x.size(), {});
  preimage_pos_.assign(a.size(), 0);
  for (int c = 0; c < a.size(); ++c) {
    preimage_pos_[c] = static_cast<int>(preimage_[alpha(c)].size());
    preimage_[alpha(c)].push_back(c);
  }
  offset_.assign(y.size() + 1, 0);
  for (int q = 0; q < y.size(); ++q) {
    if (static_cast<int>(fibers_[q].size()) > caps.max_fiber)
      fail(ErrorKind::SizeCapExceeded, "pi: fiber of size " + std::to_string(fibers_[q].size()));
    long long count = 1;
    for (int p : fibers_[q]) {
      count *= static_cast<long long>(preimage_[p].size());
      if (count > caps.max_points) break;
    }
    offset_[q + 1] = offset_[q] + count;
    if (offset_[q + 1] > caps.max_points)
      fail(ErrorKind::SizeCapExceeded, "pi: more than " + std::to_string(caps.max_points) + " sections");
  }
  const int total = static_cast<int>(offset_[y.size()]);
  base_.reserve(total);
  start_.reserve(total);
  for (int q = 0; q < y.size(); ++q) {
    const auto& fib = fibers_[q];
    const int m = static_cast<int>(fib.size());
    std::vector<int> pick(m, 0);
    for (long long s = offset_[q]; s < offset_[q + 1]; ++s) {
      base_.push_back(q);
      start_.push_back(static_cast<int>(values_.size()));
      for (int k = 0; k < m; ++k) values_.push_back(preimage_[fib[k]][pick[k]]);
      for (int k = m - 1; k >= 0; --k) {
        if (++pick[k] < static_cast<int>(preimage_[fib[k]].size())) break;
        pick[k] = 0;
      }
    }
  }
  const FiniteGroup& g = x.group();
  const int n = g.order();
  std::vector<int> act(static_cast<std::size_t>(n) * total);
  for (int k = 0; k < n; ++k) {
    Elem kinv = g.inverse(k);
    for (int d = 0; d < total; ++d) {
      int gq = y.act(k, base_[d]);
      long long code = 0;
      for (int pp : fibers_[gq]) {
        int c = a.act(k, section_value(d, x.act(kinv, pp)));
        code = code * static_cast<long long>(preimage_[pp].size()) + preimage_pos_[c];
      }
      act[k * total + d] = static_cast<int>(offset_[gq] + code);
    }
  }
  GSet carrier = GSet::trusted(g, total, std::move(act));
  object_.emplace(EquivariantMap::trusted(carrier, y, base_));
}

int DependentProduct::section_value(int d, int p) const { return values_[start_[d] + fiber_pos_[p]]; }

int DependentProduct::find(int q, const std::vector<int>& values) const {
  const auto& fib = fibers_[q];
  if (values.size() != fib.size()) return -1;
  long long code = 0;
  for (std::size_t k = 0; k < fib.size(); ++k) {
    int c = values[k];
    if (c < 0 || c >= alpha_.domain().size() || alpha_(c) != fib[k]) return -1;
    code = code * static_cast<long long>(preimage_[fib[k]].size()) + preimage_pos_[c];
  }
  return static_cast<int>(offset_[q] + code);
}

DependentProduct pi(const EquivariantMap& i, const SliceObject& alpha, const Caps& caps) {
  return DependentProduct(i, alpha, caps);
}

SliceMap pi_map(const DependentProduct& from, const DependentProduct& to, const SliceMap& f) {
  if (from.along() != to.along()) fail(ErrorKind::AnchorMismatch, "pi_map: different base maps");
  if (!(f.from() == from.argument()) || !(f.to() == to.argument()))
    fail(ErrorKind::NotComposable, "pi_map: map does not match the dependent products");
  std::vector<int> v(from.size());
  std::vector<int> vals;
  for (int d = 0; d < from.size(); ++d) {
    int q = from.base(d);
    vals.clear();
    for (int p : from.fiber(q)) vals.push_back(f(from.section_value(d, p)));
    v[d] = to.find(q, vals);
  }
  return SliceMap::trusted(from.object(), to.object(),
                           EquivariantMap::trusted(from.object().domain(), to.object().domain(), std::move(v)));
}

namespace {

SliceMap map_over(const SliceObject& from, const SliceObject& to, std::vector<int> v) {
  return SliceMap::trusted(from, to, EquivariantMap::trusted(from.domain(), to.domain(), std::move(v)));
}

}  // namespace

AdjunctionCell adjunction_cell(CellKind kind, const EquivariantMap& i, const SliceObject& at, const Caps& caps) {
  switch (kind) {
    case CellKind::UnitInd: {
      Restriction r = restrict(i, sigma(i, at));
      std::vector<int> v(at.domain().size());
      for (int c = 0; c < at.domain().size(); ++c) v[c] = r.index(at(c), c);
      return AdjunctionCell{kind, at, map_over(at, r.object, std::move(v))};
    }
    case CellKind::CounitInd: {
      Restriction r = restrict(i, at);
      return AdjunctionCell{kind, at, map_over(sigma(i, r.object), at, r.top.values())};
    }
    case CellKind::UnitCoind: {
      Restriction r = restrict(i, at);
      DependentProduct d = pi(i, r.object, caps);
      std::vector<int> v(at.domain().size());
      std::vector<int> vals;
      for (int b = 0; b < at.domain().size(); ++b) {
        int q = at(b);
        vals.clear();
        for (int p : d.fiber(q)) vals.push_back(r.index(p, b));
        v[b] = d.find(q, vals);
      }
      return AdjunctionCell{kind, at, map_over(at, d.object(), std::move(v))};
    }
    case CellKind::CounitCoind: {
      DependentProduct d = pi(i, at, caps);
      Restriction r = restrict(i, d.object());
      const auto& sq = r.square;
      std::vector<int> v(sq.object.size());
      for (int k = 0; k < sq.object.size(); ++k) v[k] = d.section_value(sq.proj2(k), sq.proj1(k));
      return AdjunctionCell{kind, at, map_over(r.object, at, std::move(v))};
    }
  }
  fail(ErrorKind::MalformedSpec, "unknown cell kind");
}

SliceMap ind_adjunct(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta, const SliceMap& f) {
  Restriction r = restrict(i, beta);
  std::vector<int> v(alpha.domain().size());
  for (int c = 0; c < alpha.domain().size(); ++c) v[c] = r.index(alpha(c), f(c));
  return map_over(alpha, r.object, std::move(v));
}

SliceMap ind_coadjunct(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta, const SliceMap& g) {
  Restriction r = restrict(i, beta);
  std::vector<int> v(alpha.domain().size());
  for (int c = 0; c < alpha.domain().size(); ++c) v[c] = r.top(g(c));
  return map_over(sigma(i, alpha), beta, std::move(v));
}

SliceMap coind_adjunct(const EquivariantMap& i, const SliceObject& beta, const SliceObject& alpha, const SliceMap& h,
                       const Caps& caps) {
  Restriction r = restrict(i, beta);
  DependentProduct d = pi(i, alpha, caps);
  std::vector<int> v(beta.domain().size());
  std::vector<int> vals;
  for (int b = 0; b < beta.domain().size(); ++b) {
    int q = beta(b);
    vals.clear();
    for (int p : d.fiber(q)) vals.push_back(h(r.index(p, b)));
    v[b] = d.find(q, vals);
  }
  return map_over(beta, d.object(), std::move(v));
}

SliceMap coind_coadjunct(const EquivariantMap& i, const SliceObject& beta, const SliceObject& alpha, const SliceMap& k,
                         const Caps& caps) {
  Restriction r = restrict(i, beta);
  DependentProduct d = pi(i, alpha, caps);
  const auto& sq = r.square;
  std::vector<int> v(sq.object.size());
  for (int t = 0; t < sq.object.size(); ++t) v[t] = d.section_value(k(sq.proj2(t)), sq.proj1(t));
  return map_over(r.object, alpha, std::move(v));
}

Distributor distributor(const EquivariantMap& f, const EquivariantMap& g, const Caps& caps) {
  if (f.target() != g.source()) fail(ErrorKind::NotComposable, "distributor: f and g do not chain");
  DependentProduct d = pi(g, SliceObject(f), caps);
  Restriction corner = restrict(g, d.object());
  const auto& sq = corner.square;
  std::vector<int> eps(sq.object.size());
  for (int k = 0; k < sq.object.size(); ++k) eps[k] = d.section_value(sq.proj2(k), sq.proj1(k));
  EquivariantMap pulled = corner.top;
  EquivariantMap e = EquivariantMap::trusted(sq.object, f.source(), std::move(eps));
  return Distributor{std::move(d), std::move(corner), std::move(pulled), std::move(e)};
}

SliceSplit slice_split(const EquivariantMap& inj1, const EquivariantMap& inj2, const SliceObject& gamma) {
  if (inj1.target() != inj2.target() || gamma.anchor() != inj1.target())
    fail(ErrorKind::NotACoproduct, "injections and object disagree on the base");
  if (!is_mono(inj1) || !is_mono(inj2)) fail(ErrorKind::NotACoproduct, "injections are not monic");
  std::vector<int> hits(inj1.target().size(), 0);
  for (int v : inj1.values()) ++hits[v];
  for (int v : inj2.values()) ++hits[v];
  for (int h : hits)
    if (h != 1) fail(ErrorKind::NotACoproduct, "images are not complementary");
  Restriction l = restrict(inj1, gamma);
  Restriction r = restrict(inj2, gamma);
  EquivariantMap back = copair(compose(inj1, l.object.structure()), compose(inj2, r.object.structure()));
  auto w = find_iso_over(back.source(), gamma.domain(), {back}, {gamma.structure()});
  if (!w) fail(ErrorKind::NotACoproduct, "reassembly failed");
  return SliceSplit{std::move(l), std::move(r), *w};
}

FiberData fiber_equivalence(const SliceObject& beta) {
  const GSet& x = beta.anchor();
  if (x.orbit_count() != 1) fail(ErrorKind::BaseNotOrbit, "fiber_equivalence needs a transitive base");
  const FiniteGroup& g = x.group();
  const int base = 0;
  const Subgroup& h = g.subgroup(x.stabilizer(base));
  const int m = h.order();
  std::vector<int> local(g.order(), -1);
  for (int k = 0; k < m; ++k) local[h.elements[k]] = k;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = local[g.mul(h.elements[a], h.elements[b])];
  FiniteGroup hg = FiniteGroup::from_table(g.name() + "|H", table);
  std::vector<int> pts;
  for (int b = 0; b < beta.domain().size(); ++b)
    if (beta(b) == base) pts.push_back(b);
  std::vector<int> pos(beta.domain().size(), -1);
  for (int k = 0; k < static_cast<int>(pts.size()); ++k) pos[pts[k]] = k;
  const int s = static_cast<int>(pts.size());
  std::vector<int> act(static_cast<std::size_t>(m) * s);
  for (int k = 0; k < m; ++k)
    for (int t = 0; t < s; ++t) act[k * s + t] = pos[beta.domain().act(h.elements[k], pts[t])];
  GSet fiber = GSet::trusted(hg, s, std::move(act));
  return FiberData{hg, h.elements, base, pts, fiber};
}

SliceObject induce_fiber(const GSet& base, const FiberData& fd, const GSet& s) {
  const FiniteGroup& g = base.group();
  const int n = g.order();
  std::vector<Elem> rep(base.size(), -1);
  for (int k = 0; k < n; ++k) {
    int c = base.act(k, fd.base_point);
    if (rep[c] < 0) rep[c] = k;
  }
  std::vector<int> local(n, -1);
  for (int k = 0; k < static_cast<int>(fd.embedding.size()); ++k) local[fd.embedding[k]] = k;
  const int ss = s.size();
  const int size = base.size() * ss;
  std::vector<int> act(static_cast<std::size_t>(n) * size);
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < base.size(); ++c) {
      int c2 = base.act(k, c);
      Elem h = g.mul(g.inverse(rep[c2]), g.mul(k, rep[c]));
      for (int t = 0; t < ss; ++t) act[k * size + c * ss + t] = c2 * ss + s.act(local[h], t);
    }
  GSet carrier = GSet::trusted(g, size, std::move(act));
  std::vector<int> st(size);
  for (int c = 0; c < base.size(); ++c)
    for (int t = 0; t < ss; ++t) st[c * ss + t] = c;
  return SliceObject(EquivariantMap::trusted(carrier, base, std::move(st)));
}

}  // namespace tambara
