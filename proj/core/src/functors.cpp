#include "tambara/functors.hpp"

#include <algorithm>
#include <map>

#include "tambara/error.hpp"
#include "tambara/indexing.hpp"
#include "tambara/slice.hpp"

namespace tambara {

namespace {

bool key_less(const SpanClass& a, const SpanClass& b) { return a.key() < b.key(); }

void same_level(const GSet& a, const GSet& b, const char* what) {
  if (a != b) fail(ErrorKind::LevelMismatch, std::string(what) + ": values live at different levels");
}

}  // namespace

MackeyValue MackeyValue::of(const SpanClass& s) {
  auto terms = span_components(s);
  std::sort(terms.begin(), terms.end(), key_less);
  return MackeyValue(s.source(), s.target(), std::move(terms));
}

MackeyValue MackeyValue::zero(const GSet& source, const GSet& level) { return MackeyValue(source, level, {}); }

SpanClass MackeyValue::as_span() const {
  SpanClass acc = zero_span(source_, level_);
  for (const auto& t : terms_) acc = span_sum(acc, t);
  return acc;
}

bool MackeyValue::operator==(const MackeyValue& o) const {
  if (source_ != o.source_ || level_ != o.level_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].key() != o.terms_[k].key()) return false;
  return true;
}

MackeyValue mackey_act(const SpanClass& phi, const MackeyValue& s) {
  return MackeyValue::of(span_compose(phi, s.as_span()));
}

MackeyValue mackey_add(const MackeyValue& a, const MackeyValue& b) {
  same_level(a.level(), b.level(), "mackey_add");
  same_level(a.source(), b.source(), "mackey_add");
  return MackeyValue::of(span_sum(a.as_span(), b.as_span()));
}

MackeyValue mackey_zero(const GSet& source, const GSet& level) { return MackeyValue::zero(source, level); }

MackeyValue mackey_add_via_fold(const MackeyValue& a, const MackeyValue& b) {
  same_level(a.level(), b.level(), "mackey_add");
  SpanClass pair = span_pair(a.as_span(), b.as_span());
  return MackeyValue::of(span_compose(t_of(codiagonal(a.level())), pair));
}

bool is_invertible(const MackeyValue& s) { return s.is_zero(); }

MackeyValue burnside_value(const EquivariantMap& over_level) {
  return MackeyValue::of(SpanClass(Span::make(terminal_map(over_level.source()), over_level)));
}

SliceObject burnside_object(const MackeyValue& v) { return SliceObject(v.as_span().representative().right()); }

MackeyValue burnside_norm(const EquivariantMap& i, const MackeyValue& v, const Caps& caps) {
  if (v.level() != i.source()) fail(ErrorKind::LevelMismatch, "burnside_norm: value not over the domain of i");
  DependentProduct d = pi(i, burnside_object(v), caps);
  return burnside_value(d.object().structure());
}

MackeyValue burnside_mul(const MackeyValue& a, const MackeyValue& b) {
  same_level(a.level(), b.level(), "burnside_mul");
  SliceObject x = burnside_object(a), y = burnside_object(b);
  Pullback pb = pullback(x.structure(), y.structure());
  return burnside_value(compose(x.structure(), pb.proj1));
}

TambaraValue tambara_act(const BispanClass& phi, const TambaraValue& s, const Caps& caps) {
  return TambaraValue(bispan_compose(phi, s.element(), caps));
}

TambaraValue tambara_add(const TambaraValue& a, const TambaraValue& b, const Caps& caps) {
  same_level(a.level(), b.level(), "tambara_add");
  BispanClass pair = bispan_pair(a.element(), b.element());
  return TambaraValue(bispan_compose(bt_of(codiagonal(a.level())), pair, caps));
}

TambaraValue tambara_mul(const TambaraValue& a, const TambaraValue& b, const Caps& caps) {
  same_level(a.level(), b.level(), "tambara_mul");
  BispanClass pair = bispan_pair(a.element(), b.element());
  return TambaraValue(bispan_compose(bn_of(codiagonal(a.level())), pair, caps));
}

TambaraValue tambara_zero(const GSet& source, const GSet& level) { return TambaraValue(zero_bispan(source, level)); }

TambaraValue tambara_one(const GSet& source, const GSet& level, const Caps& caps) {
  GSet e = initial(level.group());
  return TambaraValue(bispan_compose(bn_of(initial_map(level)), zero_bispan(source, e), caps));
}

TambaraValue burnside_tambara(const EquivariantMap& over_level) {
  GSet e = initial(over_level.source().group());
  return TambaraValue(
      BispanClass(Bispan::make(EquivariantMap::identity(e), initial_map(over_level.source()), over_level)));
}

TambaraValue forget_act(const SpanClass& phi, const TambaraValue& s, const Caps& caps) {
  return tambara_act(embed_span(phi), s, caps);
}

SliceObject SliceFunctor::level_of(const SliceObject& alpha) const {
  return along_ ? sigma(*along_, alpha) : alpha;
}

bool SliceFunctor::is_value(const SliceObject& alpha, const TambaraValue& v) const {
  SliceObject l = level_of(alpha);
  return v.source() == rep_.domain() && v.level() == l.domain() && bispan_is_over(v.element(), rep_, l);
}

TambaraValue SliceFunctor::act(const BispanClass& phi, const TambaraValue& v, const Caps& caps) const {
  BispanClass moved = along_ ? map_bispan(*along_, phi) : phi;
  return tambara_act(moved, v, caps);
}

TambaraValue SliceFunctor::add(const SliceObject& alpha, const TambaraValue& a, const TambaraValue& b,
                               const Caps& caps) const {
  if (!is_value(alpha, a) || !is_value(alpha, b)) fail(ErrorKind::LevelMismatch, "add: not values at this level");
  return tambara_add(a, b, caps);
}

SliceFunctor restrict_functor(const TransferRelation& om, const EquivariantMap& i, const SliceFunctor& f) {
  const GSet& base = f.along_ ? f.along_->source() : f.rep_.anchor();
  if (i.target() != base) fail(ErrorKind::AnchorMismatch, "restrict_functor: i does not land in the anchor");
  if (!contains_map(om, i)) fail(ErrorKind::NotInOm, "restrict_functor: i is not multiplicative");
  SliceFunctor out = f;
  out.along_ = f.along_ ? compose(*f.along_, i) : i;
  return out;
}

namespace {

// Least (structure value, stabilizer) over the points of an orbit.
std::vector<int> orbit_signature(const SliceObject& v, int o) {
  std::vector<int> best;
  for (int p : v.domain().orbit(o)) {
    std::vector<int> s{v(p), v.domain().stabilizer(p)};
    if (best.empty() || s < best) best = s;
  }
  return best;
}

SliceObject keep_orbits(const SliceObject& v, const std::vector<int>& orbits) {
  std::vector<int> pts;
  for (int o : orbits)
    for (int p : v.domain().orbit(o)) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  SubSet s = sub_gset(v.domain(), pts);
  return SliceObject(compose(v.structure(), s.inclusion));
}

SliceObject sum_over(const SliceObject& a, const SliceObject& b) {
  return SliceObject(copair(a.structure(), b.structure()));
}

SliceObject times_over(const SliceObject& a, const SliceObject& b) {
  Pullback pb = pullback(a.structure(), b.structure());
  return SliceObject(compose(a.structure(), pb.proj1));
}

}  // namespace

CompletedValue::CompletedValue(SliceObject pos, SliceObject neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
  same_level(pos_.anchor(), neg_.anchor(), "CompletedValue");
  std::multimap<std::vector<int>, int> neg_orbits;
  for (int o = 0; o < neg_.domain().orbit_count(); ++o) neg_orbits.emplace(orbit_signature(neg_, o), o);
  std::vector<int> keep_pos;
  for (int o = 0; o < pos_.domain().orbit_count(); ++o) {
    auto it = neg_orbits.find(orbit_signature(pos_, o));
    if (it == neg_orbits.end())
      keep_pos.push_back(o);
    else
      neg_orbits.erase(it);
  }
  if (static_cast<int>(keep_pos.size()) == pos_.domain().orbit_count()) return;
  std::vector<int> keep_neg;
  for (auto& [sig, o] : neg_orbits) keep_neg.push_back(o);
  std::sort(keep_neg.begin(), keep_neg.end());
  pos_ = keep_orbits(pos_, keep_pos);
  neg_ = keep_orbits(neg_, keep_neg);
}

CompletedValue CompletedValue::of(const MackeyValue& v) {
  return CompletedValue(burnside_object(v), SliceObject::empty(v.level()));
}

CompletedValue CompletedValue::zero(const GSet& level) {
  return CompletedValue(SliceObject::empty(level), SliceObject::empty(level));
}

std::vector<std::pair<std::vector<int>, int>> CompletedValue::coefficients() const {
  std::map<std::vector<int>, int> c;
  for (int o = 0; o < pos_.domain().orbit_count(); ++o) ++c[orbit_signature(pos_, o)];
  for (int o = 0; o < neg_.domain().orbit_count(); ++o) --c[orbit_signature(neg_, o)];
  std::vector<std::pair<std::vector<int>, int>> out;
  for (auto& [k, v] : c)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

bool CompletedValue::operator==(const CompletedValue& o) const {
  return level() == o.level() && coefficients() == o.coefficients();
}

CompletedValue group_complete(const MackeyValue& v) { return CompletedValue::of(v); }

CompletedValue group_complete(const MackeyValue& pos, const MackeyValue& neg) {
  same_level(pos.level(), neg.level(), "group_complete");
  return CompletedValue(burnside_object(pos), burnside_object(neg));
}

CompletedValue completed_add(const CompletedValue& a, const CompletedValue& b) {
  same_level(a.level(), b.level(), "completed_add");
  return CompletedValue(sum_over(a.pos(), b.pos()), sum_over(a.neg(), b.neg()));
}

CompletedValue completed_neg(const CompletedValue& a) { return CompletedValue(a.neg(), a.pos()); }

CompletedValue completed_mul(const CompletedValue& a, const CompletedValue& b) {
  same_level(a.level(), b.level(), "completed_mul");
  SliceObject p = sum_over(times_over(a.pos(), b.pos()), times_over(a.neg(), b.neg()));
  SliceObject n = sum_over(times_over(a.pos(), b.neg()), times_over(a.neg(), b.pos()));
  return CompletedValue(p, n);
}

long long fixed_count(const SliceObject& v, int p, int l) {
  const Subgroup& s = v.domain().group().subgroup(l);
  long long n = 0;
  for (int z = 0; z < v.domain().size(); ++z) {
    if (v(z) != p) continue;
    bool fixed = true;
    for (Elem e : s.elements)
      if (v.domain().act(e, z) != z) {
        fixed = false;
        break;
      }
    n += fixed;
  }
  return n;
}

long long fixed_count(const CompletedValue& v, int p, int l) {
  return fixed_count(v.pos(), p, l) - fixed_count(v.neg(), p, l);
}

CompletedValue from_marks(const GSet& level, const std::vector<std::vector<long long>>& marks) {
  const FiniteGroup& g = level.group();
  std::vector<int> pos_ids, neg_ids, pos_pts, neg_pts;
  for (int o = 0; o < level.orbit_count(); ++o) {
    int y = level.orbit_rep(o);
    int h = level.stabilizer(y);
    const Subgroup& hs = g.subgroup(h);
    std::vector<int> below;
    for (int k = 0; k < g.subgroup_count(); ++k)
      if (g.is_subgroup_of(k, h)) below.push_back(k);
    // |(H/K)^L| = #{x in H : x^-1 L x <= K} / |K|
    auto fixed_cosets = [&](int k, int l) {
      long long n = 0;
      for (Elem x : hs.elements)
        if (g.is_subgroup_of(g.conjugate_subgroup(l, g.inverse(x)), k)) ++n;
      return n / g.subgroup(k).order();
    };
    std::vector<int> reps;
    for (int k : below) {
      int least = k;
      for (Elem x : hs.elements) least = std::min(least, g.conjugate_subgroup(k, x));
      if (least == k) reps.push_back(k);
    }
    std::sort(reps.begin(), reps.end(), [&](int a, int b) {
      int oa = g.subgroup(a).order(), ob = g.subgroup(b).order();
      return oa != ob ? oa > ob : a < b;
    });
    std::vector<long long> rest(g.subgroup_count(), 0);
    for (int l : below) rest[l] = marks[y][l];
    for (int k : reps) {
      long long self = fixed_cosets(k, k);
      if (rest[k] % self != 0) fail(ErrorKind::MalformedSpec, "from_marks: counts are not marks of a virtual G-set");
      long long c = rest[k] / self;
      if (c == 0) continue;
      for (int l : below) rest[l] -= c * fixed_cosets(k, l);
      for (long long t = 0; t < (c > 0 ? c : -c); ++t) {
        (c > 0 ? pos_ids : neg_ids).push_back(k);
        (c > 0 ? pos_pts : neg_pts).push_back(y);
      }
    }
    for (int l : below)
      if (rest[l] != 0) fail(ErrorKind::MalformedSpec, "from_marks: counts are not marks of a virtual G-set");
  }
  auto build = [&](const std::vector<int>& ids, const std::vector<int>& pts) {
    GSet x = orbit_sum(g, ids);
    return SliceObject(extend_from_reps(x, level, pts));
  };
  return CompletedValue(build(pos_ids, pos_pts), build(neg_ids, neg_pts));
}

CompletedValue completed_norm(const EquivariantMap& i, const CompletedValue& v) {
  if (v.level() != i.source()) fail(ErrorKind::LevelMismatch, "completed_norm: value not over the domain of i");
  const GSet& x = i.source();
  const GSet& y = i.target();
  const FiniteGroup& g = x.group();
  std::vector<std::vector<long long>> marks(y.size(), std::vector<long long>(g.subgroup_count(), 0));
  for (int o = 0; o < y.orbit_count(); ++o) {
    int q = y.orbit_rep(o);
    int h = y.stabilizer(q);
    std::vector<int> fiber;
    for (int p = 0; p < x.size(); ++p)
      if (i(p) == q) fiber.push_back(p);
    for (int l = 0; l < g.subgroup_count(); ++l) {
      if (!g.is_subgroup_of(l, h)) continue;
      const Subgroup& ls = g.subgroup(l);
      std::vector<char> seen(x.size(), 0);
      long long prod = 1;
      for (int p : fiber) {
        if (seen[p]) continue;
        for (Elem e : ls.elements) seen[x.act(e, p)] = 1;
        prod *= fixed_count(v, p, g.intersect(l, x.stabilizer(p)));
        if (prod == 0) break;
      }
      marks[q][l] = prod;
    }
  }
  return from_marks(y, marks);
}

CompletedValue completed_eval(const BispanClass& b, const CompletedValue& v) {
  if (v.level() != b.source()) fail(ErrorKind::LevelMismatch, "completed_eval: value not at the source");
  const Bispan& r = b.representative();
  CompletedValue pulled(restrict(r.r(), v.pos()).object, restrict(r.r(), v.neg()).object);
  CompletedValue normed = completed_norm(r.n(), pulled);
  return CompletedValue(sigma(r.t(), normed.pos()), sigma(r.t(), normed.neg()));
}

namespace {

// The pair (a, b) as a value over x + x.
CompletedValue pair_value(const CompletedValue& a, const CompletedValue& b) {
  Coproduct c = coproduct(a.level(), a.level());
  auto side = [&](const SliceObject& s, const SliceObject& t) {
    return SliceObject(coproduct_map(s.structure(), t.structure()));
  };
  SliceObject p = side(a.pos(), b.pos()), n = side(a.neg(), b.neg());
  return CompletedValue(SliceObject(EquivariantMap::trusted(p.domain(), c.object, p.structure().values())),
                        SliceObject(EquivariantMap::trusted(n.domain(), c.object, n.structure().values())));
}

// The part of the distributor bispan lying over the given points of Pi.
BispanClass distributor_part(const Distributor& d, const std::vector<int>& part) {
  const GSet& pd = d.pi_g_f.object().domain();
  std::vector<int> sorted = part;
  std::sort(sorted.begin(), sorted.end());
  SubSet mid = sub_gset(pd, sorted);
  std::vector<int> local(pd.size(), -1);
  for (int k = 0; k < mid.object.size(); ++k) local[mid.inclusion(k)] = k;
  const GSet& corner = d.corner.object.domain();
  std::vector<int> pts;
  for (int z = 0; z < corner.size(); ++z)
    if (local[d.pulled(z)] >= 0) pts.push_back(z);
  SubSet top = sub_gset(corner, pts);
  std::vector<int> nv(top.object.size());
  for (int k = 0; k < top.object.size(); ++k) nv[k] = local[d.pulled(top.inclusion(k))];
  return BispanClass(Bispan::make(compose(d.eps, top.inclusion),
                                  EquivariantMap::trusted(top.object, mid.object, std::move(nv)),
                                  compose(d.pi_g_f.object().structure(), mid.inclusion)));
}

}  // namespace

std::optional<MazurSplit> mazur_split(const EquivariantMap& i, const CompletedValue& a, const CompletedValue& b,
                                      const Caps& caps) {
  same_level(a.level(), b.level(), "mazur_split");
  auto split = split_section(i, caps);
  if (!split) return std::nullopt;
  Distributor d = distributor(codiagonal(i.source()), i, caps);
  if (split->j.to().domain() != d.pi_g_f.object().domain())
    fail(ErrorKind::MalformedSpec, "mazur_split: section and distributor disagree on Pi");
  std::vector<int> image;
  for (int q = 0; q < i.target().size(); ++q) image.push_back(split->j(q));
  CompletedValue ab = pair_value(a, b);
  CompletedValue first = completed_eval(distributor_part(d, image), ab);
  CompletedValue other = completed_eval(distributor_part(d, split->complement.inclusion.values()), ab);
  CompletedValue sum = completed_norm(i, completed_add(a, b));
  CompletedValue na = completed_norm(i, a);
  if (first != na) fail(ErrorKind::MalformedSpec, "mazur_split: the section summand is not N(a)");
  return MazurSplit{na, other, sum};
}

std::string describe(const MackeyValue& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& t : v.terms()) {
    if (!s.empty()) s += " + ";
    const Span& r = t.representative();
    s += "[" + subgroup_label(r.apex().group(), r.apex().stabilizer(0)) + " @" + std::to_string(r.right()(0)) + "]";
  }
  return s;
}

std::string describe(const CompletedValue& v) {
  if (v.is_zero()) return "0";
  const FiniteGroup& g = v.level().group();
  std::string s;
  for (auto& [key, c] : v.coefficients()) {
    std::string term = "[" + subgroup_label(g, key[1]) + " @" + std::to_string(key[0]) + "]";
    if (s.empty())
      s = (c < 0 ? "-" : "") + (std::abs(c) == 1 ? "" : std::to_string(std::abs(c))) + term;
    else
      s += (c < 0 ? " - " : " + ") + (std::abs(c) == 1 ? "" : std::to_string(std::abs(c))) + term;
  }
  return s;
}

}  // namespace tambara
