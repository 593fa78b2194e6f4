#include "tambara/lindner.hpp"

#include "tambara/error.hpp"

namespace tambara {

Span Span::make(EquivariantMap left, EquivariantMap right) {
  if (left.source() != right.source()) fail(ErrorKind::MalformedSpec, "span legs have different sources");
  return Span(std::move(left), std::move(right));
}

SpanClass::SpanClass(Span rep) : rep_(std::move(rep)), key_(orbit_signatures(rep_.apex(), {rep_.left(), rep_.right()})) {}

bool SpanClass::operator==(const SpanClass& o) const {
  return key_ == o.key_ && source() == o.source() && target() == o.target();
}

SpanClass identity_span(const GSet& x) {
  auto id = EquivariantMap::identity(x);
  return SpanClass(Span::make(id, id));
}

SpanClass zero_span(const GSet& x, const GSet& y) { return SpanClass(Span::make(initial_map(x), initial_map(y))); }

SpanClass t_of(const EquivariantMap& f) { return SpanClass(Span::make(EquivariantMap::identity(f.source()), f)); }

SpanClass r_of(const EquivariantMap& f) { return SpanClass(Span::make(f, EquivariantMap::identity(f.source()))); }

SpanClass span_compose(const SpanClass& s2, const SpanClass& s1) {
  if (s1.target() != s2.source()) fail(ErrorKind::EndpointMismatch, "span_compose: middle objects differ");
  const Span& a = s1.representative();
  const Span& b = s2.representative();
  Pullback pb = pullback(a.right(), b.left());
  return SpanClass(Span::make(compose(a.left(), pb.proj1), compose(b.right(), pb.proj2)));
}

TRDecomposition tr_decompose(const SpanClass& s) {
  return TRDecomposition{s.representative().right(), s.representative().left()};
}

SpanClass span_flip(const SpanClass& s) {
  return SpanClass(Span::make(s.representative().right(), s.representative().left()));
}

SpanClass span_sum(const SpanClass& a, const SpanClass& b) {
  if (a.source() != b.source() || a.target() != b.target()) fail(ErrorKind::EndpointMismatch, "span_sum: endpoints differ");
  const Span& x = a.representative();
  const Span& y = b.representative();
  return SpanClass(Span::make(copair(x.left(), y.left()), copair(x.right(), y.right())));
}

std::vector<SpanClass> span_components(const SpanClass& s) {
  const Span& r = s.representative();
  std::vector<SpanClass> out;
  for (int o = 0; o < r.apex().orbit_count(); ++o) {
    SubSet sub = sub_gset(r.apex(), r.apex().orbit(o));
    out.emplace_back(Span::make(compose(r.left(), sub.inclusion), compose(r.right(), sub.inclusion)));
  }
  return out;
}

std::optional<IsoWitness> find_span_iso(const SpanClass& a, const SpanClass& b) {
  if (a.source() != b.source() || a.target() != b.target()) return std::nullopt;
  const Span& x = a.representative();
  const Span& y = b.representative();
  return find_iso_over(x.apex(), y.apex(), {x.left(), x.right()}, {y.left(), y.right()});
}

bool in_subcategory(const TransferRelation& o, const SpanClass& s) {
  return contains_map(o, s.representative().right());
}

bool span_is_over(const SpanClass& s, const SliceObject& alpha, const SliceObject& beta) {
  if (alpha.anchor() != beta.anchor()) return false;
  if (s.source() != alpha.domain() || s.target() != beta.domain()) return false;
  const Span& r = s.representative();
  for (int z = 0; z < r.apex().size(); ++z)
    if (alpha(r.left()(z)) != beta(r.right()(z))) return false;
  return true;
}

SpanClass map_span_sigma(const EquivariantMap&, const SpanClass& s) { return s; }

SpanClass map_span_pi(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta, const SpanClass& s,
                      const Caps& caps) {
  if (!span_is_over(s, alpha, beta)) fail(ErrorKind::AnchorMismatch, "map_span_pi: span is not over the anchor");
  const Span& r = s.representative();
  SliceObject zeta(compose(alpha.structure(), r.left()));
  DependentProduct pz = pi(i, zeta, caps);
  DependentProduct pa = pi(i, alpha, caps);
  DependentProduct pb = pi(i, beta, caps);
  SliceMap l = pi_map(pz, pa, SliceMap::trusted(zeta, alpha, r.left()));
  SliceMap rr = pi_map(pz, pb, SliceMap::trusted(zeta, beta, r.right()));
  return SpanClass(Span::make(l.underlying(), rr.underlying()));
}

SpanClass span_pair(const SpanClass& a, const SpanClass& b) {
  if (a.source() != b.source()) fail(ErrorKind::EndpointMismatch, "span_pair: sources differ");
  const Span& x = a.representative();
  const Span& y = b.representative();
  Coproduct cod = coproduct(a.target(), b.target());
  EquivariantMap right = copair(compose(cod.inj1, x.right()), compose(cod.inj2, y.right()));
  return SpanClass(Span::make(copair(x.left(), y.left()), right));
}

std::string describe(const SpanClass& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& sig : s.key()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(sig[0]) + " <- " + s.source().group().name() + "/" +
           subgroup_label(s.source().group(), sig[2]) + " -> " + std::to_string(sig[1]) + ")";
  }
  return out + "]";
}

}  // namespace tambara
