#include "tambara/kan_norm.hpp"

#include <map>

#include "tambara/error.hpp"
#include "tambara/sample.hpp"

namespace tambara {

BispanClass t_component(const EquivariantMap& i, const SliceObject& g, const Caps& caps) {
  if (g.anchor() != i.source()) fail(ErrorKind::AnchorMismatch, "t_component: object is not over the source of i");
  AdjunctionCell counit = adjunction_cell(CellKind::CounitCoind, i, g, caps);
  DependentProduct p = pi(i, g, caps);
  Restriction back = restrict(i, p.object());
  return BispanClass(Bispan::make(counit.cell.underlying(), back.top, EquivariantMap::identity(p.object().domain())));
}

BispanClass t_component(const TransferRelation& om, const EquivariantMap& i, const SliceObject& g,
                        const Caps& caps) {
  if (!contains_map(om, i)) fail(ErrorKind::NotInOm, "t_component: i is not multiplicative");
  return t_component(i, g, caps);
}

BispanClass omega(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& g, const BispanClass& psi,
                  const Caps& caps) {
  if (!bispan_is_over(psi, alpha, g)) fail(ErrorKind::AnchorMismatch, "omega: bispan is not over x");
  return bispan_compose(t_component(i, g, caps), map_bispan(i, psi), caps);
}

SigmaData sigma_decompose(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta,
                          const BispanClass& phi) {
  if (beta.anchor() != i.target() || alpha.anchor() != i.source())
    fail(ErrorKind::AnchorMismatch, "sigma_decompose: anchors do not match i");
  if (phi.source() != alpha.domain()) fail(ErrorKind::NotOverSigma, "sigma_decompose: source is not Sigma_i alpha");
  SliceObject sa = sigma(i, alpha);
  if (!bispan_is_over(phi, sa, beta)) fail(ErrorKind::AnchorMismatch, "sigma_decompose: bispan is not over y");
  const Bispan& r = phi.representative();
  SliceObject a(compose(alpha.structure(), r.r()));
  SliceObject b(compose(beta.structure(), r.t()));
  Restriction ib = restrict(i, b);
  std::vector<int> adj(a.domain().size());
  for (int z = 0; z < a.domain().size(); ++z) adj[z] = ib.index(a(z), r.n()(z));
  return SigmaData{b, SliceMap::make(a, alpha, r.r()), SliceMap::make(a, ib.object, EquivariantMap::make(a.domain(), ib.object.domain(), std::move(adj))),
                   SliceMap::make(b, beta, r.t())};
}

BispanClass reassemble(const EquivariantMap& i, const SigmaData& d) {
  Restriction ib = restrict(i, d.b);
  return BispanClass(
      Bispan::make(d.h.underlying(), compose(ib.top, d.g_adj.underlying()), d.f.underlying()));
}

std::pair<BispanClass, BispanClass> key_lemma_sides(const EquivariantMap& i, const SliceObject& alpha,
                                                    const SigmaData& d, const Caps& caps) {
  Restriction ib = restrict(i, d.b);
  BispanClass psi(Bispan::make(d.h.underlying(), d.g_adj.underlying(), EquivariantMap::identity(ib.object.domain())));
  AdjunctionCell unit = adjunction_cell(CellKind::UnitCoind, i, d.b, caps);
  BispanClass lhs = bispan_compose(br_of(unit.cell.underlying()), omega(i, alpha, ib.object, psi, caps), caps);
  BispanClass rhs(Bispan::make(d.h.underlying(), compose(ib.top, d.g_adj.underlying()),
                               EquivariantMap::identity(d.b.domain())));
  return {lhs, rhs};
}

bool key_lemma_check(const EquivariantMap& i, const SliceObject& alpha, const SigmaData& d, const Caps& caps) {
  auto [lhs, rhs] = key_lemma_sides(i, alpha, d, caps);
  return lhs == rhs;
}

ColimElement colim_element(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta,
                           const SigmaData& d, const Caps& caps) {
  if (!(d.f.to() == beta)) fail(ErrorKind::EndpointMismatch, "colim_element: data does not end at beta");
  if (!(d.h.to() == alpha)) fail(ErrorKind::EndpointMismatch, "colim_element: data does not start at alpha");
  Restriction ib = restrict(i, d.b);
  AdjunctionCell unit = adjunction_cell(CellKind::UnitCoind, i, d.b, caps);
  SpanClass phi(Span::make(unit.cell.underlying(), d.f.underlying()));
  BispanClass psi(Bispan::make(d.h.underlying(), d.g_adj.underlying(), EquivariantMap::identity(ib.object.domain())));
  return ColimElement{ib.object, phi, psi};
}

BispanClass lambda_map(const EquivariantMap& i, const SliceObject& alpha, const ColimElement& el, const Caps& caps) {
  return bispan_compose(embed_span(el.phi), omega(i, alpha, el.g, el.psi, caps), caps);
}

ColimElement eta_unit(const EquivariantMap& i, const SliceObject& target, const BispanClass& s, const Caps& caps) {
  DependentProduct p = pi(i, target, caps);
  return ColimElement{target, identity_span(p.object().domain()), s};
}

std::pair<ColimElement, ColimElement> comma_pair(const EquivariantMap& i, const SliceObject& g, const SliceObject& g2,
                                                 const SpanClass& chi, const SpanClass& phi, const BispanClass& psi,
                                                 const Caps& caps) {
  SpanClass pushed = span_compose(phi, map_span_pi(i, g, g2, chi, caps));
  BispanClass pulled = bispan_compose(embed_span(chi), psi, caps);
  return {ColimElement{g, pushed, psi}, ColimElement{g2, phi, pulled}};
}

LanEvaluation lan_eval_representable(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta,
                                     const Caps& caps) {
  if (alpha.anchor() != i.source() || beta.anchor() != i.target())
    fail(ErrorKind::AnchorMismatch, "lan_eval_representable: anchors do not match i");
  EquivariantMap down = compose(i, alpha.structure());
  std::map<BispanKey, BispanClass> found;
  for (const EquivariantMap& f : objects_over(beta.domain(), caps.max_enum)) {
    Pullback p = pullback(down, compose(beta.structure(), f));
    if (p.object.size() > caps.max_points)
      fail(ErrorKind::SizeCapExceeded, "lan_eval_representable: pullback of " + std::to_string(p.object.size()) +
                                           " points");
    for (const EquivariantMap& m : objects_over(p.object, caps.max_enum)) {
      BispanClass c(Bispan::make(compose(p.proj1, m), compose(p.proj2, m), f));
      found.try_emplace(c.key(), std::move(c));
    }
  }
  LanEvaluation out{{}, {}, caps};
  for (auto& [key, c] : found) {
    out.elements.push_back(colim_element(i, alpha, beta, sigma_decompose(i, alpha, beta, c), caps));
    out.classes.push_back(std::move(c));
  }
  return out;
}

}  // namespace tambara
