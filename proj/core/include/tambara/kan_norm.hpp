#pragma once

#include <utility>
#include <vector>

#include "tambara/caps.hpp"
#include "tambara/lindner.hpp"
#include "tambara/polynomial.hpp"
#include "tambara/slice.hpp"
#include "tambara/transfer.hpp"

namespace tambara {

// A representative of the coend computing Lan along Pi_i of a representable:
// g over x, phi : Pi_i g -> beta in A(C/y), psi : alpha -> g in U(C/x).
struct ColimElement {
  SliceObject g;
  SpanClass phi;
  BispanClass psi;
};

// Sigma_i alpha <- Sigma_i a -> b -> beta with the top leg read back over x.
struct SigmaData {
  SliceObject b;    // over y
  SliceMap h;       // a -> alpha
  SliceMap g_adj;   // a -> i^* b
  SliceMap f;       // b -> beta
};

// t_g = N_{counit of Sigma -| i^*} R_{Sigma counit of i^* -| Pi}, a bispan Sigma_i g -> Pi_i g.
BispanClass t_component(const EquivariantMap& i, const SliceObject& g, const Caps& caps = {});
// Same, refusing i outside om.
BispanClass t_component(const TransferRelation& om, const EquivariantMap& i, const SliceObject& g,
                        const Caps& caps = {});

// t_g o Sigma_i psi for psi : alpha -> g in U(C/x).
BispanClass omega(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& g, const BispanClass& psi,
                  const Caps& caps = {});

SigmaData sigma_decompose(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta,
                          const BispanClass& phi);
// T_f N_{counit o Sigma g_adj} R_{Sigma h}.
BispanClass reassemble(const EquivariantMap& i, const SigmaData& d);

// Both sides of R_{unit_b} o omega(N_{g_adj} R_h) = N_g R_{Sigma h}.
std::pair<BispanClass, BispanClass> key_lemma_sides(const EquivariantMap& i, const SliceObject& alpha,
                                                    const SigmaData& d, const Caps& caps = {});
bool key_lemma_check(const EquivariantMap& i, const SliceObject& alpha, const SigmaData& d, const Caps& caps = {});

// (i^* b, T_f R_{unit_b}, N_{g_adj} R_h).
ColimElement colim_element(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta,
                           const SigmaData& d, const Caps& caps = {});
// embed(phi) o omega(psi).
BispanClass lambda_map(const EquivariantMap& i, const SliceObject& alpha, const ColimElement& el,
                       const Caps& caps = {});
// (alpha', identity on Pi_i alpha', s) for s : alpha -> alpha'.
ColimElement eta_unit(const EquivariantMap& i, const SliceObject& target, const BispanClass& s, const Caps& caps = {});

// For chi : g -> g2 in A(C/x), the representatives (g, phi o Pi_i chi, psi)
// and (g2, phi, chi o psi), which the coend identifies.
std::pair<ColimElement, ColimElement> comma_pair(const EquivariantMap& i, const SliceObject& g, const SliceObject& g2,
                                                 const SpanClass& chi, const SpanClass& phi, const BispanClass& psi,
                                                 const Caps& caps = {});

struct LanEvaluation {
  std::vector<BispanClass> classes;   // sorted, distinct
  std::vector<ColimElement> elements; // aligned with classes
  Caps caps;
};
// U(C/y)(Sigma_i alpha, beta), restricted to bispans whose top and middle
// objects have at most caps.max_enum points.
LanEvaluation lan_eval_representable(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta,
                                     const Caps& caps = {});

}  // namespace tambara
