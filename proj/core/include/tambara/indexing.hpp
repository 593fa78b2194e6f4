#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tambara/caps.hpp"
#include "tambara/slice.hpp"
#include "tambara/transfer.hpp"

namespace tambara {

// Finite test window: coproducts of up to max_orbits orbits, one subgroup per
// conjugacy class. Checks involving Pi use sources of up to pi_orbits orbits
// over a single target orbit.
struct Window {
  int max_orbits = 3;
  int pi_orbits = 2;
};

struct Certificate {
  bool pass = true;
  int checked = 0;
  int skipped = 0;  // instances over the caps
  std::string witness;
  std::vector<std::string> details;
};

std::vector<GSet> window_objects(const FiniteGroup& g, int max_orbits);

// Reflexive, conjugation closed, restriction closed and transitive; returns a
// description of the first violation.
std::optional<std::string> transfer_axiom_violation(const TransferRelation& o);
TransferRelation transfer_closure(const FiniteGroup& g, const std::vector<std::pair<int, int>>& pairs);

// Checks the subcategory axioms on maps of the window.
Certificate validate_indexing(const TransferRelation& o, const Window& w = {});
Certificate is_compatible_pair(const TransferRelation& additive, const TransferRelation& multiplicative,
                               const Window& w = {}, const Caps& caps = {});

// j_f : id_y -> Pi_f (fold) and a complement of its image.
struct SplitSection {
  EquivariantMap f;
  SliceMap j;
  SubSet complement;
  IsoWitness reassembly;  // image + complement ~ Pi_f (fold)
};
std::optional<SplitSection> split_section(const EquivariantMap& f, const Caps& caps = {});
Certificate is_separable(const IndexPair& index, const Window& w = {}, const Caps& caps = {});

// O/x: membership of slice maps is membership of the underlying maps.
class SlicedIndex {
 public:
  SlicedIndex(IndexPair index, GSet anchor) : index_(std::move(index)), anchor_(std::move(anchor)) {}
  const GSet& anchor() const { return anchor_; }
  bool additive(const SliceMap& f) const;
  bool multiplicative(const SliceMap& f) const;
  // Compatibility re-checked over objects of the window equipped with maps to the anchor.
  Certificate compatible(const Window& w = {}, const Caps& caps = {}) const;

 private:
  IndexPair index_;
  GSet anchor_;
};
SlicedIndex slice_index(const IndexPair& index, const GSet& x);

// All transfer relations, ordered so that inclusions go forward.
std::vector<TransferRelation> enumerate_transfer_relations(const FiniteGroup& g, int max_order = 12);

}  // namespace tambara
