#pragma once

#include <optional>
#include <vector>

#include "tambara/caps.hpp"
#include "tambara/gset.hpp"

namespace tambara {

// An object of C/x: a map into the anchor x.
class SliceObject {
 public:
  explicit SliceObject(EquivariantMap structure) : s_(std::move(structure)) {}
  static SliceObject identity(const GSet& x) { return SliceObject(EquivariantMap::identity(x)); }
  static SliceObject empty(const GSet& x) { return SliceObject(initial_map(x)); }

  const GSet& anchor() const { return s_.target(); }
  const GSet& domain() const { return s_.source(); }
  const EquivariantMap& structure() const { return s_; }
  int operator()(int p) const { return s_(p); }

  bool operator==(const SliceObject& o) const { return s_ == o.s_; }

 private:
  EquivariantMap s_;
};

class SliceMap {
 public:
  static SliceMap make(SliceObject from, SliceObject to, EquivariantMap underlying);
  static SliceMap trusted(SliceObject from, SliceObject to, EquivariantMap underlying) {
    return SliceMap(std::move(from), std::move(to), std::move(underlying));
  }
  static SliceMap identity(const SliceObject& a) { return SliceMap(a, a, EquivariantMap::identity(a.domain())); }

  const SliceObject& from() const { return from_; }
  const SliceObject& to() const { return to_; }
  const EquivariantMap& underlying() const { return u_; }
  int operator()(int p) const { return u_(p); }

  bool operator==(const SliceMap& o) const { return u_ == o.u_ && from_ == o.from_ && to_ == o.to_; }

 private:
  SliceMap(SliceObject f, SliceObject t, EquivariantMap u) : from_(std::move(f)), to_(std::move(t)), u_(std::move(u)) {}
  SliceObject from_;
  SliceObject to_;
  EquivariantMap u_;
};

SliceMap compose(const SliceMap& g, const SliceMap& f);
std::optional<IsoWitness> find_slice_iso(const SliceObject& a, const SliceObject& b);

// Sigma_i: postcompose with i.
SliceObject sigma(const EquivariantMap& i, const SliceObject& alpha);
SliceMap sigma_map(const EquivariantMap& i, const SliceMap& f);

// i^*: canonical pullback. Carrier points are pairs (p in x, b in dom beta).
struct Restriction {
  SliceObject object;   // over x
  EquivariantMap top;   // i^* beta -> dom beta
  Pullback square;      // pullback of (i, beta)
  int index(int p, int b) const { return square.index(p, b); }
};
Restriction restrict(const EquivariantMap& i, const SliceObject& beta);
SliceMap restrict_map(const Restriction& from, const Restriction& to, const SliceMap& f);

// Pi_i via sections over fibers of i.
class DependentProduct {
 public:
  DependentProduct(const EquivariantMap& i, const SliceObject& alpha, const Caps& caps);

  const SliceObject& object() const { return *object_; }
  const EquivariantMap& along() const { return i_; }
  const SliceObject& argument() const { return alpha_; }
  int size() const { return static_cast<int>(base_.size()); }
  int base(int d) const { return base_[d]; }
  const std::vector<int>& fiber(int q) const { return fibers_[q]; }
  int section_value(int d, int p) const;
  // values aligned with fiber(q); -1 when not a section.
  int find(int q, const std::vector<int>& values) const;

 private:
  EquivariantMap i_;
  SliceObject alpha_;
  std::vector<std::vector<int>> fibers_;     // per point of y
  std::vector<int> fiber_pos_;               // rank of p in its fiber
  std::vector<std::vector<int>> preimage_;   // alpha^-1(p), sorted
  std::vector<int> preimage_pos_;            // rank of a in alpha^-1(alpha(a))
  std::vector<long long> offset_;            // first section index over q
  std::vector<int> base_;
  std::vector<int> start_;                   // start of section values of d
  std::vector<int> values_;
  std::optional<SliceObject> object_;
};

DependentProduct pi(const EquivariantMap& i, const SliceObject& alpha, const Caps& caps = {});
// Pi_i f : Pi_i (dom) -> Pi_i (cod), for f a map over x.
SliceMap pi_map(const DependentProduct& from, const DependentProduct& to, const SliceMap& f);

enum class CellKind { UnitInd, CounitInd, UnitCoind, CounitCoind };

struct AdjunctionCell {
  CellKind kind;
  SliceObject at;
  SliceMap cell;
};

AdjunctionCell adjunction_cell(CellKind kind, const EquivariantMap& i, const SliceObject& at, const Caps& caps = {});

// Explicit hom-set bijections of the two adjunctions.
SliceMap ind_adjunct(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta, const SliceMap& f);
SliceMap ind_coadjunct(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta, const SliceMap& g);
SliceMap coind_adjunct(const EquivariantMap& i, const SliceObject& beta, const SliceObject& alpha, const SliceMap& h,
                       const Caps& caps = {});
SliceMap coind_coadjunct(const EquivariantMap& i, const SliceObject& beta, const SliceObject& alpha, const SliceMap& k,
                         const Caps& caps = {});

// N_g T_f = T_{Pi_g f} N_{pulled} R_{eps} for f : X -> Y, g : Y -> Z.
struct Distributor {
  DependentProduct pi_g_f;   // over Z
  Restriction corner;        // g^* Pi_g f, over Y
  EquivariantMap pulled;     // corner -> dom Pi_g f
  EquivariantMap eps;        // corner -> X
};
Distributor distributor(const EquivariantMap& f, const EquivariantMap& g, const Caps& caps = {});

struct SliceSplit {
  Restriction left;
  Restriction right;
  IsoWitness reassembly;  // Sigma left + Sigma right  ~  gamma, over the coproduct
};
SliceSplit slice_split(const EquivariantMap& inj1, const EquivariantMap& inj2, const SliceObject& gamma);

struct FiberData {
  FiniteGroup stabilizer_group;  // H, reindexed
  std::vector<Elem> embedding;   // H element -> G element
  int base_point = 0;            // point of the orbit with stabilizer H
  std::vector<int> points;       // fiber points in dom beta
  GSet fiber;                    // H-set
};
FiberData fiber_equivalence(const SliceObject& beta);
// G x_H S as an object over the orbit of fd.
SliceObject induce_fiber(const GSet& base, const FiberData& fd, const GSet& s);

}  // namespace tambara
