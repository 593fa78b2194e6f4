#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tambara/group.hpp"

namespace tambara {

namespace detail {
struct GSetData;
}

// Immutable finite G-set. Copies share storage.
class GSet {
 public:
  // act[g * size + p] is g.p. Validates the action axioms.
  static GSet from_action(FiniteGroup g, int size, std::vector<int> act);
  // Skips validation; for carriers built by construction.
  static GSet trusted(FiniteGroup g, int size, std::vector<int> act);

  const FiniteGroup& group() const;
  int size() const;
  int act(Elem g, int p) const;
  const std::vector<int>& action_table() const;

  // Orbits are numbered by their least point; point lists are sorted.
  int orbit_count() const;
  int orbit_of(int p) const;
  const std::vector<int>& orbit(int o) const;
  int orbit_rep(int o) const { return orbit(o).front(); }
  int stabilizer(int p) const;  // subgroup id

  bool operator==(const GSet& o) const;
  bool operator!=(const GSet& o) const { return !(*this == o); }
  bool same_object(const GSet& o) const { return d_ == o.d_; }

 private:
  explicit GSet(std::shared_ptr<const detail::GSetData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::GSetData> d_;
};

void validate_gset(const GSet& x);

class EquivariantMap {
 public:
  static EquivariantMap make(GSet source, GSet target, std::vector<int> values);
  static EquivariantMap trusted(GSet source, GSet target, std::vector<int> values);
  static EquivariantMap identity(const GSet& x);

  const GSet& source() const { return source_; }
  const GSet& target() const { return target_; }
  int operator()(int p) const { return values_[p]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const EquivariantMap& o) const {
    return values_ == o.values_ && source_ == o.source_ && target_ == o.target_;
  }

 private:
  EquivariantMap(GSet s, GSet t, std::vector<int> v)
      : source_(std::move(s)), target_(std::move(t)), values_(std::move(v)) {}
  GSet source_;
  GSet target_;
  std::vector<int> values_;
};

// g after f.
EquivariantMap compose(const EquivariantMap& g, const EquivariantMap& f);

struct IsoWitness {
  EquivariantMap forward;
  EquivariantMap backward;
};

struct OrbitInfo {
  std::vector<int> points;
  int stabilizer = 0;        // subgroup id of the least point's stabilizer
  int stabilizer_class = 0;  // conjugacy class id
};

GSet make_orbit(const FiniteGroup& g, const Subgroup& h);
GSet make_orbit(const FiniteGroup& g, int subgroup_id);
std::vector<OrbitInfo> orbit_decomposition(const GSet& x);

// Decides isomorphism of objects equipped with maps to fixed targets
// (legs_x[k] and legs_y[k] must share a target). With no legs this is plain
// G-set isomorphism; with one leg it is isomorphism in a slice.
std::optional<IsoWitness> find_iso_over(const GSet& x, const GSet& y, const std::vector<EquivariantMap>& legs_x,
                                        const std::vector<EquivariantMap>& legs_y);
std::optional<IsoWitness> find_iso(const GSet& x, const GSet& y);

// Orbitwise canonical signature of x over the given legs: for every orbit the
// least (leg values..., stabilizer id) over its points; sorted.
std::vector<std::vector<int>> orbit_signatures(const GSet& x, const std::vector<EquivariantMap>& legs);

GSet terminal(const FiniteGroup& g);
GSet initial(const FiniteGroup& g);
EquivariantMap terminal_map(const GSet& x);
EquivariantMap initial_map(const GSet& x);

struct Product {
  GSet object;
  EquivariantMap proj1;
  EquivariantMap proj2;
};
Product product(const GSet& x, const GSet& y);

struct Coproduct {
  GSet object;
  EquivariantMap inj1;
  EquivariantMap inj2;
};
Coproduct coproduct(const GSet& x, const GSet& y);

// Points (a, b) with f(a) = g(b), ordered lexicographically.
struct Pullback {
  GSet object;
  EquivariantMap proj1;  // to dom f
  EquivariantMap proj2;  // to dom g
  std::vector<int> offset;    // first index of pairs with a given a
  std::vector<int> position;  // rank of b within its g-fiber
  int index(int a, int b) const { return offset[a] + position[b]; }
};
Pullback pullback(const EquivariantMap& f, const EquivariantMap& g);

bool is_epi(const EquivariantMap& f);
bool is_mono(const EquivariantMap& f);
bool is_iso(const EquivariantMap& f);
std::optional<EquivariantMap> inverse(const EquivariantMap& f);

// Source is coproduct(x, x).object.
EquivariantMap codiagonal(const GSet& x);
// (f, g): dom f + dom g -> Z on the canonical coproduct.
EquivariantMap copair(const EquivariantMap& f, const EquivariantMap& g);
// f + g between canonical coproducts.
EquivariantMap coproduct_map(const EquivariantMap& f, const EquivariantMap& g);
// <f, g>: Z -> cod f x cod g on the canonical product.
EquivariantMap pair_into_product(const EquivariantMap& f, const EquivariantMap& g);

// Sub-G-set on a union of orbits, with its inclusion.
struct SubSet {
  GSet object;
  EquivariantMap inclusion;
};
SubSet sub_gset(const GSet& x, const std::vector<int>& points);

// Factor m through the pullback of (f, g): m1 : Z -> dom f, m2 : Z -> dom g.
EquivariantMap pullback_factor(const Pullback& pb, const EquivariantMap& m1, const EquivariantMap& m2);

// Whether the square top : a -> b, left : a -> c, right : b -> d, bottom : c -> d
// commutes and a is carried bijectively onto b x_d c.
bool is_cartesian(const EquivariantMap& top, const EquivariantMap& left, const EquivariantMap& right,
                  const EquivariantMap& bottom);

// Extends choices for the least point of every orbit of x into a map x -> y.
// Throws NotEquivariant when a stabilizer is not contained in the target's.
EquivariantMap extend_from_reps(const GSet& x, const GSet& y, const std::vector<int>& rep_images);

// All equivariant maps x -> y (optionally over a base: beta o m = alpha).
void for_each_map(const GSet& x, const GSet& y, const std::function<bool(const EquivariantMap&)>& visit);
void for_each_map_over(const EquivariantMap& alpha, const EquivariantMap& beta,
                       const std::function<bool(const EquivariantMap&)>& visit);
long long count_maps_over(const EquivariantMap& alpha, const EquivariantMap& beta);
long long count_maps(const GSet& x, const GSet& y);

// Disjoint union of orbits G/H for the given subgroup ids, in order.
GSet orbit_sum(const FiniteGroup& g, const std::vector<int>& subgroup_ids);

std::string describe(const GSet& x);

}  // namespace tambara
