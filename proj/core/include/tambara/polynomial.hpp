#pragma once

#include <optional>
#include <vector>

#include "tambara/caps.hpp"
#include "tambara/lindner.hpp"
#include "tambara/slice.hpp"
#include "tambara/transfer.hpp"

namespace tambara {

// x <- z -> w -> y, read as T_t N_n R_r.
class Bispan {
 public:
  static Bispan make(EquivariantMap r, EquivariantMap n, EquivariantMap t);

  const EquivariantMap& r() const { return r_; }
  const EquivariantMap& n() const { return n_; }
  const EquivariantMap& t() const { return t_; }
  const GSet& top() const { return r_.source(); }
  const GSet& middle() const { return t_.source(); }
  const GSet& source() const { return r_.target(); }
  const GSet& target() const { return t_.target(); }

 private:
  Bispan(EquivariantMap r, EquivariantMap n, EquivariantMap t) : r_(std::move(r)), n_(std::move(n)), t_(std::move(t)) {}
  EquivariantMap r_;
  EquivariantMap n_;
  EquivariantMap t_;
};

using BispanKey = std::vector<std::vector<int>>;

// Isomorphism class of a bispan. The key has one entry per orbit of the
// middle object: the least (t value, stabilizer K, fiber signature) over its
// points, where the fiber signature lists the K-orbits of the fiber by least
// (r value, stabilizer). It is a complete invariant for fixed endpoints.
class BispanClass {
 public:
  explicit BispanClass(Bispan rep);

  const Bispan& representative() const { return rep_; }
  const BispanKey& key() const { return key_; }
  const GSet& source() const { return rep_.source(); }
  const GSet& target() const { return rep_.target(); }
  bool is_zero() const { return rep_.middle().size() == 0; }

  bool operator==(const BispanClass& o) const;
  bool operator!=(const BispanClass& o) const { return !(*this == o); }
  bool operator<(const BispanClass& o) const { return key_ < o.key_; }

 private:
  Bispan rep_;
  BispanKey key_;
};

BispanClass identity_bispan(const GSet& x);
BispanClass zero_bispan(const GSet& x, const GSet& y);
BispanClass bt_of(const EquivariantMap& f);
BispanClass bn_of(const EquivariantMap& f);
BispanClass br_of(const EquivariantMap& f);

// Reduces (T N R)(T N R) to T N R through a pullback, a distributor and a second pullback.
BispanClass bispan_compose(const BispanClass& b2, const BispanClass& b1, const Caps& caps = {});

struct NormalForm {
  EquivariantMap t;
  EquivariantMap n;
  EquivariantMap r;
};
NormalForm normal_form(const BispanClass& b);

BispanClass embed_span(const SpanClass& s);
bool in_subcategory_u(const IndexPair& o, const BispanClass& b);

bool bispan_is_over(const BispanClass& b, const SliceObject& alpha, const SliceObject& beta);
// Sigma_i leaves every leg unchanged.
BispanClass map_bispan(const EquivariantMap& i, const BispanClass& b);

BispanClass bispan_sum(const BispanClass& a, const BispanClass& b);
// Pairing into the product x + y of U.
BispanClass bispan_pair(const BispanClass& a, const BispanClass& b);
std::vector<BispanClass> bispan_components(const BispanClass& b);
// Whether the components of part form a sub-multiset of those of whole.
bool is_summand(const BispanClass& part, const BispanClass& whole);

struct BispanIso {
  IsoWitness top;
  IsoWitness middle;
};
std::optional<BispanIso> find_bispan_iso(const BispanClass& a, const BispanClass& b);

std::string describe(const BispanClass& b);

}  // namespace tambara
