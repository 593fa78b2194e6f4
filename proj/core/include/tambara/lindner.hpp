#pragma once

#include <vector>

#include "tambara/caps.hpp"
#include "tambara/gset.hpp"
#include "tambara/slice.hpp"
#include "tambara/transfer.hpp"

namespace tambara {

// x <- z -> y
class Span {
 public:
  static Span make(EquivariantMap left, EquivariantMap right);

  const EquivariantMap& left() const { return left_; }
  const EquivariantMap& right() const { return right_; }
  const GSet& apex() const { return left_.source(); }
  const GSet& source() const { return left_.target(); }
  const GSet& target() const { return right_.target(); }

 private:
  Span(EquivariantMap l, EquivariantMap r) : left_(std::move(l)), right_(std::move(r)) {}
  EquivariantMap left_;
  EquivariantMap right_;
};

using SpanKey = std::vector<std::vector<int>>;

// Isomorphism class of a span. The key lists, for each apex orbit, the least
// (left value, right value, stabilizer) over its points; it is a complete
// invariant for spans with fixed endpoints.
class SpanClass {
 public:
  explicit SpanClass(Span rep);

  const Span& representative() const { return rep_; }
  const SpanKey& key() const { return key_; }
  const GSet& source() const { return rep_.source(); }
  const GSet& target() const { return rep_.target(); }
  bool is_zero() const { return rep_.apex().size() == 0; }

  bool operator==(const SpanClass& o) const;
  bool operator!=(const SpanClass& o) const { return !(*this == o); }
  bool operator<(const SpanClass& o) const { return key_ < o.key_; }

 private:
  Span rep_;
  SpanKey key_;
};

SpanClass identity_span(const GSet& x);
SpanClass zero_span(const GSet& x, const GSet& y);
SpanClass t_of(const EquivariantMap& f);  // x -> y
SpanClass r_of(const EquivariantMap& f);  // y -> x

SpanClass span_compose(const SpanClass& s2, const SpanClass& s1);

struct TRDecomposition {
  EquivariantMap t;  // right leg
  EquivariantMap r;  // left leg
};
TRDecomposition tr_decompose(const SpanClass& s);

SpanClass span_flip(const SpanClass& s);
SpanClass span_sum(const SpanClass& a, const SpanClass& b);
std::vector<SpanClass> span_components(const SpanClass& s);
std::optional<IsoWitness> find_span_iso(const SpanClass& a, const SpanClass& b);

bool in_subcategory(const TransferRelation& o, const SpanClass& s);

// Whether s is a span from alpha to beta inside C/x.
bool span_is_over(const SpanClass& s, const SliceObject& alpha, const SliceObject& beta);
// Sigma_i acts as the identity on legs.
SpanClass map_span_sigma(const EquivariantMap& i, const SpanClass& s);
// Pi_i image of a span alpha -> beta in C/x; a span Pi alpha -> Pi beta.
SpanClass map_span_pi(const EquivariantMap& i, const SliceObject& alpha, const SliceObject& beta, const SpanClass& s,
                      const Caps& caps = {});

// Pairing for the product x + y in spans: the inverse of (R_{i1} o -, R_{i2} o -).
SpanClass span_pair(const SpanClass& a, const SpanClass& b);

std::string describe(const SpanClass& s);

}  // namespace tambara
