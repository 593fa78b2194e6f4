#pragma once

#include <optional>
#include <vector>

#include "tambara/caps.hpp"
#include "tambara/lindner.hpp"
#include "tambara/polynomial.hpp"
#include "tambara/transfer.hpp"

namespace tambara {

// Element of the representable semi-Mackey functor A(source, -) at a level,
// stored as its connected span terms in key order.
class MackeyValue {
 public:
  static MackeyValue of(const SpanClass& s);
  static MackeyValue zero(const GSet& source, const GSet& level);

  const GSet& source() const { return source_; }
  const GSet& level() const { return level_; }
  const std::vector<SpanClass>& terms() const { return terms_; }
  SpanClass as_span() const;
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const MackeyValue& o) const;
  bool operator!=(const MackeyValue& o) const { return !(*this == o); }

 private:
  MackeyValue(GSet s, GSet l, std::vector<SpanClass> t)
      : source_(std::move(s)), level_(std::move(l)), terms_(std::move(t)) {}
  GSet source_;
  GSet level_;
  std::vector<SpanClass> terms_;
};

MackeyValue mackey_act(const SpanClass& phi, const MackeyValue& s);
MackeyValue mackey_add(const MackeyValue& a, const MackeyValue& b);
MackeyValue mackey_zero(const GSet& source, const GSet& level);
// Sum through the pairing into level + level followed by T of the fold.
MackeyValue mackey_add_via_fold(const MackeyValue& a, const MackeyValue& b);
bool is_invertible(const MackeyValue& s);

// Burnside values are represented by the terminal object: spans pt <- z -> level.
MackeyValue burnside_value(const EquivariantMap& over_level);
SliceObject burnside_object(const MackeyValue& v);
MackeyValue burnside_norm(const EquivariantMap& i, const MackeyValue& v, const Caps& caps = {});
// Product at a level: fiber product over the level.
MackeyValue burnside_mul(const MackeyValue& a, const MackeyValue& b);

// Element of the representable semi-Tambara functor U(source, -).
class TambaraValue {
 public:
  explicit TambaraValue(BispanClass e) : e_(std::move(e)) {}
  const BispanClass& element() const { return e_; }
  const GSet& source() const { return e_.source(); }
  const GSet& level() const { return e_.target(); }
  bool operator==(const TambaraValue& o) const { return e_ == o.e_; }
  bool operator!=(const TambaraValue& o) const { return !(*this == o); }

 private:
  BispanClass e_;
};

TambaraValue tambara_act(const BispanClass& phi, const TambaraValue& s, const Caps& caps = {});
TambaraValue tambara_add(const TambaraValue& a, const TambaraValue& b, const Caps& caps = {});
TambaraValue tambara_mul(const TambaraValue& a, const TambaraValue& b, const Caps& caps = {});
TambaraValue tambara_zero(const GSet& source, const GSet& level);
TambaraValue tambara_one(const GSet& source, const GSet& level, const Caps& caps = {});
// Burnside semi-Tambara values are represented by the empty G-set.
TambaraValue burnside_tambara(const EquivariantMap& over_level);

// The Mackey action of a span on a Tambara value, through the embedding.
TambaraValue forget_act(const SpanClass& phi, const TambaraValue& s, const Caps& caps = {});

// Representable U(C/y)(rep, -), optionally precomposed with U(Sigma_i) for i : x -> y.
class SliceFunctor {
 public:
  explicit SliceFunctor(SliceObject rep) : rep_(std::move(rep)) {}
  const SliceObject& representing() const { return rep_; }
  const std::optional<EquivariantMap>& along() const { return along_; }
  // The level of the original functor that a level alpha is evaluated at.
  SliceObject level_of(const SliceObject& alpha) const;
  bool is_value(const SliceObject& alpha, const TambaraValue& v) const;
  TambaraValue act(const BispanClass& phi, const TambaraValue& v, const Caps& caps = {}) const;
  TambaraValue add(const SliceObject& alpha, const TambaraValue& a, const TambaraValue& b,
                   const Caps& caps = {}) const;

 private:
  friend SliceFunctor restrict_functor(const TransferRelation&, const EquivariantMap&, const SliceFunctor&);
  SliceObject rep_;
  std::optional<EquivariantMap> along_;
};
SliceFunctor restrict_functor(const TransferRelation& om, const EquivariantMap& i, const SliceFunctor& f);

// Formal difference of G-sets over a level, in reduced form.
class CompletedValue {
 public:
  CompletedValue(SliceObject pos, SliceObject neg);
  static CompletedValue of(const MackeyValue& v);
  static CompletedValue zero(const GSet& level);

  const SliceObject& pos() const { return pos_; }
  const SliceObject& neg() const { return neg_; }
  const GSet& level() const { return pos_.anchor(); }
  bool is_zero() const { return pos_.domain().size() == 0 && neg_.domain().size() == 0; }
  // Orbit multiplicities keyed by (point of the level, stabilizer) signature.
  std::vector<std::pair<std::vector<int>, int>> coefficients() const;

  bool operator==(const CompletedValue& o) const;
  bool operator!=(const CompletedValue& o) const { return !(*this == o); }

 private:
  SliceObject pos_;
  SliceObject neg_;
};

CompletedValue group_complete(const MackeyValue& v);
CompletedValue group_complete(const MackeyValue& pos, const MackeyValue& neg);
CompletedValue completed_add(const CompletedValue& a, const CompletedValue& b);
CompletedValue completed_neg(const CompletedValue& a);
CompletedValue completed_mul(const CompletedValue& a, const CompletedValue& b);

// Number of points over p fixed by the subgroup l (l inside the stabilizer of p).
long long fixed_count(const SliceObject& v, int p, int l);
long long fixed_count(const CompletedValue& v, int p, int l);
// Reassembles a value from fixed-point counts indexed [point][subgroup id].
CompletedValue from_marks(const GSet& level, const std::vector<std::vector<long long>>& marks);

// The norm on formal differences, through fixed-point counts.
CompletedValue completed_norm(const EquivariantMap& i, const CompletedValue& v);
// T_t N_n R_r applied to a formal difference.
CompletedValue completed_eval(const BispanClass& b, const CompletedValue& v);

// Norm of a sum split along the complement of j : id -> Pi_i (fold):
// N(a + b) = N(a) + other(a, b).
struct MazurSplit {
  CompletedValue norm_a;
  CompletedValue other;
  CompletedValue norm_sum;
};
std::optional<MazurSplit> mazur_split(const EquivariantMap& i, const CompletedValue& a, const CompletedValue& b,
                                      const Caps& caps = {});

std::string describe(const MackeyValue& v);
std::string describe(const CompletedValue& v);

}  // namespace tambara
