#pragma once

#include <utility>
#include <vector>

#include "tambara/gset.hpp"

namespace tambara {

// A set of subgroup pairs (H, K) with H <= K, by subgroup id. Membership of a
// map is decided orbitwise on (stabilizer of a point, stabilizer of its image).
class TransferRelation {
 public:
  TransferRelation(FiniteGroup g, const std::vector<std::pair<int, int>>& pairs);
  static TransferRelation trivial(const FiniteGroup& g);
  static TransferRelation complete(const FiniteGroup& g);

  const FiniteGroup& group() const { return g_; }
  bool admits(int h, int k) const { return adm_[h * n_ + k]; }
  std::vector<std::pair<int, int>> pairs() const;
  int size() const;
  bool subset_of(const TransferRelation& o) const;
  TransferRelation intersect(const TransferRelation& o) const;

  bool operator==(const TransferRelation& o) const { return adm_ == o.adm_ && g_ == o.g_; }

 private:
  FiniteGroup g_;
  int n_ = 0;
  std::vector<bool> adm_;
};

bool contains_map(const TransferRelation& o, const EquivariantMap& f);

struct IndexPair {
  TransferRelation additive;
  TransferRelation multiplicative;
};

}  // namespace tambara
