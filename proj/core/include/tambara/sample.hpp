#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tambara/lindner.hpp"
#include "tambara/polynomial.hpp"
#include "tambara/slice.hpp"

namespace tambara {

// Deterministic across platforms: no std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : e_(seed) {}
  std::uint64_t next() { return e_(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(e_() % static_cast<std::uint64_t>(n)); }
  bool coin() { return (e_() & 1U) != 0; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(static_cast<int>(v.size()))]; }

 private:
  std::mt19937_64 e_;
};

// Mixes a suite seed with a case index.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

struct Shape {
  int max_orbits = 3;
  int max_points = 6;
  bool allow_empty = true;
};

// Subgroups contained in mask with index at most max_index.
std::vector<int> subgroups_below(const FiniteGroup& g, ElemMask mask, int max_index);

GSet random_gset(const FiniteGroup& g, Rng& rng, const Shape& shape = {});
// Random object over x; empty when x is empty.
EquivariantMap random_over(const GSet& x, Rng& rng, const Shape& shape = {});
std::optional<EquivariantMap> random_map(const GSet& x, const GSet& y, Rng& rng);
SpanClass random_span(const GSet& x, const GSet& y, Rng& rng, const Shape& shape = {});
BispanClass random_bispan(const GSet& x, const GSet& y, Rng& rng, const Shape& middle = {}, const Shape& top = {});

// Spans and bispans alpha -> beta inside C/x, built through pullbacks over x.
SpanClass random_span_over(const SliceObject& alpha, const SliceObject& beta, Rng& rng, const Shape& shape = {});
BispanClass random_bispan_over(const SliceObject& alpha, const SliceObject& beta, Rng& rng, const Shape& middle = {},
                               const Shape& top = {});

// One object over q per isomorphism class over q, up to max_points points,
// including the empty one.
std::vector<EquivariantMap> objects_over(const GSet& q, int max_points);

// Objects built orbit by orbit: orbit k is G/H_k and its least point goes to
// images[leg][k] under leg.
struct Assembled {
  GSet object;
  std::vector<EquivariantMap> legs;
};
Assembled assemble(const FiniteGroup& g, const std::vector<int>& subgroup_ids, const std::vector<GSet>& targets,
                   const std::vector<std::vector<int>>& images);

}  // namespace tambara
