#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tambara/gset.hpp"
#include "tambara/transfer.hpp"
#include "tambara/sample.hpp"
#include "tambara/verify.hpp"

namespace tambara::suites {

using Verdict = std::optional<std::string>;

inline Verdict unless(bool good, const std::string& what) {
  if (good) return std::nullopt;
  return what;
}

// Built-in group by name, built once.
const FiniteGroup& group_named(const std::string& name);
// The groups every seeded law runs over.
const std::vector<std::string>& law_groups();

Shape shrunk(Shape s, int shrink);

using SampledBody = std::function<Verdict(const FiniteGroup&, Rng&, const Shape&, const Caps&)>;
// per_group seeded cases for each group; case k runs on groups[k % size].
Check sampled(std::string name, const std::vector<std::string>& groups, int per_group, Shape shape, SampledBody body);

template <class T>
Check exhaustive(std::string name, std::vector<T> items, std::function<Verdict(const T&, const Caps&)> body) {
  auto shared = std::make_shared<const std::vector<T>>(std::move(items));
  Check c;
  c.name = std::move(name);
  c.cases = static_cast<int>(shared->size());
  c.max_shrink = 0;
  c.run = [shared, body = std::move(body)](const CaseContext& ctx) { return body((*shared)[ctx.index], ctx.caps); };
  return c;
}

// Window objects of each listed group, as (group, object) pairs.
std::vector<GSet> window(const std::vector<std::string>& groups, int max_orbits);
std::vector<std::pair<GSet, GSet>> window_pairs(const std::vector<std::string>& groups, int max_orbits);

// Transfer relations of a built-in group, computed once.
const std::vector<TransferRelation>& relations_of(const std::string& group);

// (orbit size, stabilizer order) per orbit.
std::multiset<std::pair<int, int>> orbit_profile(const GSet& x);

// x over a nonempty y, with alpha over x and beta over y.
struct SliceInstance {
  EquivariantMap i;
  SliceObject alpha;
  SliceObject beta;
};
SliceInstance slice_instance(const FiniteGroup& g, Rng& rng, const Shape& shape);

// A uniformly chosen map over the base, if any exists.
std::optional<EquivariantMap> random_map_over(const EquivariantMap& alpha, const EquivariantMap& beta, Rng& rng);
// m : dom(m) -> dom(alpha) as a slice map alpha o m -> alpha.
SliceMap random_map_into(const SliceObject& alpha, Rng& rng, const Shape& shape);

std::vector<Check> lccdc_axioms();
std::vector<Check> adjunction_cartesian();
std::vector<Check> hoyer_appendix();
std::vector<Check> lindner_laws();
std::vector<Check> polynomial_laws();
std::vector<Check> product_universality();
std::vector<Check> mackey_factorization();
std::vector<Check> indexing_axioms();
std::vector<Check> separability_mazur();
std::vector<Check> main_theorem();
std::vector<Check> mackey_preservation();
std::vector<Check> forgetful_cube();

}  // namespace tambara::suites
