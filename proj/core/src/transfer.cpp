#include "tambara/transfer.hpp"

#include "tambara/error.hpp"

namespace tambara {

TransferRelation::TransferRelation(FiniteGroup g, const std::vector<std::pair<int, int>>& pairs)
    : g_(std::move(g)), n_(g_.subgroup_count()), adm_(static_cast<std::size_t>(n_) * n_, false) {
  for (auto [h, k] : pairs) {
    if (h < 0 || k < 0 || h >= n_ || k >= n_) fail(ErrorKind::MalformedSpec, "subgroup id out of range");
    if (!g_.is_subgroup_of(h, k)) fail(ErrorKind::MalformedSpec, "admissible pair (H, K) needs H <= K");
    adm_[h * n_ + k] = true;
  }
}

TransferRelation TransferRelation::trivial(const FiniteGroup& g) {
  std::vector<std::pair<int, int>> p;
  for (int h = 0; h < g.subgroup_count(); ++h) p.emplace_back(h, h);
  return TransferRelation(g, p);
}

TransferRelation TransferRelation::complete(const FiniteGroup& g) {
  std::vector<std::pair<int, int>> p;
  for (int h = 0; h < g.subgroup_count(); ++h)
    for (int k = 0; k < g.subgroup_count(); ++k)
      if (g.is_subgroup_of(h, k)) p.emplace_back(h, k);
  return TransferRelation(g, p);
}

std::vector<std::pair<int, int>> TransferRelation::pairs() const {
  std::vector<std::pair<int, int>> p;
  for (int h = 0; h < n_; ++h)
    for (int k = 0; k < n_; ++k)
      if (admits(h, k)) p.emplace_back(h, k);
  return p;
}

int TransferRelation::size() const {
  int c = 0;
  for (bool b : adm_) c += b;
  return c;
}

bool TransferRelation::subset_of(const TransferRelation& o) const {
  for (std::size_t k = 0; k < adm_.size(); ++k)
    if (adm_[k] && !o.adm_[k]) return false;
  return true;
}

TransferRelation TransferRelation::intersect(const TransferRelation& o) const {
  std::vector<std::pair<int, int>> p;
  for (auto hk : pairs())
    if (o.admits(hk.first, hk.second)) p.push_back(hk);
  return TransferRelation(g_, p);
}

bool contains_map(const TransferRelation& o, const EquivariantMap& f) {
  const GSet& x = f.source();
  for (int c = 0; c < x.orbit_count(); ++c) {
    int p = x.orbit_rep(c);
    if (!o.admits(x.stabilizer(p), f.target().stabilizer(f(p)))) return false;
  }
  return true;
}

}  // namespace tambara
