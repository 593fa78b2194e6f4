#include "tambara/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "tambara/error.hpp"

namespace tambara {
namespace detail {

struct GroupData {
  std::string name;
  int n = 0;
  std::vector<int> table;
  Elem identity = 0;
  std::vector<Elem> inverse;
  std::vector<Elem> generators;
  std::vector<std::vector<int>> permutations;

  std::vector<Subgroup> subgroups;
  std::unordered_map<ElemMask, int> mask_to_id;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;
  std::vector<int> conj;  // conj[h * n + g] = id of g H g^-1

  Elem mul(Elem a, Elem b) const { return table[a * n + b]; }

  ElemMask closure(ElemMask seeds) const {
    std::vector<Elem> gens;
    for (int g = 0; g < n; ++g)
      if ((seeds >> g) & 1U) gens.push_back(g);
    ElemMask seen = ElemMask{1} << identity;
    std::vector<Elem> frontier{identity};
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem a : frontier)
        for (Elem s : gens) {
          Elem c = mul(a, s);
          if (!((seen >> c) & 1U)) {
            seen |= ElemMask{1} << c;
            next.push_back(c);
          }
        }
      frontier = std::move(next);
    }
    return seen;
  }

  ElemMask conjugate_mask(ElemMask m, Elem g) const {
    ElemMask out = 0;
    for (int h = 0; h < n; ++h)
      if ((m >> h) & 1U) out |= ElemMask{1} << mul(mul(g, h), inverse[g]);
    return out;
  }

  void build_lattice() {
    std::vector<ElemMask> found{closure(0)};
    std::unordered_map<ElemMask, bool> seen{{found[0], true}};
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (int g = 0; g < n; ++g) {
        if ((found[i] >> g) & 1U) continue;
        ElemMask k = closure(found[i] | (ElemMask{1} << g));
        if (seen.emplace(k, true).second) found.push_back(k);
      }
    }
    for (ElemMask m : found) {
      Subgroup s;
      s.mask = m;
      for (int g = 0; g < n; ++g)
        if ((m >> g) & 1U) s.elements.push_back(g);
      subgroups.push_back(std::move(s));
    }
    std::sort(subgroups.begin(), subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.elements < b.elements;
    });
    for (int id = 0; id < static_cast<int>(subgroups.size()); ++id) mask_to_id[subgroups[id].mask] = id;

    int s = static_cast<int>(subgroups.size());
    conj.assign(static_cast<std::size_t>(s) * n, 0);
    for (int h = 0; h < s; ++h)
      for (int g = 0; g < n; ++g) conj[h * n + g] = mask_to_id.at(conjugate_mask(subgroups[h].mask, g));

    class_of.assign(s, -1);
    for (int h = 0; h < s; ++h) {
      if (class_of[h] >= 0) continue;
      int c = static_cast<int>(classes.size());
      classes.emplace_back();
      for (int g = 0; g < n; ++g) {
        int k = conj[h * n + g];
        if (class_of[k] < 0) {
          class_of[k] = c;
          classes[c].push_back(k);
        }
      }
      std::sort(classes[c].begin(), classes[c].end());
    }
  }
};

}  // namespace detail

namespace {

void validate_and_finish(detail::GroupData& d) {
  const int n = d.n;
  // identity
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = d.mul(c, a) == a && d.mul(a, c) == a;
    if (ok) e = c;
  }
  if (e < 0) fail(ErrorKind::NoIdentity, "no two-sided identity in table of " + d.name);
  d.identity = e;
  d.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (d.mul(a, b) == e && d.mul(b, a) == e) {
        d.inverse[a] = b;
        break;
      }
    if (d.inverse[a] < 0) fail(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d.mul(d.mul(a, b), c) != d.mul(a, d.mul(b, c)))
          fail(ErrorKind::NonAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                              std::to_string(c) + " differs");
  d.build_lattice();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table) {
  auto d = std::make_shared<detail::GroupData>();
  d->name = std::move(name);
  d->n = static_cast<int>(table.size());
  if (d->n == 0) fail(ErrorKind::MalformedSpec, "empty table");
  if (d->n > kMaxGroupOrder) fail(ErrorKind::GroupTooLarge, "order " + std::to_string(d->n) + " exceeds 64");
  d->table.reserve(static_cast<std::size_t>(d->n) * d->n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != d->n) fail(ErrorKind::MalformedSpec, "table is not square");
    for (int v : row) {
      if (v < 0 || v >= d->n) fail(ErrorKind::MalformedSpec, "table entry out of range");
      d->table.push_back(v);
    }
  }
  validate_and_finish(*d);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_generators(std::string name, int degree,
                                         const std::vector<std::vector<int>>& generators) {
  if (degree <= 0) fail(ErrorKind::MalformedSpec, "degree must be positive");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) fail(ErrorKind::MalformedSpec, "generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[v]) fail(ErrorKind::MalformedSpec, "generator is not a permutation");
      hit[v] = true;
    }
  }
  std::vector<int> id(degree);
  for (int k = 0; k < degree; ++k) id[k] = k;
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [degree](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(degree);
    for (int k = 0; k < degree; ++k) r[k] = p[q[k]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      auto c = compose(elems[i], s);
      if (index.emplace(c, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(c));
        if (static_cast<int>(elems.size()) > kMaxGroupOrder)
          fail(ErrorKind::GroupTooLarge, "generated group exceeds order 64");
      }
    }
  }
  auto d = std::make_shared<detail::GroupData>();
  d->name = std::move(name);
  d->n = static_cast<int>(elems.size());
  d->table.resize(static_cast<std::size_t>(d->n) * d->n);
  for (int a = 0; a < d->n; ++a)
    for (int b = 0; b < d->n; ++b) d->table[a * d->n + b] = index.at(compose(elems[a], elems[b]));
  for (const auto& s : generators) d->generators.push_back(index.at(s));
  d->permutations = elems;
  validate_and_finish(*d);
  return FiniteGroup(std::move(d));
}

const std::string& FiniteGroup::name() const { return d_->name; }
int FiniteGroup::order() const { return d_->n; }
Elem FiniteGroup::identity() const { return d_->identity; }
Elem FiniteGroup::mul(Elem a, Elem b) const { return d_->mul(a, b); }
Elem FiniteGroup::inverse(Elem a) const { return d_->inverse[a]; }
Elem FiniteGroup::conjugate(Elem g, Elem h) const { return d_->mul(d_->mul(g, h), d_->inverse[g]); }
const std::vector<Elem>& FiniteGroup::generators() const { return d_->generators; }
const std::vector<std::vector<int>>& FiniteGroup::permutations() const { return d_->permutations; }
const std::vector<Subgroup>& FiniteGroup::subgroup_list() const { return d_->subgroups; }
int FiniteGroup::subgroup_count() const { return static_cast<int>(d_->subgroups.size()); }
const Subgroup& FiniteGroup::subgroup(int id) const { return d_->subgroups.at(id); }

int FiniteGroup::subgroup_id(ElemMask mask) const {
  auto it = d_->mask_to_id.find(mask);
  return it == d_->mask_to_id.end() ? -1 : it->second;
}

bool FiniteGroup::is_subgroup_of(int h, int k) const {
  return (d_->subgroups[h].mask & ~d_->subgroups[k].mask) == 0;
}

int FiniteGroup::intersect(int h, int k) const {
  return d_->mask_to_id.at(d_->subgroups[h].mask & d_->subgroups[k].mask);
}

int FiniteGroup::conjugate_subgroup(int h, Elem g) const { return d_->conj[h * d_->n + g]; }
int FiniteGroup::class_of(int h) const { return d_->class_of[h]; }
const std::vector<std::vector<int>>& FiniteGroup::conjugacy_classes() const { return d_->classes; }
ElemMask FiniteGroup::conjugate_mask(ElemMask mask, Elem g) const { return d_->conjugate_mask(mask, g); }
ElemMask FiniteGroup::closure(ElemMask seeds) const { return d_->closure(seeds); }

bool FiniteGroup::operator==(const FiniteGroup& o) const {
  if (d_ == o.d_) return true;
  return d_->n == o.d_->n && d_->identity == o.d_->identity && d_->table == o.d_->table;
}

SubgroupLattice subgroups(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order)
    fail(ErrorKind::GroupTooLarge, "order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(max_order));
  return SubgroupLattice{g.subgroup_list(), g.conjugacy_classes()};
}

bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  int ia = g.subgroup_id(a.mask);
  int ib = g.subgroup_id(b.mask);
  if (ia < 0 || ib < 0) fail(ErrorKind::NotASubgroup, "are_conjugate expects subgroups");
  return g.class_of(ia) == g.class_of(ib);
}

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// Quaternion units 1,-1,i,-i,j,-j,k,-k as (unit, sign) pairs.
std::vector<std::vector<int>> quaternion_table() {
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * unit_sign[ua][ub];
      t[a][b] = unit_mul[ua][ub] * 2 + (sign < 0 ? 1 : 0);
    }
  return t;
}

int parse_cyclic(std::string_view name) {
  if (name.size() < 2 || name[0] != 'C') return -1;
  int n = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return -1;
    n = n * 10 + (c - '0');
    if (n > kMaxGroupOrder) return -1;
  }
  return n >= 1 ? n : -1;
}

}  // namespace

bool is_builtin_group(std::string_view name) {
  return parse_cyclic(name) > 0 || name == "S3" || name == "D4" || name == "Q8";
}

FiniteGroup builtin_group(std::string_view name) {
  if (int n = parse_cyclic(name); n > 0) return FiniteGroup::from_table(std::string(name), cyclic_table(n));
  if (name == "S3") return FiniteGroup::from_generators("S3", 3, {{1, 0, 2}, {1, 2, 0}});
  if (name == "D4") return FiniteGroup::from_generators("D4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  if (name == "Q8") return FiniteGroup::from_table("Q8", quaternion_table());
  fail(ErrorKind::MalformedSpec, "unknown built-in group " + std::string(name));
}

std::vector<std::string> builtin_group_names() {
  return {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "S3", "D4", "Q8"};
}

std::string subgroup_label(const FiniteGroup& g, int id) {
  if (id == 0) return "e";
  if (id == g.subgroup_count() - 1) return g.name();
  std::string s = "{";
  const auto& el = g.subgroup(id).elements;
  for (std::size_t k = 0; k < el.size(); ++k) s += (k ? "," : "") + std::to_string(el[k]);
  return s + "}";
}

}  // namespace tambara
