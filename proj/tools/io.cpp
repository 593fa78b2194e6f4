#include "io.hpp"

#include <fstream>
#include <sstream>

#include "tambara/error.hpp"

namespace tambara::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::MalformedSpec, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// Closes the given element permutations under composition.
std::vector<int> close_action(const FiniteGroup& g, int size, const Json& action) {
  std::vector<std::vector<int>> perm(g.order());
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> known;
  auto set = [&](Elem e, std::vector<int> p) {
    if (seen[e]) {
      if (perm[e] != p) fail(ErrorKind::NotAnAction, "element " + std::to_string(e) + " acts in two ways");
      return false;
    }
    perm[e] = std::move(p);
    seen[e] = 1;
    known.push_back(e);
    return true;
  };
  std::vector<int> id(size);
  for (int p = 0; p < size; ++p) id[p] = p;
  set(g.identity(), id);
  for (const auto& [key, value] : action.items()) {
    int e = -1;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) e = -1;
    } catch (const std::exception&) {
    }
    if (e < 0 || e >= g.order()) fail(ErrorKind::MalformedSpec, "action key \"" + key + "\" is not an element");
    auto p = value.get<std::vector<int>>();
    if (static_cast<int>(p.size()) != size) fail(ErrorKind::MalformedSpec, "permutation of the wrong length");
    for (int v : p)
      if (v < 0 || v >= size) fail(ErrorKind::MalformedSpec, "permutation value out of range");
    set(e, std::move(p));
  }
  for (std::size_t k = 0; k < known.size(); ++k)
    for (std::size_t l = 0; l <= k; ++l)
      for (auto [a, b] : {std::pair{known[k], known[l]}, std::pair{known[l], known[k]}}) {
        std::vector<int> p(size);
        for (int x = 0; x < size; ++x) p[x] = perm[a][perm[b][x]];
        set(g.mul(a, b), std::move(p));
      }
  if (static_cast<int>(known.size()) != g.order())
    fail(ErrorKind::MalformedSpec, "action does not determine every element");
  std::vector<int> act(static_cast<std::size_t>(g.order()) * size);
  for (int e = 0; e < g.order(); ++e)
    for (int p = 0; p < size; ++p) act[static_cast<std::size_t>(e) * size + p] = perm[e][p];
  return act;
}

Json values(const EquivariantMap& f) { return Json(f.values()); }

}  // namespace

Json Loader::read(const std::filesystem::path& p) const {
  std::ifstream in(p);
  if (!in) fail(ErrorKind::MalformedSpec, "cannot open " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::MalformedSpec, p.string() + ": " + e.what());
  }
}

std::pair<Json, std::filesystem::path> Loader::resolve(const Json& ref) const {
  if (ref.is_object()) return {ref, base_};
  if (!ref.is_string()) fail(ErrorKind::MalformedSpec, "expected an object or a path");
  std::filesystem::path p = ref.get<std::string>();
  if (p.is_relative()) p = base_ / p;
  return {read(p), p.parent_path()};
}

FiniteGroup Loader::group(const Json& ref) {
  std::string name;
  if (ref.is_string()) name = ref.get<std::string>();
  if (ref.is_object() && ref.size() == 1 && ref.contains("name")) name = ref.at("name").get<std::string>();
  if (!name.empty() && is_builtin_group(name)) {
    auto it = builtins_.find(name);
    if (it == builtins_.end()) it = builtins_.emplace(name, builtin_group(name)).first;
    return it->second;
  }
  auto [j, dir] = resolve(ref);
  std::string label = j.value("name", std::string("G"));
  if (j.contains("table")) return FiniteGroup::from_table(label, field(j, "table").get<std::vector<std::vector<int>>>());
  if (j.contains("generators"))
    return FiniteGroup::from_generators(label, field(j, "degree").get<int>(),
                                        field(j, "generators").get<std::vector<std::vector<int>>>());
  if (is_builtin_group(label)) return group(Json(label));
  fail(ErrorKind::MalformedSpec, "group needs a table or generators");
}

GSet Loader::gset(const Json& ref) {
  auto [j, dir] = resolve(ref);
  Loader sub(dir);
  sub.builtins_ = builtins_;
  FiniteGroup g = sub.group(field(j, "group"));
  builtins_ = sub.builtins_;
  int size = field(j, "size").get<int>();
  if (size < 0) fail(ErrorKind::MalformedSpec, "negative size");
  const Json& action = j.contains("action") ? j.at("action") : Json::object();
  return GSet::from_action(g, size, close_action(g, size, action));
}

EquivariantMap Loader::map(const Json& ref) {
  auto [j, dir] = resolve(ref);
  Loader sub(dir);
  sub.builtins_ = builtins_;
  GSet source = sub.gset(field(j, "source"));
  GSet target = sub.gset(j.contains("anchor") ? j.at("anchor") : field(j, "target"));
  builtins_ = sub.builtins_;
  if (source.group() != target.group()) fail(ErrorKind::GroupMismatch, "source and target over different groups");
  auto v = field(j, "values").get<std::vector<int>>();
  if (static_cast<int>(v.size()) != source.size()) fail(ErrorKind::MalformedSpec, "values has the wrong length");
  for (int x : v)
    if (x < 0 || x >= target.size()) fail(ErrorKind::MalformedSpec, "value outside the target");
  return EquivariantMap::make(source, target, std::move(v));
}

SliceObject Loader::slice_object(const Json& ref) { return SliceObject(map(ref)); }

SpanClass Loader::span(const Json& ref) {
  auto [j, dir] = resolve(ref);
  Loader sub(dir);
  sub.builtins_ = builtins_;
  EquivariantMap l = sub.map(field(j, "left"));
  EquivariantMap r = sub.map(field(j, "right"));
  builtins_ = sub.builtins_;
  return SpanClass(Span::make(l, r));
}

BispanClass Loader::bispan(const Json& ref) {
  auto [j, dir] = resolve(ref);
  Loader sub(dir);
  sub.builtins_ = builtins_;
  EquivariantMap r = sub.map(field(j, "r"));
  EquivariantMap n = sub.map(field(j, "n"));
  EquivariantMap t = sub.map(field(j, "t"));
  builtins_ = sub.builtins_;
  return BispanClass(Bispan::make(r, n, t));
}

TransferRelation Loader::relation(const Json& ref) {
  auto [j, dir] = resolve(ref);
  Loader sub(dir);
  sub.builtins_ = builtins_;
  FiniteGroup g = sub.group(field(j, "group"));
  builtins_ = sub.builtins_;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : field(j, "admissible")) {
    auto hk = p.get<std::vector<int>>();
    if (hk.size() != 2) fail(ErrorKind::MalformedSpec, "admissible entries are [H, K] pairs");
    for (int id : hk)
      if (id < 0 || id >= g.subgroup_count()) fail(ErrorKind::NotASubgroup, "subgroup id " + std::to_string(id));
    pairs.emplace_back(hk[0], hk[1]);
  }
  return TransferRelation(g, pairs);
}

MackeyValue Loader::mackey_value(const Json& ref) {
  auto [j, dir] = resolve(ref);
  Loader sub(dir);
  sub.builtins_ = builtins_;
  GSet level = sub.gset(field(j, "level"));
  GSet source = j.contains("source") ? sub.gset(j.at("source")) : terminal(level.group());
  MackeyValue v = MackeyValue::zero(source, level);
  for (const auto& t : field(j, "terms")) {
    SpanClass s = sub.span(t);
    if (s.source() != source || s.target() != level) fail(ErrorKind::LevelMismatch, "term " + describe(s));
    v = mackey_add(v, MackeyValue::of(s));
  }
  builtins_ = sub.builtins_;
  return v;
}

TambaraValue Loader::tambara_value(const Json& ref) {
  auto [j, dir] = resolve(ref);
  Loader sub(dir);
  sub.builtins_ = builtins_;
  GSet level = sub.gset(field(j, "level"));
  BispanClass b = sub.bispan(field(j, "bispan"));
  builtins_ = sub.builtins_;
  if (b.target() != level) fail(ErrorKind::LevelMismatch, "bispan does not end at the level");
  return TambaraValue(b);
}

Json to_json(const FiniteGroup& g) {
  if (is_builtin_group(g.name()) && builtin_group(g.name()) == g) return g.name();
  std::vector<std::vector<int>> table(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) table[a][b] = g.mul(a, b);
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = table;
  return j;
}

Json to_json(const GSet& x) {
  const FiniteGroup& g = x.group();
  std::vector<Elem> elems = g.generators();
  if (elems.empty())
    for (int e = 0; e < g.order(); ++e) elems.push_back(e);
  Json action = Json::object();
  for (Elem e : elems) {
    std::vector<int> p(x.size());
    for (int q = 0; q < x.size(); ++q) p[q] = x.act(e, q);
    action[std::to_string(e)] = p;
  }
  Json j;
  j["group"] = to_json(g);
  j["size"] = x.size();
  j["action"] = action;
  return j;
}

Json to_json(const EquivariantMap& f) {
  Json j;
  j["source"] = to_json(f.source());
  j["target"] = to_json(f.target());
  j["values"] = values(f);
  return j;
}

Json to_json(const SliceObject& a) {
  Json j;
  j["source"] = to_json(a.domain());
  j["anchor"] = to_json(a.anchor());
  j["values"] = values(a.structure());
  return j;
}

Json to_json(const SpanClass& s) {
  Json j;
  j["left"] = to_json(s.representative().left());
  j["right"] = to_json(s.representative().right());
  return j;
}

Json to_json(const BispanClass& b) {
  Json j;
  j["r"] = to_json(b.representative().r());
  j["n"] = to_json(b.representative().n());
  j["t"] = to_json(b.representative().t());
  return j;
}

Json to_json(const TransferRelation& o) {
  Json adm = Json::array();
  for (auto [h, k] : o.pairs()) adm.push_back({h, k});
  Json j;
  j["group"] = to_json(o.group());
  j["admissible"] = adm;
  return j;
}

Json to_json(const MackeyValue& v) {
  Json terms = Json::array();
  for (const auto& t : v.terms()) terms.push_back(to_json(t));
  Json j;
  j["level"] = to_json(v.level());
  j["source"] = to_json(v.source());
  j["terms"] = terms;
  return j;
}

Json to_json(const TambaraValue& v) {
  Json j;
  j["level"] = to_json(v.level());
  j["bispan"] = to_json(v.element());
  return j;
}

}  // namespace tambara::io
