#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "tambara/error.hpp"
#include "tambara/indexing.hpp"
#include "tambara/sample.hpp"
#include "tambara/verify.hpp"

namespace {

using namespace tambara;
using io::Json;

struct Global {
  std::uint64_t seed = 42;
  std::string max_size;
  std::string format = "text";
  bool quiet = false;
  Caps caps;
};

struct Output {
  Json json = Json::object();
  std::string text;
  std::string summary;  // printed instead of text under --quiet
  int code = 0;
};

int exit_code(ErrorKind k) {
  return k == ErrorKind::SizeCapExceeded || k == ErrorKind::GroupTooLarge ? 1 : 2;
}

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::string signatures(const GSet& x, const std::vector<EquivariantMap>& legs) {
  std::string s;
  for (const auto& sig : orbit_signatures(x, legs)) s += (s.empty() ? "" : " ") + list(sig);
  return s.empty() ? "(none)" : s;
}

std::string span_text(const SpanClass& c) {
  const Span& s = c.representative();
  std::ostringstream o;
  o << "span " << describe(c.source()) << " -> " << describe(c.target()) << "\n"
    << "  apex   " << describe(s.apex()) << "\n"
    << "  left   " << list(s.left().values()) << "\n"
    << "  right  " << list(s.right().values()) << "\n"
    << "  orbits " << signatures(s.apex(), {s.left(), s.right()}) << "\n";
  return o.str();
}

std::string bispan_text(const BispanClass& c) {
  NormalForm nf = normal_form(c);
  std::ostringstream o;
  o << "bispan " << describe(c.source()) << " -> " << describe(c.target()) << "\n"
    << "  R  " << describe(nf.r.source()) << " -> " << describe(nf.r.target()) << "  " << list(nf.r.values()) << "\n"
    << "  N  " << describe(nf.n.source()) << " -> " << describe(nf.n.target()) << "  " << list(nf.n.values()) << "\n"
    << "  T  " << describe(nf.t.source()) << " -> " << describe(nf.t.target()) << "  " << list(nf.t.values()) << "\n"
    << "  top orbits    " << signatures(nf.r.source(), {nf.r, nf.n}) << "\n"
    << "  middle orbits " << signatures(nf.t.source(), {nf.t}) << "\n";
  return o.str();
}

std::string map_text(const std::string& title, const EquivariantMap& f) {
  return title + " " + describe(f.source()) + " -> " + describe(f.target()) + "  " + list(f.values()) + "\n";
}

io::Loader loader() { return io::Loader(std::filesystem::current_path()); }

Output cmd_compose(const std::string& kind, const std::vector<std::string>& files, const Global& gl) {
  io::Loader ld = loader();
  Output out;
  out.json["kind"] = kind;
  if (kind == "span") {
    SpanClass acc = ld.span(Json(files.front()));
    for (std::size_t k = 1; k < files.size(); ++k) {
      SpanClass next = ld.span(Json(files[k]));
      if (next.source() != acc.target()) fail(ErrorKind::EndpointMismatch, files[k] + " does not start where the composite ends");
      acc = span_compose(next, acc);
    }
    out.json["result"] = io::to_json(acc);
    out.json["key"] = acc.key();
    out.text = span_text(acc);
  } else {
    BispanClass acc = ld.bispan(Json(files.front()));
    for (std::size_t k = 1; k < files.size(); ++k) {
      BispanClass next = ld.bispan(Json(files[k]));
      if (next.source() != acc.target()) fail(ErrorKind::EndpointMismatch, files[k] + " does not start where the composite ends");
      acc = bispan_compose(next, acc, gl.caps);
    }
    out.json["result"] = io::to_json(acc);
    out.json["key"] = acc.key();
    out.text = bispan_text(acc);
  }
  return out;
}

Output cmd_normalize(const std::string& kind, const std::string& file) {
  io::Loader ld = loader();
  Output out;
  out.json["kind"] = kind;
  if (kind == "span") {
    SpanClass s = ld.span(Json(file));
    TRDecomposition d = tr_decompose(s);
    out.json["result"] = io::to_json(s);
    out.json["key"] = s.key();
    out.json["R"] = io::to_json(d.r);
    out.json["T"] = io::to_json(d.t);
    out.text = span_text(s) + map_text("  R", d.r) + map_text("  T", d.t);
  } else {
    BispanClass b = ld.bispan(Json(file));
    out.json["result"] = io::to_json(b);
    out.json["key"] = b.key();
    out.text = bispan_text(b);
  }
  return out;
}

Output cmd_pi(const std::string& map_file, const std::string& object_file, const Global& gl) {
  io::Loader ld = loader();
  EquivariantMap i = ld.map(Json(map_file));
  SliceObject alpha = ld.slice_object(Json(object_file));
  if (alpha.anchor() != i.source()) fail(ErrorKind::AnchorMismatch, "object is not over the source of the map");
  DependentProduct p = pi(i, alpha, gl.caps);
  Output out;
  out.json["result"] = io::to_json(p.object());
  out.text = "pi " + describe(p.object().domain()) + " over " + describe(p.object().anchor()) + "\n" +
             map_text("  structure", p.object().structure()) +
             "  orbits " + signatures(p.object().domain(), {p.object().structure()}) + "\n";
  return out;
}

Output cmd_pullback(const std::string& f_file, const std::string& g_file) {
  io::Loader ld = loader();
  EquivariantMap f = ld.map(Json(f_file)), g = ld.map(Json(g_file));
  if (f.target() != g.target()) fail(ErrorKind::EndpointMismatch, "maps do not share a target");
  Pullback pb = pullback(f, g);
  Output out;
  out.json["object"] = io::to_json(pb.object);
  out.json["proj1"] = io::to_json(pb.proj1);
  out.json["proj2"] = io::to_json(pb.proj2);
  out.text = "pullback " + describe(pb.object) + "\n" + map_text("  proj1", pb.proj1) + map_text("  proj2", pb.proj2);
  return out;
}

Output cmd_distributor(const std::string& f_file, const std::string& g_file, const Global& gl) {
  io::Loader ld = loader();
  EquivariantMap f = ld.map(Json(f_file)), g = ld.map(Json(g_file));
  if (f.target() != g.source()) fail(ErrorKind::NotComposable, "f does not end where g starts");
  Distributor d = distributor(f, g, gl.caps);
  BispanClass b(Bispan::make(d.eps, d.pulled, d.pi_g_f.object().structure()));
  Output out;
  out.json["result"] = io::to_json(b);
  out.json["key"] = b.key();
  out.text = "N_g T_f rewritten as T N R\n" + map_text("  T", d.pi_g_f.object().structure()) +
             map_text("  N", d.pulled) + map_text("  R", d.eps) + bispan_text(b);
  return out;
}

struct Basis {
  GSet level;
  std::vector<EquivariantMap> objects;  // transitive objects over the level
  std::vector<std::string> names;
};

Basis basis_at(const GSet& level) {
  const FiniteGroup& g = level.group();
  Basis b{level, {}, {}};
  for (const auto& o : objects_over(level, g.order())) {
    if (o.source().orbit_count() != 1) continue;
    b.objects.push_back(o);
    std::string name = "[" + g.name() + "/" + subgroup_label(g, o.source().stabilizer(0));
    if (level.size() > 1) name += " -> " + std::to_string(o(0));
    b.names.push_back(name + "]");
  }
  return b;
}

std::vector<long long> coefficients(const Basis& b, const MackeyValue& v) {
  std::vector<long long> c(b.objects.size(), 0);
  for (const auto& t : v.terms()) {
    bool found = false;
    for (std::size_t k = 0; k < b.objects.size() && !found; ++k)
      if (burnside_value(b.objects[k]).terms().front() == t) {
        ++c[k];
        found = true;
      }
    if (!found) fail(ErrorKind::LevelMismatch, "term outside the orbit basis");
  }
  return c;
}

std::string combination(const Basis& b, const std::vector<long long>& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    s += (s.empty() ? "" : " + ") + (c[k] == 1 ? "" : std::to_string(c[k])) + b.names[k];
  }
  return s.empty() ? "0" : s;
}

Json basis_json(const Basis& b) {
  Json j = Json::array();
  for (const auto& n : b.names) j.push_back(n);
  return j;
}

EquivariantMap orbit_into(const GSet& from, const GSet& to) {
  std::optional<EquivariantMap> found;
  for_each_map(from, to, [&](const EquivariantMap& f) {
    found = f;
    return false;
  });
  if (!found) fail(ErrorKind::NotEquivariant, "no map " + describe(from) + " -> " + describe(to));
  return *found;
}

EquivariantMap copies(const GSet& x, int n) {
  std::vector<int> ids(n, x.stabilizer(0));
  GSet sum = orbit_sum(x.group(), ids);
  return extend_from_reps(sum, x, std::vector<int>(n, 0));
}

Output cmd_burnside(const std::string& group_ref, const std::string& op, int level_id, int from_id, int max_n,
                    const Global& gl) {
  io::Loader ld = loader();
  FiniteGroup g = ld.group(Json(group_ref));
  if (g.order() > gl.caps.max_group) subgroups(g, gl.caps.max_group);
  if (level_id < 0) level_id = g.whole_group();
  if (level_id >= g.subgroup_count()) fail(ErrorKind::NotASubgroup, "subgroup id " + std::to_string(level_id));
  GSet level = make_orbit(g, level_id);
  Basis b = basis_at(level);
  Output out;
  out.json["group"] = g.name();
  out.json["level"] = g.name() + "/" + subgroup_label(g, level_id);
  out.json["op"] = op;
  out.json["basis"] = basis_json(b);
  std::ostringstream text;
  text << "Burnside " << op << " for " << g.name() << " at " << g.name() << "/" << subgroup_label(g, level_id) << "\n";
  if (op == "table") {
    Json rows = Json::array();
    for (std::size_t x = 0; x < b.objects.size(); ++x)
      for (std::size_t y = x; y < b.objects.size(); ++y) {
        auto c = coefficients(b, burnside_mul(burnside_value(b.objects[x]), burnside_value(b.objects[y])));
        rows.push_back({{"left", b.names[x]}, {"right", b.names[y]}, {"product", c}});
        text << "  " << b.names[x] << " * " << b.names[y] << " = " << combination(b, c) << "\n";
      }
    out.json["table"] = rows;
  } else {
    if (from_id < 0) from_id = g.trivial_subgroup();
    if (from_id >= g.subgroup_count()) fail(ErrorKind::NotASubgroup, "subgroup id " + std::to_string(from_id));
    GSet source = make_orbit(g, from_id);
    EquivariantMap i = orbit_into(source, level);
    out.json["from"] = g.name() + "/" + subgroup_label(g, from_id);
    Json rows = Json::array();
    if (op == "norm") {
      for (int n = 0; n <= max_n; ++n) {
        MackeyValue v = n == 0 ? mackey_zero(terminal(g), source) : burnside_value(copies(source, n));
        auto c = coefficients(b, burnside_norm(i, v, gl.caps));
        rows.push_back({{"n", n}, {"norm", c}});
        text << "  N(" << n << ") = " << combination(b, c) << "\n";
      }
      out.json["norm"] = rows;
    } else if (op == "transfer") {
      Basis from = basis_at(source);
      for (std::size_t k = 0; k < from.objects.size(); ++k) {
        auto c = coefficients(b, burnside_value(compose(i, from.objects[k])));
        rows.push_back({{"element", from.names[k]}, {"transfer", c}});
        text << "  T(" << from.names[k] << ") = " << combination(b, c) << "\n";
      }
      out.json["transfer"] = rows;
    } else {
      fail(ErrorKind::MalformedSpec, "unknown op " + op);
    }
  }
  out.text = text.str();
  return out;
}

Output cmd_enumerate(const std::string& what, const std::string& group_ref, const Global& gl) {
  io::Loader ld = loader();
  FiniteGroup g = ld.group(Json(group_ref));
  Output out;
  out.json["group"] = g.name();
  out.json["what"] = what;
  std::ostringstream text;
  Json items = Json::array();
  if (what == "subgroups") {
    SubgroupLattice lat = subgroups(g, gl.caps.max_group);
    for (int id = 0; id < static_cast<int>(lat.subgroups.size()); ++id) {
      items.push_back({{"id", id},
                       {"label", subgroup_label(g, id)},
                       {"order", lat.subgroups[id].order()},
                       {"class", g.class_of(id)},
                       {"elements", lat.subgroups[id].elements}});
      text << "  " << id << "  " << subgroup_label(g, id) << "  order " << lat.subgroups[id].order() << "  class "
           << g.class_of(id) << "\n";
    }
    out.json["classes"] = lat.classes.size();
    out.summary = std::to_string(lat.subgroups.size()) + " subgroups in " + std::to_string(lat.classes.size()) +
                  " conjugacy classes\n";
    text << out.summary;
  } else if (what == "transfer-systems") {
    if (g.order() > gl.caps.max_group) subgroups(g, gl.caps.max_group);
    auto rels = enumerate_transfer_relations(g, gl.caps.max_group);
    for (std::size_t k = 0; k < rels.size(); ++k) {
      Json pairs = Json::array();
      std::string line;
      for (auto [h, kk] : rels[k].pairs()) {
        pairs.push_back({h, kk});
        if (h != kk) line += (line.empty() ? "" : ", ") + subgroup_label(g, h) + " -> " + subgroup_label(g, kk);
      }
      items.push_back({{"admissible", pairs}});
      text << "  " << k << "  {" << line << "}\n";
    }
    out.summary = std::to_string(rels.size()) + " transfer systems\n";
    text << out.summary;
  } else {
    fail(ErrorKind::MalformedSpec, "unknown enumeration " + what);
  }
  out.json["count"] = items.size();
  out.json["items"] = items;
  out.text = text.str();
  return out;
}

Output cmd_verify(const std::string& suite, int threads, const Global& gl) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names.push_back(suite);
  Output out;
  Json reports = Json::array();
  bool pass = true;
  for (const auto& n : names) {
    SuiteReport r = run_suite(n, gl.seed, gl.caps, threads);
    pass = pass && r.pass();
    reports.push_back(Json::parse(report_json(r)));
    out.text += report_text(r);
    out.summary += n + (r.pass() ? " pass\n" : " FAIL\n");
  }
  out.json = names.size() == 1 ? reports.front() : Json{{"seed", gl.seed}, {"pass", pass}, {"suites", reports}};
  out.code = pass ? 0 : 1;
  return out;
}

void emit(const Output& out, const Global& gl, bool echo_seed) {
  if (gl.format == "json") {
    Json j = out.json;
    if (echo_seed && !j.contains("seed")) {
      Json with = Json::object();
      with["seed"] = gl.seed;
      for (auto& [k, v] : j.items()) with[k] = v;
      j = with;
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (echo_seed) std::cout << "seed " << gl.seed << "\n";
  if (!gl.quiet || out.summary.empty()) std::cout << out.text;
  else std::cout << out.summary;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite G-set spans, bispans, norms and law suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_option("--seed", gl.seed, "random seed")->capture_default_str();
  app.add_option("--max-size", gl.max_size, "caps record, e.g. fiber=16,points=4096,enum=6,group=24");
  app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--quiet", gl.quiet, "only summary lines");

  std::string kind = "bispan", suite, what, group_ref, op = "table", file_a, file_b;
  std::vector<std::string> files;
  int level_id = -1, from_id = -1, max_n = 3, threads = 0;

  auto* compose = app.add_subcommand("compose", "compose spans or bispans, first file applied first");
  compose->add_option("--kind", kind)->check(CLI::IsMember({"span", "bispan"}))->capture_default_str();
  compose->add_option("files", files)->required()->check(CLI::ExistingFile);

  auto* normalize = app.add_subcommand("normalize", "print the normal form of a span or bispan");
  normalize->add_option("--kind", kind)->check(CLI::IsMember({"span", "bispan"}))->capture_default_str();
  normalize->add_option("file", file_a)->required()->check(CLI::ExistingFile);

  auto* pi_cmd = app.add_subcommand("pi", "dependent product of an object over the source of a map");
  pi_cmd->add_option("map", file_a)->required()->check(CLI::ExistingFile);
  pi_cmd->add_option("object", file_b)->required()->check(CLI::ExistingFile);

  auto* pb = app.add_subcommand("pullback", "pullback of two maps with a common target");
  pb->add_option("f", file_a)->required()->check(CLI::ExistingFile);
  pb->add_option("g", file_b)->required()->check(CLI::ExistingFile);

  auto* dist = app.add_subcommand("distributor", "rewrite N_g T_f into T N R");
  dist->add_option("f", file_a)->required()->check(CLI::ExistingFile);
  dist->add_option("g", file_b)->required()->check(CLI::ExistingFile);

  auto* burn = app.add_subcommand("burnside", "Burnside tables over the orbit basis");
  burn->add_option("group", group_ref)->required();
  burn->add_option("--op", op)->check(CLI::IsMember({"table", "norm", "transfer"}))->capture_default_str();
  burn->add_option("--level", level_id, "subgroup id K of the level G/K (default G)");
  burn->add_option("--from", from_id, "subgroup id H of the source G/H for norm and transfer (default e)");
  burn->add_option("--max-n", max_n, "largest multiple normed")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "run a law suite, or all of them");
  ver->add_option("suite", suite)->required();
  ver->add_option("--threads", threads, "worker threads, 0 for hardware concurrency")->capture_default_str();

  auto* en = app.add_subcommand("enumerate", "list subgroups or transfer systems");
  en->add_option("what", what)->required()->check(CLI::IsMember({"subgroups", "transfer-systems"}));
  en->add_option("group", group_ref)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!gl.max_size.empty()) gl.caps = Caps::parse(gl.max_size);
    Output out;
    bool echo = true;
    if (*compose) {
      if (files.size() < 2) fail(ErrorKind::MalformedSpec, "compose needs at least two inputs");
      out = cmd_compose(kind, files, gl);
    } else if (*normalize) {
      out = cmd_normalize(kind, file_a);
    } else if (*pi_cmd) {
      out = cmd_pi(file_a, file_b, gl);
    } else if (*pb) {
      out = cmd_pullback(file_a, file_b);
    } else if (*dist) {
      out = cmd_distributor(file_a, file_b, gl);
    } else if (*burn) {
      out = cmd_burnside(group_ref, op, level_id, from_id, max_n, gl);
    } else if (*ver) {
      out = cmd_verify(suite, threads, gl);
      echo = gl.format == "text";
    } else if (*en) {
      out = cmd_enumerate(what, group_ref, gl);
    }
    emit(out, gl, echo);
    return out.code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    std::cerr << "MalformedSpec: " << e.what() << "\n";
    return 2;
  }
}
