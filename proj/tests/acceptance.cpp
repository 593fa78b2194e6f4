// One line per acceptance criterion; exits non-zero when any fails.

#include <chrono>
#include <iostream>
#include <map>

#include "oracle.hpp"
#include "tambara/functors.hpp"
#include "tambara/verify.hpp"

using namespace tambara;

namespace {

struct Timed {
  SuiteReport report;
  double seconds = 0;
};

constexpr std::uint64_t kSeed = 42;

std::map<std::string, Timed>& reports() {
  static std::map<std::string, Timed> r;
  return r;
}

const Timed& suite(const std::string& name) {
  auto it = reports().find(name);
  if (it != reports().end()) return it->second;
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport r = run_suite(name, kSeed);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return reports().emplace(name, Timed{std::move(r), s}).first->second;
}

const CheckSummary* check(const std::string& s, const std::string& c) {
  for (const auto& x : suite(s).report.checks)
    if (x.name == c) return &x;
  return nullptr;
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
  // The check passed, and even if every skip fell on one of its groups, each
  // group still ran min_run cases.
  void check_ok(const std::string& s, const std::string& c, int min_run = 1, int groups = 1) {
    const CheckSummary* x = check(s, c);
    if (!x) return require(false, s + "/" + c + " missing");
    require(x->pass, s + "/" + c + " failed " + std::to_string(x->failed) + " cases");
    require(x->cases / groups - x->skipped >= min_run,
            s + "/" + c + " ran " + std::to_string(x->cases - x->skipped) + " cases");
  }
  void suite_ok(const std::string& s) {
    const SuiteReport& r = suite(s).report;
    require(r.pass(), s + " has " + std::to_string(r.failures.size()) + " failures");
  }
};

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

Verdict category_laws() {
  Verdict v;
  for (const char* c : {"span-associativity", "span-identity"}) v.check_ok("lindner-laws", c, 200, 4);
  for (const char* c : {"bispan-associativity", "bispan-identity"}) v.check_ok("polynomial-laws", c, 200, 4);
  double t = suite("lindner-laws").seconds + suite("polynomial-laws").seconds;
  v.require(t <= 60, "runtime " + seconds(t));
  v.detail = v.pass ? "span and bispan laws, 200+ cases per group, " + seconds(t) : v.detail;
  return v;
}

Verdict rewrite_coherence() {
  Verdict v;
  v.check_ok("polynomial-laws", "bispan-associativity", 200);
  v.check_ok("polynomial-laws", "normal-form-recomposes", 1);
  if (v.pass) {
    const CheckSummary* x = check("polynomial-laws", "bispan-associativity");
    v.detail = std::to_string(x->cases - x->skipped) + " triples agree, " + std::to_string(x->skipped) +
               " over the point cap";
  }
  return v;
}

Verdict lccdc() {
  Verdict v;
  v.suite_ok("lccdc-axioms");
  for (const auto& c : suite("lccdc-axioms").report.checks) v.require(c.skipped == 0, c.name + " skipped cases");
  if (v.pass) v.detail = std::to_string(suite("lccdc-axioms").report.cases) + " window instances";
  return v;
}

Verdict adjunctions() {
  Verdict v;
  v.check_ok("adjunction-cartesian", "triangle-identities");
  v.check_ok("adjunction-cartesian", "induction-hom-bijection", 100);
  v.check_ok("adjunction-cartesian", "coinduction-hom-bijection", 100);
  if (v.pass) v.detail = "triangles and both hom-set bijections on 100+ pairs";
  return v;
}

Verdict appendix() {
  Verdict v;
  v.check_ok("adjunction-cartesian", "unit-counit-squares-cartesian");
  v.check_ok("adjunction-cartesian", "adjunct-square-cartesian");
  v.check_ok("adjunction-cartesian", "sum-preserves-reflects-pullbacks");
  v.suite_ok("hoyer-appendix");
  v.check_ok("hoyer-appendix", "norm-restriction-exchange");
  v.check_ok("hoyer-appendix", "action-is-additive");
  if (v.pass) v.detail = "cartesian squares, objectwise iso and additive action";
  return v;
}

Verdict burnside_facts() {
  Verdict v;
  using Profile = std::multiset<std::pair<int, int>>;
  FiniteGroup c2 = builtin_group("C2");
  GSet free = make_orbit(c2, 0), pt = terminal(c2);
  EquivariantMap i = terminal_map(free);

  // [C2/e]^2 by scanning orbits of the raw product.
  oracle::Raw f = oracle::raw(free), sq{2, 4, {}};
  sq.act.assign(2, std::vector<int>(4));
  for (int g = 0; g < 2; ++g)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) sq.act[g][a * 2 + b] = f.act[g][a] * 2 + f.act[g][b];
  Profile square = oracle::orbit_profile(sq);
  MackeyValue one_free = burnside_value(terminal_map(free));
  Profile lib_square = oracle::orbit_profile(oracle::raw(burnside_object(burnside_mul(one_free, one_free)).domain()));
  v.require(square == Profile{{2, 1}, {2, 1}}, "oracle square is not 2[C2/e]");
  v.require(lib_square == square, "library square differs from the orbit scan");

  // N(2) along C2/e -> pt, by listing sections.
  EquivariantMap fold = codiagonal(free);
  Profile norm2 = oracle::orbit_profile(oracle::sections(i, fold));
  MackeyValue n2 = burnside_norm(i, burnside_value(fold));
  Profile lib_norm2 = oracle::orbit_profile(oracle::raw(burnside_object(n2).domain()));
  v.require(norm2 == Profile{{1, 2}, {1, 2}, {2, 1}}, "oracle N(2) is not 2[pt] + [C2/e]");
  v.require(lib_norm2 == norm2, "library N(2) differs from the section count");

  // Pi of the fold, as an object over pt.
  DependentProduct p = pi(i, SliceObject(fold));
  Profile lib_pi = oracle::orbit_profile(oracle::raw(p.object().domain()));
  v.require(lib_pi == norm2, "Pi of the fold is not pt + pt + C2/e");
  v.require(p.object().anchor() == pt, "Pi of the fold not over pt");

  v.check_ok("mackey-factorization", "burnside-desk-values");
  if (v.pass) v.detail = "[C2/e]^2 = 2[C2/e], N(2) = 2[pt] + [C2/e], Pi(fold) = pt + pt + C2/e";
  return v;
}

Verdict separability() {
  Verdict v;
  v.check_ok("separability-mazur", "indices-separable");
  v.check_ok("separability-mazur", "norm-summand-window");
  v.check_ok("separability-mazur", "norm-summand-sampled", 100);
  v.check_ok("separability-mazur", "mazur-formula");
  if (v.pass) v.detail = std::to_string(builtin_group_names().size()) + " built-in groups separable; summands exact";
  return v;
}

Verdict main_theorem() {
  Verdict v;
  v.suite_ok("main-theorem");
  for (const char* c : {"key-lemma", "t-naturality", "omega-round-trip", "omega-natural-in-source", "comma-relation",
                        "lambda-bijective"})
    v.check_ok("main-theorem", c);
  double t = suite("main-theorem").seconds;
  v.require(t <= 600, "runtime " + seconds(t));
  if (v.pass) v.detail = "five orbit maps, " + seconds(t);
  return v;
}

Verdict mackey_preservation() {
  Verdict v;
  v.check_ok("mackey-preservation", "zero-preserved");
  v.check_ok("mackey-preservation", "invertibles-preserved");
  v.check_ok("mackey-preservation", "empty-source-value");
  const CheckSummary* c = check("mackey-preservation", "empty-source-is-mackey");
  v.require(c && c->negative && c->pass, "negative control not observed");
  if (c) {
    v.require(c->observed.find("{0[C2/e], 1[C2/e], 2[C2/e], 3[C2/e]}") != std::string::npos,
              "witness does not list the N value: " + c->observed);
    v.require(c->observed.find("has no inverse") != std::string::npos, "witness shows no missing inverse");
  }
  if (v.pass) v.detail = "empty -> C2/e gives N = {k[C2/e]} without inverses";
  return v;
}

Verdict determinism() {
  Verdict v;
  for (const auto& name : suite_names()) {
    std::string first = report_json(suite(name).report);
    std::string again = report_json(run_suite(name, kSeed, {}, 3));
    v.require(first == again, name + " report changed on rerun");
  }
  if (v.pass) v.detail = std::to_string(suite_names().size()) + " suites byte-identical across reruns";
  return v;
}

}  // namespace

int main() {
  using Criterion = Verdict (*)();
  const Criterion criteria[] = {category_laws, rewrite_coherence, lccdc,          adjunctions,         appendix,
                                burnside_facts, separability,     main_theorem,   mackey_preservation, determinism};
  int failed = 0;
  for (int k = 0; k < 10; ++k) {
    Verdict v;
    try {
      v = criteria[k]();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = e.what();
    }
    failed += !v.pass;
    std::cout << "criterion " << (k + 1) << ": " << (v.pass ? "PASS" : "FAIL") << " - " << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
