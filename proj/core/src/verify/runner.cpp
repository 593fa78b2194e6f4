#include <algorithm>
#include <atomic>
#include <thread>

#include "json.hpp"
#include "tambara/error.hpp"
#include "tambara/sample.hpp"
#include "tambara/verify.hpp"
#include "suites.hpp"

namespace tambara {

namespace {

enum class Status { Ok, Failed, Skipped };

struct Outcome {
  Status status = Status::Ok;
  std::string witness;
};

std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

CaseContext context(const Check& c, int index, std::uint64_t seed, const Caps& caps, int shrink) {
  return CaseContext{index, case_seed(seed ^ name_hash(c.name), static_cast<std::uint64_t>(index)), shrink, caps};
}

Outcome run_one(const Check& c, const CaseContext& ctx) {
  try {
    auto w = c.run(ctx);
    if (w) return {Status::Failed, *w};
    return {};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SizeCapExceeded) return {Status::Skipped, e.what()};
    return {Status::Failed, std::string(to_string(e.kind())) + ": " + e.what()};
  } catch (const std::exception& e) {
    return {Status::Failed, std::string("exception: ") + e.what()};
  }
}

const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>> r = {
      {"lccdc-axioms", suites::lccdc_axioms},
      {"adjunction-cartesian", suites::adjunction_cartesian},
      {"hoyer-appendix", suites::hoyer_appendix},
      {"lindner-laws", suites::lindner_laws},
      {"polynomial-laws", suites::polynomial_laws},
      {"product-universality", suites::product_universality},
      {"mackey-factorization", suites::mackey_factorization},
      {"indexing-axioms", suites::indexing_axioms},
      {"separability-mazur", suites::separability_mazur},
      {"main-theorem", suites::main_theorem},
      {"mackey-preservation", suites::mackey_preservation},
      {"forgetful-cube", suites::forgetful_cube},
  };
  return r;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.pass; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : registry()) out.push_back(name);
  return out;
}

std::vector<Check> suite_checks(std::string_view name) {
  for (const auto& [n, make] : registry())
    if (n == name) return make();
  fail(ErrorKind::UnknownSuite, "unknown suite: " + std::string(name));
}

SuiteReport run_checks(std::string_view name, const std::vector<Check>& checks, std::uint64_t seed, const Caps& caps,
                       int threads) {
  std::vector<std::pair<int, int>> tasks;
  for (int c = 0; c < static_cast<int>(checks.size()); ++c)
    for (int k = 0; k < checks[c].cases; ++k) tasks.emplace_back(c, k);
  std::vector<Outcome> outcomes(tasks.size());
  if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, std::max<std::size_t>(1, tasks.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      const Check& c = checks[tasks[t].first];
      outcomes[t] = run_one(c, context(c, tasks[t].second, seed, caps, 0));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SuiteReport r{std::string(name), seed, caps, static_cast<int>(tasks.size()), {}, {}};
  std::size_t t = 0;
  for (const Check& c : checks) {
    CheckSummary s{c.name, c.cases, 0, 0, c.negative, true, {}};
    for (int k = 0; k < c.cases; ++k, ++t) {
      const Outcome& o = outcomes[t];
      if (o.status == Status::Skipped) ++s.skipped;
      if (o.status != Status::Failed) continue;
      ++s.failed;
      if (c.negative) {
        if (s.observed.empty()) s.observed = o.witness;
        continue;
      }
      Failure f{c.name, k, context(c, k, seed, caps, 0).seed, 0, o.witness};
      for (int level = 1; level <= c.max_shrink; ++level) {
        Outcome smaller = run_one(c, context(c, k, seed, caps, level));
        if (smaller.status != Status::Failed) break;
        f.shrink = level;
        f.witness = smaller.witness;
      }
      r.failures.push_back(std::move(f));
    }
    s.pass = c.negative ? s.failed > 0 : s.failed == 0;
    r.checks.push_back(std::move(s));
  }
  return r;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, const Caps& caps, int threads) {
  return run_checks(name, suite_checks(name), seed, caps, threads);
}

std::optional<std::string> rerun_case(std::string_view suite, std::string_view check, int index, std::uint64_t seed,
                                      const Caps& caps, int shrink) {
  for (const Check& c : suite_checks(suite)) {
    if (c.name != check) continue;
    Outcome o = run_one(c, context(c, index, seed, caps, shrink));
    if (o.status == Status::Failed) return o.witness;
    return std::nullopt;
  }
  fail(ErrorKind::UnknownSuite, "unknown check: " + std::string(check));
}

std::string report_text(const SuiteReport& r) {
  std::string out = "suite " + r.suite + " seed " + std::to_string(r.seed) + " caps " + r.caps.to_string() + "\n";
  for (const auto& c : r.checks) {
    out += c.pass ? "  PASS " : "  FAIL ";
    out += c.name + " (" + std::to_string(c.cases) + " cases";
    if (c.skipped) out += ", " + std::to_string(c.skipped) + " skipped at caps";
    if (c.negative) out += c.failed ? ", negative control observed" : ", negative control NOT observed";
    else if (c.failed) out += ", " + std::to_string(c.failed) + " failed";
    out += ")\n";
    if (c.negative && !c.observed.empty()) out += "    observed: " + c.observed + "\n";
  }
  for (const auto& f : r.failures)
    out += "  witness " + f.check + " case " + std::to_string(f.index) + " seed " + std::to_string(f.seed) +
           " shrink " + std::to_string(f.shrink) + ": " + f.witness + "\n";
  out += std::string("result: ") + (r.pass() ? "PASS" : "FAIL") + " (" + std::to_string(r.checks.size()) +
         " checks, " + std::to_string(r.cases) + " cases)\n";
  return out;
}

std::string report_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  j["seed"] = r.seed;
  j["caps"] = r.caps.to_string();
  j["cases"] = r.cases;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["cases"] = c.cases;
    e["failed"] = c.failed;
    e["skipped"] = c.skipped;
    e["negative_control"] = c.negative;
    if (c.negative) e["observed"] = c.observed;
    j["checks"].push_back(std::move(e));
  }
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back(
        {{"check", f.check}, {"case", f.index}, {"seed", f.seed}, {"shrink", f.shrink}, {"witness", f.witness}});
  return j.dump(2) + "\n";
}

}  // namespace tambara
