#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "io.hpp"
#include "tambara/verify.hpp"

using namespace tambara;
using io::Json;

namespace {

const std::string kCli = TAMBARA_CLI;
const std::filesystem::path kData = TAMBARA_TEST_DATA;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  CliRun r;
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* f) { return (kData / f).string(); }

}  // namespace

TEST(Cli, ComposeJsonRoundTrips) {
  CliRun r = run("compose --kind bispan --format json " + data("bispan_transfer.json") + " " + data("bispan_restrict.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["seed"], 42);
  io::Loader ld;
  BispanClass got = ld.bispan(j["result"]);
  BispanClass want = bispan_compose(ld.bispan(Json(data("bispan_restrict.json"))),
                                    ld.bispan(Json(data("bispan_transfer.json"))));
  EXPECT_EQ(got, want);
  EXPECT_EQ(j["key"], Json(want.key()));
}

TEST(Cli, PiJsonRoundTrips) {
  CliRun r = run("pi --format json " + data("free_to_pt.json") + " " + data("fold_free.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  io::Loader ld;
  SliceObject got = ld.slice_object(Json::parse(r.out)["result"]);
  EquivariantMap i = ld.map(Json(data("free_to_pt.json")));
  SliceObject want = pi(i, ld.slice_object(Json(data("fold_free.json")))).object();
  EXPECT_TRUE(find_slice_iso(got, want).has_value());
  EXPECT_EQ(got.domain().orbit_count(), 3);
}

TEST(Cli, DistributorMatchesComposite) {
  CliRun r = run("distributor --format json " + data("fold_free.json") + " " + data("free_to_pt.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  io::Loader ld;
  BispanClass got = ld.bispan(Json::parse(r.out)["result"]);
  EquivariantMap f = ld.map(Json(data("fold_free.json")));
  EquivariantMap g = ld.map(Json(data("free_to_pt.json")));
  EXPECT_EQ(got, bispan_compose(bn_of(g), bt_of(f)));
}

TEST(Cli, VerifyJsonIsTheReport) {
  CliRun r = run("verify lccdc-axioms --format json --seed 9");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out), Json::parse(report_json(run_suite("lccdc-axioms", 9))));
  CliRun again = run("verify lccdc-axioms --format json --seed 9");
  EXPECT_EQ(r.out, again.out);
}

TEST(Cli, BurnsideNormColumn) {
  CliRun r = run("burnside C2 --op norm --format json");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["basis"], Json({"[C2/e]", "[C2/C2]"}));
  EXPECT_EQ(j["norm"][2]["norm"], Json({1, 2}));
  EXPECT_EQ(j["norm"][0]["norm"], Json({0, 0}));
}
