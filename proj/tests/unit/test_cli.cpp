#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "koch/errors.hpp"
#include "koch_tools/cli.hpp"
#include "koch_tools/directions.hpp"

using namespace koch;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "koch");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tools::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(NamedAngles, SlopesMatchTheRadians) {
  for (const auto& a : tools::named_angles()) {
    const auto [x, y] = to_cartesian({a.alpha, a.beta});
    EXPECT_NEAR(std::atan2(y, x), a.radians, 1e-12) << a.name;
    const auto d = tools::parse_direction(std::string(a.name));
    EXPECT_EQ(d.vector(), primitive({a.alpha, a.beta}));
  }
  EXPECT_EQ(tools::parse_direction("pi/6").vector(), LatticeVector(1, 1));
  EXPECT_EQ(tools::parse_direction("-2,1").vector(), LatticeVector(-2, 1));
  EXPECT_THROW(tools::parse_direction("pi/7"), DomainError);
  EXPECT_THROW(tools::parse_direction("0,0"), DomainError);
}

TEST(Levels, Parse) {
  EXPECT_EQ(tools::parse_levels("0..3"), std::make_pair(0, 3));
  EXPECT_EQ(tools::parse_levels("2"), std::make_pair(2, 2));
  EXPECT_THROW(tools::parse_levels("3..1"), DomainError);
  EXPECT_THROW(tools::parse_levels("a..b"), DomainError);
}

TEST(Presets, ResolveToValidSeeds) {
  for (const auto& p : tools::presets()) {
    EXPECT_TRUE(tools::find_preset(p.name));
    const auto r = run({"orbit", "--seed", std::string(p.name)});
    EXPECT_EQ(r.code, tools::kExitOk) << p.name << r.err;
  }
  EXPECT_FALSE(tools::find_preset("nope"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, tools::kExitOk);
  EXPECT_EQ(run({"build", "--level", "1"}).code, tools::kExitOk);
  EXPECT_EQ(run({"build", "--bogus"}).code, tools::kExitDomain);
  EXPECT_EQ(run({"orbit", "--t", "0", "--dir", "1,1"}).code, tools::kExitDomain);
  EXPECT_EQ(run({"orbit", "--seed", "nope"}).code, tools::kExitDomain);
  EXPECT_EQ(run({"build", "--level", "99"}).code, tools::kExitResource);
  EXPECT_EQ(run({"orbit", "--level", "3", "--seed", "midpoint", "--max-steps", "3"}).code,
            tools::kExitResource);
  const auto sweep = run({"sweep", "--levels", "0..2", "--max-s", "1"});
  EXPECT_EQ(sweep.code, tools::kExitVerification) << sweep.err;
}

TEST(Cli, JsonIsDeterministic) {
  const auto a = run({"sequence", "--seed", "midpoint", "--levels", "0..2", "--json", "-"});
  const auto b = run({"sequence", "--seed", "midpoint", "--levels", "0..2", "--json", "-"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW((void)json::parse(a.out));
}

TEST(Cli, BuildJson) {
  const auto r = run({"build", "--level", "2", "--json", "-"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["level"], 2);
  EXPECT_EQ(j["vertices"].size(), 48u);
}

TEST(Cli, SequenceJsonReportsConstancy) {
  const auto r = run({"sequence", "--seed", "constant", "--levels", "0..3", "--json", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["constancy"]["stabilizes_at"], 1);
  EXPECT_EQ(j["constancy"]["hypothesis_holds"], true);
  EXPECT_EQ(j["members"].size(), 4u);
}

TEST(Cli, SurfaceTable) {
  const auto r = run({"surface", "--level", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("-90"), std::string::npos);
  EXPECT_NE(r.out.find("46"), std::string::npos);
  const auto j = json::parse(run({"surface", "--level", "2", "--tile", "3", "--json", "-"}).out);
  EXPECT_EQ(j["censuses"][0]["genus"], 46);
  EXPECT_EQ(j["censuses"][0]["euler_characteristic"], -90);
}

TEST(Cli, PathBoth) {
  const auto r = run({"path", "--seed", "midpoint", "--levels", "0..4", "--both", "--json", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j.contains("combined"));
}
