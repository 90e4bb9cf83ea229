#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kjdt/cli.hpp"
#include "kjdt/io.hpp"

using namespace kjdt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "kjdt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "kjdt-test-cli";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::filesystem::remove(p);
  return p.string();
}

}  // namespace

TEST(Coeff, StarShapeWithChecks) {
  const auto r = run({"coeff", "D", "--lambda", "[2]", "--mu", "[2,1]", "--nu", "[3,1]", "--check"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("= -2"), std::string::npos);
  EXPECT_NE(r.out.find("buch"), std::string::npos);
  EXPECT_NE(r.out.find("identity"), std::string::npos);
}

TEST(Coeff, JsonOutput) {
  const auto r = run({"coeff", "E", "--lambda", "[1]", "--mu", "[1]", "--nu", "[2,1]", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("value"), -3);
  EXPECT_EQ(j.at("kind"), "E");
}

TEST(Coeff, UsageErrors) {
  EXPECT_EQ(run({"coeff", "Q", "--lambda", "[1]", "--mu", "[1]", "--nu", "[1]"}).code, kExitUsage);
  EXPECT_EQ(run({"coeff", "C", "--lambda", "[1,2]", "--mu", "[1]", "--nu", "[1]"}).code, kExitUsage);
  EXPECT_EQ(run({"coeff", "C", "--lambda", "[1]"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
}

TEST(Coeff, CacheReuseAndConflict) {
  const auto path = temp_path("cache.jsonl");
  const std::vector<std::string> args = {"coeff", "C", "--lambda", "[1]", "--mu", "[1]", "--nu", "[2,1]",
                                         "--cache", path, "--format", "json"};
  const auto first = run(args);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  EXPECT_FALSE(nlohmann::json::parse(first.out).at("cached").get<bool>());
  const auto second = run(args);
  ASSERT_EQ(second.code, kExitOk) << second.err;
  EXPECT_TRUE(nlohmann::json::parse(second.out).at("cached").get<bool>());
  EXPECT_EQ(nlohmann::json::parse(second.out).at("value"), -1);

  // tamper with the stored value
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  in.close();
  auto j = nlohmann::json::parse(line);
  j["value"] = 7;
  {
    std::ofstream out(path, std::ios::trunc);
    out << j.dump() << "\n";
  }
  auto checked = args;
  checked.push_back("--check");
  EXPECT_EQ(run(checked).code, kExitDisagreement);
}

TEST(Expand, IdealSheafTable) {
  const auto r = run({"expand", "product", "--lambda", "[1]", "--mu", "[1]", "--rows", "2", "--cols", "2",
                      "--basis", "ideal", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("-3"), std::string::npos);
  const auto co = run({"expand", "coproduct", "--nu", "[2,1]", "--frame", "1,3,1,3"});
  EXPECT_EQ(co.code, kExitOk) << co.err;
  EXPECT_FALSE(co.out.empty());
}

TEST(Verify, StarTableReport) {
  const auto r = run({"verify", "star-table", "--seed", "1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_EQ(j.at("seed"), 1);
  EXPECT_EQ(run({"verify", "no-such-suite"}).code, kExitUsage);
}

TEST(Verify, SeededRunsAreDeterministic) {
  const std::vector<std::string> args = {"verify", "involution", "--seed", "42", "--instances", "50",
                                         "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto unseeded = run({"verify", "involution", "--instances", "5"});
  EXPECT_EQ(unseeded.code, kExitOk);
  EXPECT_NE((unseeded.out + unseeded.err).find("seed"), std::string::npos);
}

TEST(Tableaux, ProductRectifyEnumerate) {
  const auto p = run({"product", "--op", "odot", "--left", "1 2 3/2 4 5", "--right", "1 2"});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  EXPECT_NE(p.out.find("4 5"), std::string::npos);

  const auto r = run({"rectify", "--tableau", ". . 2/. 1 4/1 3", "--all-orders"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("3 4"), std::string::npos);
  EXPECT_EQ(run({"rectify", "--tableau", "2 1"}).code, kExitUsage);

  const auto e = run({"enumerate", "--outer", "[2,1]", "--alphabet", "3", "--count"});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  EXPECT_EQ(e.out, "5\n");

  const auto ce = run({"counterexample", "--lambda", "[2,1]"});
  ASSERT_EQ(ce.code, kExitOk) << ce.err;
  EXPECT_NE(ce.out.find("[3,3,2]"), std::string::npos);
  EXPECT_EQ(run({"counterexample", "--lambda", "[2,2]"}).code, kExitUsage);
}
