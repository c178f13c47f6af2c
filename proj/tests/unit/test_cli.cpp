#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

#include "commands.hpp"

using namespace sftgw;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "sftgw");
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, HurwitzJson) {
  const auto r = invoke({"hurwitz", "--d", "3", "--mu0", "3", "--mu1", "3", "--muinf", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("d"), 3);
  EXPECT_EQ(j.at("mu0"), nlohmann::json::array({3}));
  EXPECT_EQ(j.at("muinf"), nlohmann::json::array({3}));
  EXPECT_EQ(j.at("value"), "1/3");
  EXPECT_EQ(j.at("genus"), 1);
}

TEST(Cli, HurwitzExamples) {
  auto j = nlohmann::json::parse(invoke({"hurwitz", "--d", "1", "--mu0", "1", "--mu1", "1", "--muinf", "1", "--format", "json"}).out);
  EXPECT_EQ(j.at("value"), "1");
  EXPECT_EQ(j.at("genus"), 0);
  j = nlohmann::json::parse(invoke({"hurwitz", "--d", "2", "--mu0", "2", "--mu1", "2", "--muinf", "1,1", "--format", "json"}).out);
  EXPECT_EQ(j.at("value"), "1/2");
  EXPECT_EQ(j.at("muinf"), nlohmann::json::array({1, 1}));
}

TEST(Cli, HamiltonianText) {
  const auto r = invoke({"hamiltonian", "--n", "0", "--max-energy", "4"});
  ASSERT_EQ(r.code, 0);
  for (const char* s : {"q1*p1", "q2*p2", "q3*p3", "q4*p4", "-1/24"}) EXPECT_NE(r.out.find(s), std::string::npos) << s;
  EXPECT_EQ(r.out.find("q5*p5"), std::string::npos);
}

TEST(Cli, HamiltonianJsonTerms) {
  const auto r = invoke({"hamiltonian", "--n", "-1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& terms = j.at("bosonic");
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].at("h"), -2);
  EXPECT_EQ(terms[0].at("coeff"), "1");
  EXPECT_EQ(terms[0].at("vars").at("t0"), 1);
}

TEST(Cli, CommuteAndElliptic) {
  auto r = invoke({"commute", "--m", "2", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  r = invoke({"elliptic", "--max-z", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, P1DegreeTwoReportsReadings) {
  const auto r = invoke({"p1", "--d", "2", "--max-n", "2", "--max-s-order", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("printed"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"hamiltonian"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"hamiltonian", "--n", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"hamiltonian", "--n", "0", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"hamiltonian", "--n", "0", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"hurwitz", "--d", "3", "--mu0", "2", "--mu1", "3", "--muinf", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"hurwitz", "--d", "2", "--mu0", "2,,", "--mu1", "2", "--muinf", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"p1", "--d", "7"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"curve", "--g", "-1"}).code, cli::kExitUsage);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<const char*> args = {"curve", "--g", "2", "--max-z", "2", "--format", "json"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
