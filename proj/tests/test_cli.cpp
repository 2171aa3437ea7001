#include <sstream>

#include <gtest/gtest.h>

#include "braidlink/cli.hpp"
#include "braidlink/errors.hpp"
#include "braidlink/io.hpp"
#include "braidlink/words.hpp"

using namespace braidlink;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, BorromeanInvariants) {
  const auto r = run({"invariants", "--format", "loop", "-e", "[x,y]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["lk"], 0);
  EXPECT_EQ(j["lk_tilde"], 0);
  EXPECT_EQ(j["brunn"], true);
  EXPECT_EQ(j["hopf"], 1);
  // Fixed field order.
  EXPECT_EQ(r.out.rfind("{\"lk\":0,\"lk_tilde\":0,\"brunn\":true,\"hopf\":1,", 0), 0u);
}

TEST(Cli, EmptyWordAndGate) {
  EXPECT_EQ(run({"invariants", "--format", "loop", "-e", ""}).json()["hopf"], 0);
  const auto gated = run({"invariants", "--format", "loop", "-e", "x"});
  ASSERT_EQ(gated.code, 0);
  EXPECT_EQ(gated.json()["brunn"], false);
  EXPECT_FALSE(gated.json().contains("hopf"));
  EXPECT_FALSE(gated.json().contains("hopf_raw"));
}

TEST(Cli, ExitCodes) {
  const auto bad = run({"invariants", "--format", "loop", "-e", "[x,"});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_EQ(Json::parse(bad.err)["error"], "validation");

  EXPECT_EQ(run({"invariants", "--format", "artin", "-e", "s1"}).code, kExitValidation);
  EXPECT_EQ(run({"invariants", "--format", "nope"}).code, kExitValidation);
  EXPECT_EQ(run({"invariants", "--format", "loop", "-e", "[x,y]", "--tol", "1e-18"}).code, kExitConvergence);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"invariants", "--format", "loop", "-e", "[x,y]^2 [y,x]"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, NormalizeConstantAndBorromean) {
  const std::string constant =
      R"({"version":1,"strands":[[[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]],)"
      R"([[1,0],[1,0],[1,0],[1,0],[1,0],[1,0],[1,0],[1,0]],)"
      R"(["inf","inf","inf","inf","inf","inf","inf","inf"],)"
      R"([[2,0],[2,0],[2,0],[2,0],[2,0],[2,0],[2,0],[2,0]]]})";
  const auto r = run({"normalize", "--format", "json"}, constant);
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& s : r.json()["samples"]) EXPECT_EQ(s, Json::array({2.0, 0.0}));

  const auto b = run({"normalize", "--format", "loop", "-e", "[x,y]"});
  ASSERT_EQ(b.code, 0);
  const auto inv = run({"invariants", "--format", "json"}, b.out);
  EXPECT_EQ(inv.json()["lk"], 0);
  EXPECT_EQ(inv.json()["lk_tilde"], 0);
}

TEST(Cli, DegenerateBraidExitsWithValidationCode) {
  const std::string coincident =
      R"({"version":1,"strands":[[[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]],)"
      R"([[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]],)"
      R"(["inf","inf","inf","inf","inf","inf","inf","inf"],)"
      R"([[2,0],[2,0],[2,0],[2,0],[2,0],[2,0],[2,0],[2,0]]]})";
  EXPECT_EQ(run({"normalize", "--format", "json"}, coincident).code, kExitValidation);
  EXPECT_EQ(run({"invariants", "--format", "json"}, "{not json").code, kExitValidation);
  EXPECT_EQ(run({"invariants", "--format", "json"}, R"({"version":1,"loop":"x","artin":"s1^2"})").code,
            kExitValidation);
}

TEST(Cli, NormalizedPathRoundTripsThroughInvariants) {
  for (const char* word : {"[x,y]", "[x,y]^-2 x y X", "x Y"}) {
    const auto direct = run({"invariants", "--format", "loop", "-e", word});
    const auto path = run({"normalize", "--format", "loop", "-e", word});
    EXPECT_EQ(run({"invariants", "--format", "json"}, path.out).out, direct.out) << word;
  }
}

TEST(Cli, WordAndExplicitSamplesAgree) {
  for (const std::vector<std::string> src : {std::vector<std::string>{"loop", "[x,y]^2"},
                                             std::vector<std::string>{"artin", "s1^2 s2^2 s1^-2 s2^-2"}}) {
    const auto direct = run({"invariants", "--format", src[0], "-e", src[1], "--samples", "128"});
    const auto braid = run({"realize", "--format", src[0], "-e", src[1], "--samples", "128"});
    ASSERT_EQ(braid.code, 0);
    EXPECT_EQ(run({"invariants", "--format", "json"}, braid.out).out, direct.out);
    const Json doc{{"version", 1}, {src[0], src[1]}};
    EXPECT_EQ(run({"invariants", "--format", "json", "--samples", "128"}, doc.dump()).out, direct.out);
  }
}

TEST(Cli, StartLambdaOnlyMovesRawValueWithinRoundoff) {
  const auto a = run({"invariants", "--format", "loop", "-e", "[x,y]^2"}).json();
  const auto b = run({"invariants", "--format", "loop", "-e", "[x,y]^2", "--start-lambda", "10"}).json();
  EXPECT_EQ(a["hopf"], b["hopf"]);
  EXPECT_NEAR(a["hopf_raw"].get<double>(), b["hopf_raw"].get<double>(), 1e-9);
}

TEST(Cli, VerifyPassesAndRejectsZeroCount) {
  const auto r = run({"verify", "--count", "5", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = r.json();
  EXPECT_TRUE(j["ok"].get<bool>());
  for (const auto& s : j["suites"]) EXPECT_EQ(s["passed"], s["total"]) << s["name"];
  EXPECT_EQ(run({"verify", "--count", "0"}).code, kExitValidation);
}

// The quadrature residual floor is around 1e-14, so a tolerance below it
// makes the convergence suite fail with a serialized counterexample.
TEST(Cli, VerifyReportsResidualAboveTamperedTolerance) {
  const auto r = run({"verify", "--count", "2", "--seed", "7", "--tol", "1e-17"});
  EXPECT_EQ(r.code, kExitFailure);
  const Json j = r.json();
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_TRUE(j.contains("counterexample"));
  for (const auto& s : j["suites"]) {
    if (s["name"] == "convergence") EXPECT_LT(s["passed"].get<int>(), s["total"].get<int>());
  }
}

TEST(BraidDocument, JsonRoundTrip) {
  const auto b = realize_loop(parse_loop("[x,y]"), 32);
  const auto doc = parse_document(Json::parse(braid_to_json(b).dump()));
  ASSERT_TRUE(doc.strands.has_value());
  EXPECT_EQ(*doc.strands, b);
  EXPECT_THROW(parse_document(Json{{"version", 2}, {"loop", "x"}}), ValidationError);
  EXPECT_THROW(parse_document(Json{{"version", 1}}), ValidationError);
  EXPECT_THROW(parse_document(Json::parse(R"({"version":1,"strands":[[["a",0]]]})")), ValidationError);
}

TEST(BraidDocument, RoundSignificant) {
  EXPECT_EQ(round_significant(0.1234567890123456), 0.123456789012);
  EXPECT_EQ(round_significant(-0.0), 0.0);
  EXPECT_EQ(round_significant(1e-300), 1e-300);
}

TEST(Cli, WordIsAnAliasForLoop) {
  EXPECT_EQ(run({"invariants", "--format", "word", "-e", "[x,y]"}).out,
            run({"invariants", "--format", "loop", "-e", "[x,y]"}).out);
}
