#include <random>

#include <gtest/gtest.h>

#include "braidlink/errors.hpp"
#include "braidlink/mobius.hpp"
#include "braidlink/random.hpp"
#include "braidlink/words.hpp"
#include "support/oracles.hpp"

using namespace braidlink;

namespace {

std::size_t error_offset(std::string_view text) {
  try {
    parse_loop(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

std::vector<std::complex<double>> strand4(const SphericalBraid& b) {
  std::vector<std::complex<double>> out;
  for (const auto& p : b.strand(3)) out.push_back(p.value());
  return out;
}

}  // namespace

TEST(ParseLoop, CommutatorExpands) { EXPECT_EQ(render(parse_loop("[x,y]")), "xyXY"); }

TEST(ParseLoop, PowersAndInverses) {
  EXPECT_EQ(render(parse_loop("x^2 Y")), "xxY");
  EXPECT_EQ(render(parse_loop("(xy)^-2")), "YXYX");
  EXPECT_EQ(render(parse_loop("[x,y]^-1")), "yxYX");
  EXPECT_EQ(render(parse_loop(" [ x^2 , (y) ] ")), "xxyXXY");
  EXPECT_TRUE(parse_loop("").empty());
  EXPECT_TRUE(parse_loop("x^0").empty());
  EXPECT_EQ(render(parse_loop("[[x,y],x]")), "xyXYxyxYXX");
}

TEST(ParseLoop, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(error_offset("[x,"), 3u);
  EXPECT_EQ(error_offset("x]"), 1u);
  EXPECT_EQ(error_offset("xz"), 1u);
  EXPECT_EQ(error_offset("(x"), 2u);
  EXPECT_EQ(error_offset("x^"), 2u);
  EXPECT_EQ(error_offset("[x y]"), 4u);
}

TEST(ParseLoop, ExponentOverflow) {
  EXPECT_THROW(parse_loop("x^99999999999999999999"), ParseError);
  EXPECT_THROW(parse_loop("(x^1000000)^1000000"), ParseError);
}

TEST(ParseLoop, RenderRoundTripsOnRandomWords) {
  Rng rng(1);
  std::uniform_int_distribution<int> letter(0, 3), length(0, 30);
  const char alphabet[] = {'x', 'X', 'y', 'Y'};
  for (int t = 0; t < 200; ++t) {
    LoopWord w;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) w.letters.push_back(static_cast<LoopLetter>(alphabet[letter(rng)]));
    EXPECT_EQ(parse_loop(render(w)), w);
    EXPECT_EQ(inverse(inverse(w)), w);
  }
}

TEST(ParseArtin, PureWordsAccepted) {
  EXPECT_EQ(parse_artin("s1^2").letters, (std::vector<ArtinLetter>{{1, 2}}));
  EXPECT_EQ(parse_artin("s1 s2 s2 s1").letters.size(), 4u);
  EXPECT_EQ(parse_artin("s3^2 s1^-2").letters, (std::vector<ArtinLetter>{{3, 2}, {1, -2}}));
  EXPECT_TRUE(parse_artin("").letters.empty());
}

TEST(ParseArtin, NonPureWordReportsPermutation) {
  try {
    parse_artin("s1");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(1 2)"), std::string::npos);
  }
  EXPECT_EQ(permutation(parse_artin_unchecked("s1 s2")), Permutation::from_cycles("(1 3 2)"));
}

TEST(ParseArtin, SyntaxErrors) {
  EXPECT_THROW(parse_artin("s4^2"), ParseError);
  EXPECT_THROW(parse_artin("t1"), ParseError);
  EXPECT_THROW(parse_artin("s1^"), ParseError);
  EXPECT_EQ(render(parse_artin("s1^2 s2^-2")), "s1^2 s2^-2");
}

TEST(RealizeLoop, EmptyWordIsConstant) {
  const auto b = realize_loop(LoopWord{}, 32);
  EXPECT_EQ(b, SphericalBraid::constant({Point(0.0), Point(1.0), Point::infinity(), Point(2.0)}, 256));
}

TEST(RealizeLoop, GeometryBounds) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const LoopWord w = random_balanced_loop_word(rng);
    const auto b = realize_loop(w, 64);
    EXPECT_EQ(b.size(), std::max<std::size_t>(8, w.size()) * 64);
    EXPECT_EQ(b.strand(3).front(), Point(2.0));
    EXPECT_TRUE(validate(b, 1e-3).valid());
    for (const auto& p : b.strand(3)) {
      EXPECT_LE(std::abs(p.value()), 3.0);
      EXPECT_GE(std::abs(p.value()), 0.05);
      EXPECT_GE(std::abs(p.value() - 1.0), 0.05);
    }
  }
  EXPECT_THROW(realize_loop(parse_loop("x"), 31), std::invalid_argument);
}

TEST(RealizeLoop, InverseLetterRetracesSamples) {
  const auto fwd = strand4(realize_loop(parse_loop("x"), 32));
  const auto bwd = strand4(realize_loop(parse_loop("X"), 32));
  const std::size_t n = fwd.size();
  for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(fwd[k], bwd[(n - k) % n]);
}

TEST(RealizeLoop, ExponentSumLawAgainstRayCrossingOracle) {
  Rng rng(4);
  std::uniform_int_distribution<int> letter(0, 3), length(0, 12);
  const char alphabet[] = {'x', 'X', 'y', 'Y'};
  for (int t = 0; t < 100; ++t) {
    LoopWord w;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) w.letters.push_back(static_cast<LoopLetter>(alphabet[letter(rng)]));
    const auto pts = strand4(realize_loop(w, 32));
    EXPECT_EQ(oracle::ray_crossing_winding(pts, 0.0), exponent_sum_x(w)) << render(w);
    EXPECT_EQ(oracle::ray_crossing_winding(pts, 1.0), exponent_sum_y(w)) << render(w);
  }
}

TEST(RealizeArtin, EmptyWordIsConstantAtTheFourSlots) {
  const auto b = realize_artin(BraidWord{}, 16);
  EXPECT_EQ(b, SphericalBraid::constant({Point(1.0), Point(0.0, 1.0), Point(-1.0), Point(0.0, -1.0)}, 16));
}

TEST(RealizeArtin, RandomPureWordsAreWellSeparated) {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const BraidWord w = random_pure_artin_word(rng);
    const auto b = realize_artin(w, 32);
    EXPECT_EQ(b.size(), w.expanded_length() * 32);
    EXPECT_TRUE(validate(b, 1e-3).valid()) << render(w);
    EXPECT_EQ(b.at(0), realize_artin(BraidWord{}, 16).at(0));
  }
}

TEST(RealizeArtin, FullTwistWindsStrandTwoAboutStrandOne) {
  const auto b = realize_artin(parse_artin("s1^2"), 64);
  std::vector<std::complex<double>> rel;
  for (std::size_t k = 0; k < b.size(); ++k) rel.push_back(b.strand(1)[k].value() - b.strand(0)[k].value());
  EXPECT_EQ(oracle::ray_crossing_winding(rel, 0.0), 1);
  EXPECT_THROW(realize_artin(parse_artin_unchecked("s2"), 64), ValidationError);
}
