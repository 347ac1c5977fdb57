#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "lcmlat/enumeration.hpp"
#include "lcmlat/error.hpp"
#include "lcmlat/io_formats.hpp"

namespace lcmlat {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lcmlat::Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(PosetText, ParsesHeaderAndCovers) {
  const Poset p = parse_poset("# two-chain\nn 2\n0 1   # cover\n\n");
  EXPECT_EQ(p, fixtures::chain(2));
  EXPECT_EQ(parse_poset("n 3\n").size(), 3U);
}

TEST(PosetText, Errors) {
  EXPECT_EQ(code_of([] { parse_poset("n 2\n0 5\n"); }), ErrorCode::kBadIndex);
  EXPECT_EQ(code_of([] { parse_poset("n 2\n1 0\n"); }), ErrorCode::kBadIndexOrder);
  EXPECT_EQ(code_of([] { parse_poset("n 65\n"); }), ErrorCode::kSizeTooLarge);
  EXPECT_EQ(code_of([] { parse_poset(""); }), ErrorCode::kSyntaxError);
  try {
    parse_poset("n 3\n0 1\n1 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(PosetText, RelabelAcceptsAnyOrder) {
  const Poset p = parse_poset("n 3\n2 1\n1 0\n", true);
  EXPECT_EQ(p, fixtures::chain(3));
}

TEST(PosetText, EmitCube) {
  const std::string text = emit_poset(eight_element_class("8_J"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 13);
  EXPECT_EQ(text.substr(0, 8), "n 8\n0 1\n");
}

TEST(PosetText, RoundTripsEnumerationOutput) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      EXPECT_EQ(parse_poset(emit_poset(p)), p);
      EXPECT_EQ(poset_from_json(to_json(p)), p);
    }
  }
}

TEST(Dot, ChainAndDiamond) {
  const std::string chain = emit_dot(fixtures::chain(3));
  EXPECT_NE(chain.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(chain.find("0 -> 1;"), std::string::npos);
  EXPECT_NE(chain.find("1 -> 2;"), std::string::npos);
  EXPECT_EQ(chain.find("0 -> 2"), std::string::npos);

  const std::string diamond = emit_dot(fixtures::diamond(), {"1", "3", "5", "105"});
  EXPECT_NE(diamond.find("{ rank=same; 1; 2; }"), std::string::npos);
  EXPECT_NE(diamond.find("[label=\"105\"]"), std::string::npos);
  EXPECT_EQ(std::count(diamond.begin(), diamond.end(), '>'), 4);
}

TEST(Integers, ParseAndEmit) {
  const auto xs = parse_integers("1, 3 5\n# c\n45,-2\n");
  ASSERT_EQ(xs.size(), 5U);
  EXPECT_EQ(xs[3], 45);
  EXPECT_EQ(xs[4], -2);
  EXPECT_EQ(emit_integers(xs), "1\n3\n5\n45\n-2\n");
  EXPECT_EQ(integers_from_json(to_json(xs)), xs);
  EXPECT_EQ(code_of([] { parse_integers("1 2\n3 4x\n"); }), ErrorCode::kSyntaxError);
  const BigInt big("123456789012345678901234567890");
  EXPECT_EQ(parse_integers(big.get_str()).front(), big);
}

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("1.5"), Rational(3, 2));
  EXPECT_EQ(to_fraction_string(Rational(4)), "4/1");
  EXPECT_EQ(to_fraction_string(Rational(-2, 6)), "-1/3");
  for (const char* bad : {"", "1/0", "a", "1.2.3", "1e5"}) {
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::kSyntaxError) << bad;
  }
}

TEST(Report, JsonRoundTrip) {
  Report r;
  r.command = "analyze";
  r.inputs["set"] = to_json(fixtures::set_of({1, 3, 5, 45}).elements());
  r.results["psi"] = Json::array({"1/1", "-2/3"});
  const Json j = r.to_json();
  EXPECT_EQ(j.at("schema_version"), "1");
  EXPECT_EQ(Report::from_json(Json::parse(j.dump())), r);
  EXPECT_EQ(code_of([] { Report::from_json(Json::array()); }), ErrorCode::kSyntaxError);
}

TEST(Report, NumbersAreExactStrings) {
  const PsiExpansion e = psi_expansion(fixtures::odd_nine(), 1, 8);
  const Json j = to_json(e);
  EXPECT_EQ(BigInt(j.at("denominator").get<std::string>()), e.denominator);
  EXPECT_EQ(integers_from_json(j.at("numerators")), e.numerators);
  EXPECT_EQ(j.at("numerator_sum"), "0");
  EXPECT_EQ(j.at("indices").front(), 9);

  const CertifiedReal third = CertifiedReal::from_rational(Rational(1, 3), 128);
  const Json t = to_json(third);
  EXPECT_LE(BigFloat(t.at("lo").get<std::string>(), 128), third.lo());
  EXPECT_LE(third.hi(), BigFloat(t.at("hi").get<std::string>(), 128));
}

}  // namespace
}  // namespace lcmlat
