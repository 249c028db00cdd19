#include <gtest/gtest.h>

#include <string>

#include "rcc/io.hpp"
#include "rcc/moves.hpp"

using namespace rcc;

namespace {

const char* kCurl = R"({"crossings":[{"rotation":[0,1,2,3],"over":0}],
  "edges":[{"darts":[0,1],"sign":1},{"darts":[2,3],"sign":1}]})";

std::string parse_error_message(const std::string& text) {
  try {
    (void)parse_diagram(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, ParsesCurl) { EXPECT_EQ(parse_diagram(kCurl), fixtures::curl()); }

TEST(Io, RoundTrip) {
  for (const auto& d : {fixtures::curl(), fixtures::torus11(), fixtures::rp2curl(), fixtures::trefoil()}) {
    const std::string text = serialize_diagram(d);
    EXPECT_EQ(parse_diagram(text), d);
    EXPECT_EQ(serialize_diagram(parse_diagram(text)), text);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = random_diagram(1 + seed % 12, 0.5, seed);
    EXPECT_EQ(parse_diagram(serialize_diagram(d)), d);
  }
}

TEST(Io, SerializeLayout) {
  EXPECT_EQ(serialize_diagram(fixtures::rp2curl()),
            "{\n"
            "  \"crossings\": [\n"
            "    {\"rotation\": [0, 1, 2, 3], \"over\": 0}\n"
            "  ],\n"
            "  \"edges\": [\n"
            "    {\"darts\": [0, 1], \"sign\": -1},\n"
            "    {\"darts\": [2, 3], \"sign\": 1}\n"
            "  ]\n"
            "}\n");
}

TEST(Io, SignMustBePlusOrMinusOne) {
  const std::string msg = parse_error_message(
      R"({"crossings":[{"rotation":[0,1,2,3],"over":0}],"edges":[{"darts":[0,1],"sign":0},{"darts":[2,3],"sign":1}]})");
  EXPECT_NE(msg.find("sign must be +1 or -1"), std::string::npos) << msg;
}

TEST(Io, FifthRotationEntry) {
  EXPECT_FALSE(parse_error_message(
                   R"({"crossings":[{"rotation":[0,1,2,3,4],"over":0}],"edges":[{"darts":[0,1],"sign":1},{"darts":[2,3],"sign":1}]})")
                   .empty());
}

TEST(Io, StrictFields) {
  EXPECT_NE(parse_error_message(
                R"({"crossings":[{"rotation":[0,1,2,3],"over":0,"colour":1}],"edges":[{"darts":[0,1],"sign":1},{"darts":[2,3],"sign":1}]})")
                .find("unknown field"),
            std::string::npos);
  EXPECT_NE(parse_error_message(R"({"crossings":[{"rotation":[0,1,2,3],"over":0}]})").find("missing field"),
            std::string::npos);
  EXPECT_FALSE(parse_error_message(
                   R"({"crossings":[{"rotation":[0,1.5,2,3],"over":0}],"edges":[{"darts":[0,1],"sign":1},{"darts":[2,3],"sign":1}]})")
                   .empty());
  EXPECT_FALSE(parse_error_message(
                   R"({"crossings":[{"rotation":[0,1,2,-3],"over":0}],"edges":[{"darts":[0,1],"sign":1},{"darts":[2,3],"sign":1}]})")
                   .empty());
  EXPECT_FALSE(parse_error_message("[1, 2").empty());
  EXPECT_FALSE(parse_error_message("[]").empty());
}

TEST(Io, InvariantViolationsAreDiagramErrors) {
  EXPECT_THROW((void)parse_diagram(
                   R"({"crossings":[{"rotation":[0,1,2,3],"over":5}],"edges":[{"darts":[0,1],"sign":1},{"darts":[2,3],"sign":1}]})"),
               DiagramError);
  EXPECT_THROW((void)parse_diagram(
                   R"({"crossings":[{"rotation":[0,1,2,3],"over":0}],"edges":[{"darts":[0,0],"sign":1},{"darts":[2,3],"sign":1}]})"),
               DiagramError);
  EXPECT_THROW((void)parse_diagram(R"({"crossings":[],"edges":[]})"), DiagramError);
}

TEST(Io, PlanarDiagramForm) {
  EXPECT_EQ(parse_diagram(R"({"pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]})"), fixtures::trefoil());
  EXPECT_THROW((void)parse_diagram(R"({"pd":[]})"), ParseError);
  EXPECT_THROW((void)parse_diagram(R"({"pd":[[1,2,3]]})"), ParseError);
  EXPECT_THROW((void)parse_diagram(R"({"pd":[[1,2,3,4]]})"), ParseError);
  EXPECT_THROW((void)parse_diagram(R"({"pd":[[1,1,2,2]],"extra":0})"), ParseError);
}
