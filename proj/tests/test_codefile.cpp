#include <gtest/gtest.h>

#include <filesystem>

#include "flagcodes/codefile.hpp"
#include "flagcodes/errors.hpp"
#include "test_support.hpp"

namespace flagcodes {
namespace {

using namespace testing;

ParseError parse_error(std::string_view text) {
  try {
    parse_code(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error";
  return ParseError(ErrorKind::SyntaxError, 0, "");
}

TEST(CodeFile, SerializedSpread) {
  EXPECT_EQ(serialize_code(spread_example()),
            "flagcode v1\n"
            "q=2 n=4 type=1,2 flags=2\n"
            "flag 1\n1 0 0 0\n0 1 0 0\n"
            "flag 2\n0 0 1 0\n0 0 0 1\n");
}

TEST(CodeFile, RoundTripExampleCodes) {
  for (const auto& code : example_codes()) {
    EXPECT_EQ(parse_code(serialize_code(code)), code);
  }
}

TEST(CodeFile, RoundTripRandomCodes) {
  Rng rng(61);
  for (const std::uint32_t q : {2u, 3u, 4u, 5u, 8u}) {
    const auto f = make_field(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 3 + uniform_below(rng, 4);
      const auto code = random_flag_code(random_type(n, rng), f, 1 + uniform_below(rng, 4), rng);
      const std::string text = serialize_code(code);
      const FlagCode back = parse_code(text);
      EXPECT_EQ(back, code);
      EXPECT_EQ(serialize_code(back), text);
    }
  }
}

TEST(CodeFile, CommentsAndLevelsLayout) {
  const FlagCode code = parse_code(
      "# spread\n"
      "flagcode v1\n"
      "\n"
      "q=2 n=4 type=1,2 flags=2\n"
      "flag 1 levels\n"
      "1 0 0 0\n"
      "1 1 0 0\n"
      "0 1 0 0\n"
      "flag 2\n"
      "0 0 1 0\n"
      "0 0 1 1\n");
  EXPECT_EQ(code, spread_example());
}

TEST(CodeFile, NotNestedAtOffendingFlag) {
  const auto e = parse_error(
      "flagcode v1\n"
      "q=2 n=3 type=1,2 flags=2\n"
      "flag 1\n1 0 0\n0 1 0\n"
      "flag 2 levels\n1 0 0\n0 1 0\n0 0 1\n");
  EXPECT_EQ(e.kind(), ErrorKind::NotNested);
  EXPECT_EQ(e.line(), 6u);
  EXPECT_NE(std::string(e.what()).find("flag 2"), std::string::npos);
}

TEST(CodeFile, Rejections) {
  EXPECT_EQ(parse_error("flagcode v1\nq=6 n=3 type=1 flags=1\nflag 1\n1 0 0\n").kind(),
            ErrorKind::NotAPrimePower);
  EXPECT_EQ(parse_error("flagcode v1\nq=6 n=3 type=1 flags=1\nflag 1\n1 0 0\n").line(), 2u);
  EXPECT_EQ(parse_error("flagcode v2\n").kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("").kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("flagcode v1\nq=2 n=3 flags=1\n").kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("flagcode v1\nq=2 n=3 type=1 flags=1\nflag 2\n1 0 0\n").line(), 3u);
  EXPECT_EQ(parse_error("flagcode v1\nq=2 n=3 type=1 flags=1\nflag 1\n1 0\n").line(), 4u);
  EXPECT_EQ(parse_error("flagcode v1\nq=2 n=3 type=1 flags=1\nflag 1\n1 0 2\n").kind(),
            ErrorKind::OutOfRange);
  EXPECT_EQ(parse_error("flagcode v1\nq=2 n=3 type=1 flags=1\nflag 1\n1 0 x\n").kind(),
            ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("flagcode v1\nq=2 n=3 type=2,1 flags=1\nflag 1\n1 0 0\n0 1 0\n").kind(),
            ErrorKind::InvalidDimension);
  EXPECT_EQ(parse_error("flagcode v1\nq=2 n=3 type=1,2 flags=1\nflag 1\n1 0 0\n1 0 0\n").kind(),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(parse_error("flagcode v1\nq=2 n=3 type=1 flags=1\nflag 1\n1 0 0\n0 1 0\n").kind(),
            ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("flagcode v1\nq=2 n=3 type=1 flags=2\nflag 1\n1 0 0\n").kind(),
            ErrorKind::SyntaxError);
}

TEST(ReceivedFile, RoundTripAndZeroLevels) {
  const std::vector<StutteringFlag> xs{
      StutteringFlag({Subspace::zero(f2(), 4), span_units(4, {2})}),
      StutteringFlag({Subspace::zero(f2(), 4), span_units(4, {3})})};
  const std::string text = serialize_received(xs);
  EXPECT_EQ(text, "flagcode v1\nq=2 n=4 rows=0,1 flags=2\nflag 1\n0 1 0 0\nflag 2\n0 0 1 0\n");
  EXPECT_EQ(parse_received(text), xs);
}

TEST(ReceivedFile, Rejections) {
  try {
    parse_received("flagcode v1\nq=2 n=3 rows=1,1 flags=1\nflag 1\n1 0 0\n0 1 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNested);
  }
  EXPECT_THROW(parse_received("flagcode v1\nq=2 n=3 type=1 flags=1\nflag 1\n1 0 0\n"), ParseError);
}

TEST(Files, DataDirectory) {
  const std::filesystem::path dir = FLAGCODES_DATA_DIR;
  EXPECT_EQ(load_code(dir / "spread_type12_n4.flag"), spread_example());
  EXPECT_EQ(load_code(dir / "noncoherent_type123_n5.flag"), noncoherent_example());
  EXPECT_EQ(load_code(dir / "distance_coherent_not_disjoint_n6.flag"), distance_coherent_example());
  EXPECT_EQ(load_code(dir / "equidistant_not_projected_n5.flag"), equidistant_example());
  EXPECT_EQ(load_code(dir / "projected_equidistant_full_n3.flag"), projected_equidistant_example());
  EXPECT_EQ(load_code(dir / "projected_sunflower_n4.flag"), projected_sunflower_example());
  EXPECT_EQ(load_received(dir / "spread_received.flag").size(), 1u);
  try {
    load_code(dir / "missing.flag");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}

}  // namespace
}  // namespace flagcodes
