#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "polyrep/teletype.hpp"

using namespace polyrep;

namespace {

std::string read_golden(std::string const& name) {
  std::ifstream in(std::string(POLYREP_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Every string of length <= n over the alphabet.
std::vector<std::u32string> scripts(std::u32string const& alphabet, std::size_t n) {
  std::vector<std::u32string> out{U""};
  for (std::size_t i = 0, layer = 0; i < n; ++i) {
    auto const end = out.size();
    for (auto j = layer; j < end; ++j)
      for (Char c : alphabet) out.push_back(out[j] + c);
    layer = end;
  }
  return out;
}

}  // namespace

TEST(Codec, EscapesRoundTrip) {
  std::u32string const chars = U"a\n\r\t\\λ€😀 ";
  EXPECT_EQ(parse_script(format_script(chars)), chars);
  std::vector<TTEvent> const log{{TTEvent::Kind::in, U'\\'}, {TTEvent::Kind::out, U'\n'}, {TTEvent::Kind::in, U'é'}};
  EXPECT_EQ(format_log(log), "IN \\\\\nOUT \\n\nIN \xC3\xA9\n");
  EXPECT_EQ(parse_log(format_log(log)), log);
}

TEST(Codec, ScriptSkipsEmptyLines) {
  EXPECT_EQ(parse_script("a\n\nb\n"), U"ab");
  EXPECT_EQ(parse_script("a\nb"), U"ab");
  EXPECT_EQ(parse_script(""), U"");
}

TEST(Codec, MalformedInputIsRejected) {
  EXPECT_THROW(parse_script("ab\n"), FormatError);
  EXPECT_THROW(parse_script("\\q\n"), FormatError);
  EXPECT_THROW(parse_script("\xFF\n"), FormatError);
  EXPECT_THROW(parse_log("IN a\nSAY b\n"), FormatError);
  try {
    parse_log("IN a\nSAY b\n");
  } catch (FormatError const& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Codec, Utf8) {
  EXPECT_EQ(encode_utf8(U"aλ€😀"), "a\xCE\xBB\xE2\x82\xAC\xF0\x9F\x98\x80");
  EXPECT_EQ(decode_utf8("a\xCE\xBB\xE2\x82\xAC\xF0\x9F\x98\x80"), U"aλ€😀");
}

TEST(Teletype, EchoThreeOnAbc) {
  auto const run = run_pure(echo_n(3), U"abc");
  ASSERT_TRUE(run.result);
  std::vector<TTEvent> const expected{{TTEvent::Kind::in, U'a'}, {TTEvent::Kind::out, U'a'},
                                      {TTEvent::Kind::in, U'b'}, {TTEvent::Kind::out, U'b'},
                                      {TTEvent::Kind::in, U'c'}, {TTEvent::Kind::out, U'c'}};
  EXPECT_EQ(run.log, expected);
  EXPECT_EQ(format_log(run.log), "IN a\nOUT a\nIN b\nOUT b\nIN c\nOUT c\n");
  EXPECT_EQ(format_log(run_replay(echo_n(3), U"abc").log), read_golden("echo3_abc.log"));
  EXPECT_EQ(parse_script(read_golden("abc.script")), U"abc");
}

TEST(Teletype, EchoZeroDoesNothing) {
  EXPECT_TRUE(run_replay(echo_n(0), U"").log.empty());
  auto const run = run_pure(echo_n(0), U"xy");
  EXPECT_TRUE(run.log.empty());
  EXPECT_EQ(run.leftover, U"xy");
}

TEST(Teletype, ReplayExhausted) {
  try {
    run_replay(echo_n(2), U"a");
    FAIL() << "expected ScriptExhausted";
  } catch (ScriptExhausted const& e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(Teletype, PureLeavesUnconsumedInput) {
  auto const run = run_pure(echo_n(2), U"xyz");
  ASSERT_TRUE(run.result);
  EXPECT_EQ(run.output, U"xy");
  EXPECT_EQ(run.leftover, U"z");
  auto const id = run_pure(teletype_identity(), U"xyz");
  EXPECT_EQ(id.leftover, U"xyz");
  EXPECT_TRUE(id.output.empty());
}

TEST(Teletype, EchoUntilStops) {
  auto const run = run_pure(echo_until(U'.', 10), U"ab.c");
  ASSERT_TRUE(run.result);
  EXPECT_EQ(*run.result, 2u);
  EXPECT_EQ(run.output, U"ab");
  EXPECT_EQ(run.leftover, U"c");
}

TEST(Teletype, ReplayAgreesWithPureOnShortScripts) {
  auto const all = scripts(U"ab", 3);
  ASSERT_EQ(all.size(), 15u);
  for (auto const& s : all)
    for (std::size_t n = 0; n <= 3; ++n) {
      auto const pure = run_pure(echo_n(n), s);
      if (n > s.size()) {
        EXPECT_FALSE(pure.result);
        EXPECT_THROW(run_replay(echo_n(n), s), ScriptExhausted);
        continue;
      }
      auto const replay = run_replay(echo_n(n), s);
      EXPECT_EQ(output_of(replay.log), pure.output);
      EXPECT_EQ(replay.log, pure.log);
      EXPECT_EQ(script_from_log(replay.log), s.substr(0, n));
    }
}

TEST(Teletype, FreeInterpreterAgrees) {
  for (auto const& s : scripts(U"ab", 3))
    for (std::size_t n = 0; n <= 3; ++n) {
      auto const direct = run_pure(echo_n(n), s);
      auto const via_free = run_pure_via_free(echo_n(n), s);
      EXPECT_EQ(direct.result.has_value(), via_free.result.has_value());
      EXPECT_EQ(direct.log, via_free.log);
      EXPECT_EQ(direct.leftover, via_free.leftover);
    }
}

TEST(Teletype, ConsoleEcho) {
  std::istringstream in("a");
  std::ostringstream out;
  run_console(echo_n(1), in, out);
  EXPECT_EQ(out.str(), "a");
  std::istringstream short_in("a");
  std::ostringstream ignored;
  EXPECT_THROW(run_console(echo_n(2), short_in, ignored), EndOfInput);
}

TEST(Teletype, LoggingReplaysToSameOutput) {
  std::istringstream in("h\xC3\xA9y");
  std::ostringstream out;
  auto const logged = run_logging(echo_n(3), in, out);
  ASSERT_TRUE(logged.result);
  EXPECT_EQ(out.str(), "h\xC3\xA9y");
  auto const replay = run_replay(echo_n(3), script_from_log(logged.log));
  EXPECT_EQ(replay.log, logged.log);
  EXPECT_EQ(encode_utf8(output_of(replay.log)), out.str());

  std::istringstream none("");
  std::ostringstream nothing;
  auto const empty = run_logging(teletype_identity(), none, nothing);
  EXPECT_TRUE(empty.result);
  EXPECT_TRUE(empty.log.empty());

  std::istringstream early("x");
  std::ostringstream partial;
  auto const cut = run_logging(echo_n(2), early, partial);
  EXPECT_FALSE(cut.result);
  EXPECT_EQ(format_log(cut.log), "IN x\nOUT x\n");
}
