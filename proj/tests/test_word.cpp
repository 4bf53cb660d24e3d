#include <doctest.h>

#include "flipcox/group.hpp"
#include "flipcox/word.hpp"

using namespace flipcox;

TEST_CASE("plain token sequences") {
  const GroupContext a4 = ctx_a(4);
  const Word w = parse_word("r2 r3 r4", a4);
  REQUIRE(w.syms.size() == 3);
  CHECK(w.syms[0] == Gen::r(2));
  CHECK(w.syms[2] == Gen::r(4));
  CHECK(render(w) == "r2 r3 r4");
  CHECK(parse_word("", a4).syms.empty());
  CHECK(parse_word("   ", a4).syms.empty());
  CHECK(render(parse_word("", a4)) == "");
}

TEST_CASE("token families") {
  CHECK(parse_word("rb2", ctx_d(4)).syms[0] == Gen::rbar2());
  CHECK(parse_word("s0p", ctx_d(4)).syms[0] == Gen::s0p());
  CHECK(parse_word("s0", ctx_b(4)).syms[0] == Gen::s0());
  CHECK(parse_word("s3", ctx_a(4)).syms[0] == Gen::s(3));
  CHECK(parse_word("r10", ctx_a(12)).syms[0] == Gen::r(10));
  CHECK(render(parse_word("rb2 r2 s0p s1", ctx_d(4))) == "rb2 r2 s0p s1");
}

TEST_CASE("powers expand at parse time") {
  const GroupContext a4 = ctx_a(4);
  CHECK(render(parse_word("(r2 r3)^3", a4)) == "r2 r3 r2 r3 r2 r3");
  CHECK(render(parse_word("(r2 r3)^1", a4)) == "r2 r3");
  CHECK(render(parse_word("((r2)^2 r3)^2", a4)) == "r2 r2 r3 r2 r2 r3");
  CHECK(render(parse_word("( r2 r3 ) ^ 2", a4)) == "r2 r3 r2 r3");
  CHECK(render(parse_word("r4 (r2)^2 r4", a4)) == "r4 r2 r2 r4");
}

TEST_CASE("syntax errors carry a position") {
  const GroupContext a4 = ctx_a(4);
  CHECK_THROWS_AS(parse_word("(r2", a4), ParseError);
  CHECK_THROWS_AS(parse_word("r2)", a4), ParseError);
  CHECK_THROWS_AS(parse_word("(r2 r3)", a4), ParseError);
  CHECK_THROWS_AS(parse_word("(r2)^0", a4), ParseError);
  CHECK_THROWS_AS(parse_word("(r2)^", a4), ParseError);
  CHECK_THROWS_AS(parse_word("^2", a4), ParseError);
  CHECK_THROWS_AS(parse_word("r02", a4), ParseError);
  CHECK_THROWS_AS(parse_word("q3", a4), ParseError);
  CHECK_THROWS_AS(parse_word("r", a4), ParseError);
  CHECK_THROWS_AS(parse_word("r2x", a4), ParseError);
  try {
    parse_word("r2 (r3", a4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("symbols outside the context are rejected") {
  CHECK_THROWS_AS(parse_word("r1", ctx_a(4)), InvalidSymbolError);
  CHECK_THROWS_AS(parse_word("r7", ctx_a(4)), InvalidSymbolError);
  CHECK_THROWS_AS(parse_word("s0", ctx_a(4)), InvalidSymbolError);
  CHECK_THROWS_AS(parse_word("rb2", ctx_a(4)), InvalidSymbolError);
  CHECK_THROWS_AS(parse_word("s0p", ctx_b(4)), InvalidSymbolError);
  CHECK_THROWS_AS(parse_word("s4", ctx_a(4)), InvalidSymbolError);
  CHECK_NOTHROW(parse_word("r1", ctx_b(4)));
}

TEST_CASE("parse then render is stable") {
  const GroupContext b5 = ctx_b(5);
  const std::string text = "r1 r2 r1 r5 s0 s4 r3";
  CHECK(render(parse_word(text, b5)) == text);
  // Rendered output re-parses to the same word.
  const Word w = parse_word("(r1 (r2 r3)^2)^3 s0", b5);
  CHECK(parse_word(render(w), b5) == w);
}
