#include <doctest.h>

#include <random>

#include "flipcox/presentation.hpp"
#include "flipcox/rewrite.hpp"
#include "flipcox/verify.hpp"
#include "flipcox/word.hpp"

using namespace flipcox;

namespace {

// A deliberately tiny hand-rolled presentation: one generator g with g^2 = e.
Presentation cyclic_two() {
  Presentation p;
  p.context = ctx_a(2);
  p.family = Family::Pancake;
  p.generators = {Gen::r(2)};
  p.relators = {Relator{"Q", {}, Word{{Gen::r(2), Gen::r(2)}, p.context}}};
  return p;
}

Word random_generator_word(const Presentation& p, int len, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, p.generators.size() - 1);
  std::vector<Gen> syms;
  syms.reserve(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j)
    syms.push_back(p.generators[pick(rng)]);
  return Word{std::move(syms), p.context};
}

} // namespace

TEST_CASE("completion of the two-element group") {
  const RewriteSystem rs = kb_complete(cyclic_two());
  CHECK(rs.confluent);
  CHECK_FALSE(rs.rule_cap_hit);
  REQUIRE(rs.rules.size() == 1);
  CHECK(rs.rules[0].lhs == Letters{0, 0});
  CHECK(rs.rules[0].rhs == Letters{});
  CHECK(enumerate_normal_forms(rs, 100) == 2);
  CHECK(critical_pairs_resolve(rs));
}

TEST_CASE("completion of the reversal presentation at degree 4") {
  const Presentation p = pancake_presentation(ctx_a(4));
  const RewriteSystem rs = kb_complete(p);
  CHECK(rs.confluent);
  CHECK_FALSE(rs.rule_cap_hit);
  CHECK(enumerate_normal_forms(rs, 100000) == 24);
  CHECK(critical_pairs_resolve(rs));

  // Every rule is a sound identity in the concrete group.
  for (const RewriteRule& r : rs.rules)
    CHECK(eval_word(rs.to_word(r.lhs)) == eval_word(rs.to_word(r.rhs)));
}

TEST_CASE("completion of the swap presentation at degree 4") {
  const RewriteSystem rs = kb_complete(coxeter_presentation(ctx_a(4)));
  CHECK(rs.confluent);
  CHECK(enumerate_normal_forms(rs, 100000) == 24);
  CHECK(critical_pairs_resolve(rs));
}

TEST_CASE("reduce sends relator words to the empty word") {
  const Presentation p = pancake_presentation(ctx_a(4));
  const RewriteSystem rs = kb_complete(p);
  CHECK(reduce(parse_word("r2 r2", p.context), rs).syms.empty());
  CHECK(reduce(parse_word("(r2 r3)^3", p.context), rs).syms.empty());
  for (const Relator& rel : p.relators)
    CHECK(reduce(rel.word, rs).syms.empty());
}

TEST_CASE("reduction preserves the group element and is idempotent") {
  const Presentation p = pancake_presentation(ctx_a(4));
  const RewriteSystem rs = kb_complete(p);
  const int max_len = bfs_order(p.generators, p.context, 1000).diameter();
  std::mt19937 rng(20260821);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_generator_word(p, 50, rng);
    const Word nf = reduce(w, rs);
    CHECK(eval_word(nf) == eval_word(w));
    CHECK(reduce(nf, rs) == nf);
    CHECK(nf.syms.size() <= static_cast<std::size_t>(max_len));
  }
}

TEST_CASE("distinct group elements get distinct normal forms") {
  const Presentation p = pancake_presentation(ctx_a(4));
  const RewriteSystem rs = kb_complete(p);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Word a = random_generator_word(p, 12, rng);
    const Word b = random_generator_word(p, 12, rng);
    const bool same_elem = eval_word(a) == eval_word(b);
    const bool same_nf = reduce(a, rs) == reduce(b, rs);
    CHECK(same_elem == same_nf);
  }
}

TEST_CASE("the completion respects a caller-supplied alphabet order") {
  const Presentation p = pancake_presentation(ctx_a(4));
  std::vector<Gen> reversed(p.generators.rbegin(), p.generators.rend());
  const RewriteSystem rs = kb_complete(p, reversed);
  CHECK(rs.confluent);
  CHECK(rs.alphabet == reversed);
  CHECK(enumerate_normal_forms(rs, 100000) == 24);
  const Word w = parse_word("r2 r3 r2 r3 r2 r3", p.context);
  CHECK(reduce(w, rs).syms.empty());
}

TEST_CASE("rule cap leaves a usable but inconclusive system") {
  const RewriteSystem rs = kb_complete(pancake_presentation(ctx_a(4)), 1);
  CHECK_FALSE(rs.confluent);
  CHECK(rs.rule_cap_hit);
  CHECK_THROWS_AS(enumerate_normal_forms(rs, 1000), NotConfluentError);
  // Reduction still terminates and still preserves evaluation.
  const Word w = parse_word("r2 r2 r3", ctx_a(4));
  CHECK(eval_word(reduce(w, rs)) == eval_word(w));
}

TEST_CASE("normal form enumeration enforces its cap") {
  const RewriteSystem rs = kb_complete(pancake_presentation(ctx_a(4)));
  try {
    enumerate_normal_forms(rs, 5);
    FAIL("expected overflow");
  } catch (const OverflowError& e) {
    CHECK(e.cap() == 5);
  }
}

TEST_CASE("rules survive a json round trip") {
  const Presentation p = pancake_presentation(ctx_a(4));
  const RewriteSystem rs = kb_complete(p);
  const std::string text = rules_to_json(rs);
  const RewriteSystem back = rules_from_json(text, p.context);
  CHECK(back.alphabet == rs.alphabet);
  CHECK(back.rules == rs.rules);
  CHECK(back.confluent == rs.confluent);
  CHECK(back.rule_cap_hit == rs.rule_cap_hit);
  CHECK(enumerate_normal_forms(back, 100000) == 24);
  CHECK_THROWS_AS(rules_from_json("not json", ctx_a(4)), ParseError);
}

TEST_CASE("completion handles a signed context") {
  const Presentation p = pancake_presentation(ctx_d(4));
  const RewriteSystem rs = kb_complete(p, 40000, 64);
  if (rs.confluent) {
    CHECK(enumerate_normal_forms(rs, 100000) == 192);
    CHECK(critical_pairs_resolve(rs));
  } else {
    CHECK(rs.rule_cap_hit);
  }
  std::mt19937 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const Word w = random_generator_word(p, 30, rng);
    CHECK(eval_word(reduce(w, rs)) == eval_word(w));
  }
}
