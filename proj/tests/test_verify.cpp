#include <doctest.h>

#include <algorithm>
#include <set>

#include "flipcox/presentation.hpp"
#include "flipcox/verify.hpp"
#include "flipcox/word.hpp"

using namespace flipcox;

namespace {

std::set<SignedPerm> element_set(const CayleyClosure& c) {
  return {c.elements.begin(), c.elements.end()};
}

} // namespace

TEST_CASE("check_relators accepts the shipped presentations") {
  const VerificationReport rep = check_relators(pancake_presentation(ctx_a(4)));
  CHECK(rep.ok());
  CHECK(rep.relators_checked == 8);
  CHECK(rep.relators_failed.empty());
  CHECK(rep.family == Family::Pancake);
  CHECK(check_relators(pancake_presentation(ctx_a(5))).relators_checked == 14);
  CHECK(check_relators(pancake_presentation(ctx_b(4))).relators_checked == 16);
}

TEST_CASE("check_relators flags a truncated relator with its label") {
  Presentation p = pancake_presentation(ctx_a(4));
  auto it = std::find_if(p.relators.begin(), p.relators.end(),
                         [](const Relator& r) { return r.label == "R2"; });
  REQUIRE(it != p.relators.end());
  it->word.syms.pop_back(); // one symbol short of a full power
  const VerificationReport rep = check_relators(p);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.relators_failed.size() == 1);
  CHECK(rep.relators_failed[0].label == "R2");
  CHECK_FALSE(rep.relators_failed[0].evaluated ==
              SignedPerm::identity(4));
}

TEST_CASE("bfs_order finds the full group") {
  const CayleyClosure a4 =
      bfs_order(pancake_presentation(ctx_a(4)).generators, ctx_a(4), 1000);
  CHECK(a4.elements.size() == 24);
  CHECK(a4.level_sizes == std::vector<std::uint64_t>{1, 3, 6, 11, 3});
  CHECK(a4.diameter() == 4);
  CHECK(a4.edge_count == 36);

  const CayleyClosure b4 =
      bfs_order(pancake_presentation(ctx_b(4)).generators, ctx_b(4), 10000);
  CHECK(b4.elements.size() == 384);
  const CayleyClosure d4 =
      bfs_order(pancake_presentation(ctx_d(4)).generators, ctx_d(4), 10000);
  CHECK(d4.elements.size() == 192);

  // Burnt stacks of two: 8 elements, worst case four flips.
  const CayleyClosure b2 = bfs_order({Gen::r(1), Gen::r(2)}, ctx_b(2), 100);
  CHECK(b2.elements.size() == 8);
  CHECK(b2.diameter() == 4);
}

TEST_CASE("both generating sets close over the same elements") {
  for (GroupType t : {GroupType::A, GroupType::B, GroupType::D}) {
    const GroupContext ctx{t, 4};
    const auto flips =
        bfs_order(pancake_presentation(ctx).generators, ctx, 10000);
    const auto swaps =
        bfs_order(coxeter_presentation(ctx).generators, ctx, 10000);
    CHECK(flips.elements.size() == swaps.elements.size());
    CHECK(element_set(flips) == element_set(swaps));
  }
}

TEST_CASE("the type D group is the even-sign half of type B") {
  const auto d4 = bfs_order(pancake_presentation(ctx_d(4)).generators,
                            ctx_d(4), 10000);
  const auto b4 = bfs_order(pancake_presentation(ctx_b(4)).generators,
                            ctx_b(4), 10000);
  std::set<SignedPerm> even;
  for (const SignedPerm& p : b4.elements)
    if (negative_count(p) % 2 == 0)
      even.insert(p);
  CHECK(even.size() == 192);
  CHECK(element_set(d4) == even);
}

TEST_CASE("bfs_order output is deterministic") {
  const auto gens = pancake_presentation(ctx_a(5)).generators;
  const auto first = bfs_order(gens, ctx_a(5), 1000);
  const auto second = bfs_order(gens, ctx_a(5), 1000);
  CHECK(first.elements == second.elements);
  CHECK(first.level_sizes == second.level_sizes);
  CHECK(first.elements.size() == 120);
  CHECK(first.elements[0] == SignedPerm::identity(5));
}

TEST_CASE("bfs_order enforces its cap") {
  try {
    bfs_order(pancake_presentation(ctx_a(4)).generators, ctx_a(4), 10);
    FAIL("expected overflow");
  } catch (const OverflowError& e) {
    CHECK(e.cap() == 10);
  }
}

TEST_CASE("check_order compares against the closed-form order") {
  const VerificationReport a = check_order(pancake_presentation(ctx_a(4)), 1000);
  CHECK(a.ok());
  CHECK(*a.order_found == 24);
  CHECK(*a.order_expected == 24);
  CHECK(*check_order(pancake_presentation(ctx_b(4)), 10000).order_found == 384);
  CHECK(*check_order(coxeter_presentation(ctx_d(4)), 10000).order_found == 192);
}

TEST_CASE("identity suite sizes are stable") {
  CHECK(lemma_identities(ctx_a(4)).size() == 18);
  CHECK(lemma_identities(ctx_b(4)).size() == 16);
  CHECK(lemma_identities(ctx_d(4)).size() == 4);
  CHECK_THROWS_AS(lemma_identities(ctx_a(3)), DegreeTooSmallError);
}

TEST_CASE("identity suite holds across degrees") {
  for (GroupType t : {GroupType::A, GroupType::B, GroupType::D}) {
    for (int n = 4; n <= 6; ++n) {
      const GroupContext ctx{t, n};
      const VerificationReport rep = check_lemma_identities(ctx);
      CHECK(rep.ok());
      CHECK(rep.identities_failed.empty());
      CHECK(rep.identities_checked ==
            static_cast<int>(lemma_identities(ctx).size()));
    }
  }
}

TEST_CASE("spot-check individual identities") {
  // Conjugating the three-element reversal by a longer one gives a swap.
  CHECK(eval_word(parse_word("r4 r3 r4", ctx_a(4))) ==
        eval_word(parse_word("s2 s3 s2", ctx_a(4))));
  // A signed reversal expands into descending runs of swaps and a sign.
  CHECK(eval_word(parse_word("r2", ctx_b(4))) ==
        eval_word(parse_word("s0 s1 s0", ctx_b(4))));
  // Swaps acting beyond the reversed prefix commute with it.
  CHECK(eval_word(parse_word("s3 r2", ctx_a(4))) ==
        eval_word(parse_word("r2 s3", ctx_a(4))));
  // A swap inside the prefix hops across the reversal, reflected.
  CHECK(eval_word(parse_word("s1 r3", ctx_a(4))) ==
        eval_word(parse_word("r3 s2", ctx_a(4))));
}

TEST_CASE("report json carries the verdict") {
  const std::string good =
      report_to_json(check_relators(pancake_presentation(ctx_a(4))));
  CHECK(good.find("\"ok\": true") != std::string::npos);
  CHECK(good.find("\"relators_checked\": 8") != std::string::npos);

  Presentation p = pancake_presentation(ctx_a(4));
  p.relators[0].word.syms.pop_back();
  const std::string bad = report_to_json(check_relators(p));
  CHECK(bad.find("\"ok\": false") != std::string::npos);
  CHECK(bad.find("\"label\": \"R1\"") != std::string::npos);

  const std::string order =
      report_to_json(check_order(pancake_presentation(ctx_a(4)), 1000));
  CHECK(order.find("\"order_found\": 24") != std::string::npos);
  CHECK(order.find("\"order_expected\": 24") != std::string::npos);
}
