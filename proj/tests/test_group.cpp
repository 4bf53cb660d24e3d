#include <doctest.h>

#include <random>
#include <unordered_set>

#include "flipcox/group.hpp"
#include "flipcox/word.hpp"

using namespace flipcox;

namespace {

// Every symbol that may appear in words over the given context.
std::vector<Gen> symbol_pool(const GroupContext& ctx) {
  std::vector<Gen> pool;
  const int n = ctx.degree;
  const int first_r = ctx.type == GroupType::B ? 1 : 2;
  for (int k = first_r; k <= n; ++k)
    pool.push_back(Gen::r(k));
  if (ctx.type == GroupType::D && n >= 2)
    pool.push_back(Gen::rbar2());
  for (int i = 1; i <= n - 1; ++i)
    pool.push_back(Gen::s(i));
  if (ctx.type == GroupType::B)
    pool.push_back(Gen::s0());
  if (ctx.type == GroupType::D && n >= 2)
    pool.push_back(Gen::s0p());
  return pool;
}

Word random_word(std::mt19937& rng, const GroupContext& ctx, int len) {
  const std::vector<Gen> pool = symbol_pool(ctx);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Gen> syms;
  for (int t = 0; t < len; ++t)
    syms.push_back(pool[pick(rng)]);
  return Word{std::move(syms), ctx};
}

} // namespace

TEST_CASE("identity window") {
  CHECK(SignedPerm::identity(4).str() == "[1,2,3,4]");
  CHECK(SignedPerm::identity(1).str() == "[1]");
  CHECK_THROWS_AS(SignedPerm::identity(0), Error);
}

TEST_CASE("single flips in each type") {
  CHECK(eval_symbol(Gen::r(3), ctx_a(4)).str() == "[3,2,1,4]");
  CHECK(eval_symbol(Gen::r(3), ctx_b(4)).str() == "[-3,-2,-1,4]");
  CHECK(eval_symbol(Gen::r(1), ctx_b(4)).str() == "[-1,2,3,4]");
  CHECK(eval_symbol(Gen::r(2), ctx_d(4)).str() == "[2,1,3,4]");
  CHECK(eval_symbol(Gen::rbar2(), ctx_d(4)).str() == "[-2,-1,3,4]");
  CHECK(eval_symbol(Gen::s(2), ctx_a(4)).str() == "[1,3,2,4]");
  CHECK(eval_symbol(Gen::s0(), ctx_b(4)).str() == "[-1,2,3,4]");
  CHECK(eval_symbol(Gen::s0p(), ctx_d(4)).str() == "[-2,-1,3,4]");
  CHECK(eval_symbol(Gen::r(4), ctx_a(4)).str() == "[4,3,2,1]");
}

TEST_CASE("apply_flip acts on positions") {
  const SignedPerm p({3, 1, 2});
  CHECK(apply_flip(Gen::r(2), p, ctx_a(3)).str() == "[1,3,2]");
  CHECK(apply_flip(Gen::r(3), p, ctx_a(3)).str() == "[2,1,3]");
  const SignedPerm q({-2, 3, 1});
  CHECK(apply_flip(Gen::r(2), q, ctx_b(3)).str() == "[-3,2,1]");
  CHECK(apply_flip(Gen::s0(), q, ctx_b(3)).str() == "[2,3,1]");
}

TEST_CASE("word evaluation is left to right over positions") {
  const GroupContext a4 = ctx_a(4);
  const SignedPerm lhs = eval_word(parse_word("r3 r2", a4));
  CHECK(lhs.str() == "[2,3,1,4]");
  CHECK(lhs == eval_word(parse_word("s1 s2", a4)));
  CHECK(eval_word(parse_word("", a4)) == SignedPerm::identity(4));
}

TEST_CASE("compose matches word concatenation") {
  const GroupContext a4 = ctx_a(4);
  const SignedPerm r3 = eval_symbol(Gen::r(3), a4);
  const SignedPerm r2 = eval_symbol(Gen::r(2), a4);
  CHECK(compose(r3, r2).str() == "[2,3,1,4]");
  CHECK_THROWS_AS(compose(r3, SignedPerm::identity(3)), DegreeMismatchError);
}

TEST_CASE("inverse") {
  const SignedPerm p({2, 3, 1, 4});
  CHECK(inverse(p).str() == "[3,1,2,4]");
  const SignedPerm q({-3, 1, -2});
  CHECK(inverse(q).str() == "[2,-3,-1]");
  CHECK(compose(q, inverse(q)) == SignedPerm::identity(3));
  CHECK(compose(inverse(q), q) == SignedPerm::identity(3));
}

TEST_CASE("negative_count") {
  CHECK(negative_count(SignedPerm({-2, -1, 3, 4})) == 2);
  CHECK(negative_count(SignedPerm::identity(5)) == 0);
  CHECK(negative_count(SignedPerm({-1})) == 1);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(SignedPerm({1, 1}), Error);
  CHECK_THROWS_AS(SignedPerm({1, -1}), Error);
  CHECK_THROWS_AS(SignedPerm({2}), Error);
  CHECK_THROWS_AS(SignedPerm({0, 1}), Error);
  CHECK_THROWS_AS(SignedPerm(std::vector<int>{}), Error);
  CHECK_NOTHROW(SignedPerm({-2, 1, -3}));
}

TEST_CASE("window parse and render round trip") {
  CHECK(SignedPerm::parse("[3,-1,2]").str() == "[3,-1,2]");
  CHECK(SignedPerm::parse(" [ 1 , 2 ] ").str() == "[1,2]");
  CHECK_THROWS_AS(SignedPerm::parse("3,1,2"), ParseError);
  CHECK_THROWS_AS(SignedPerm::parse("[3 1]"), ParseError);
  CHECK_THROWS_AS(SignedPerm::parse("[]"), ParseError);
  CHECK_THROWS_AS(SignedPerm::parse("[0]"), ParseError);
  CHECK_THROWS_AS(SignedPerm::parse("[1,1]"), ParseError);
  CHECK_THROWS_AS(SignedPerm::parse("[1,2]x"), ParseError);
}

TEST_CASE("symbol validity per context") {
  CHECK(valid_in(Gen::r(2), ctx_a(4)));
  CHECK_FALSE(valid_in(Gen::r(1), ctx_a(4)));
  CHECK_FALSE(valid_in(Gen::r(5), ctx_a(4)));
  CHECK(valid_in(Gen::r(1), ctx_b(4)));
  CHECK_FALSE(valid_in(Gen::rbar2(), ctx_b(4)));
  CHECK(valid_in(Gen::rbar2(), ctx_d(4)));
  CHECK_FALSE(valid_in(Gen::s0(), ctx_a(4)));
  CHECK_FALSE(valid_in(Gen::s0p(), ctx_b(4)));
  CHECK(valid_in(Gen::s(3), ctx_a(4)));
  CHECK_FALSE(valid_in(Gen::s(4), ctx_a(4)));
  CHECK_THROWS_AS(apply_flip(Gen::r(5), SignedPerm::identity(4), ctx_a(4)),
                  InvalidSymbolError);
  CHECK_THROWS_AS(apply_flip(Gen::r(2), SignedPerm::identity(3), ctx_a(4)),
                  DegreeMismatchError);
}

TEST_CASE("hashing supports closure sets") {
  std::unordered_set<SignedPerm, SignedPermHash> set;
  set.insert(SignedPerm({2, 1, 3}));
  set.insert(SignedPerm({2, 1, 3}));
  set.insert(SignedPerm({-2, 1, 3}));
  CHECK(set.size() == 2);
}

TEST_CASE("flips are involutions") {
  std::mt19937 rng(20260821);
  for (GroupType type : {GroupType::A, GroupType::B, GroupType::D}) {
    for (int n = 2; n <= 6; ++n) {
      const GroupContext ctx{type, n};
      SignedPerm p = eval_word(random_word(rng, ctx, 12));
      for (Gen g : symbol_pool(ctx)) {
        CHECK(apply_flip(g, apply_flip(g, p, ctx), ctx) == p);
      }
    }
  }
}

TEST_CASE("apply_flip equals right composition with the flip permutation") {
  std::mt19937 rng(7);
  for (GroupType type : {GroupType::A, GroupType::B, GroupType::D}) {
    const GroupContext ctx{type, 5};
    const SignedPerm p = eval_word(random_word(rng, ctx, 9));
    for (Gen g : symbol_pool(ctx))
      CHECK(apply_flip(g, p, ctx) == compose(p, eval_symbol(g, ctx)));
  }
}

TEST_CASE("evaluation is a homomorphism") {
  std::mt19937 rng(42);
  for (GroupType type : {GroupType::A, GroupType::B, GroupType::D}) {
    for (int n = 2; n <= 8; ++n) {
      const GroupContext ctx{type, n};
      for (int trial = 0; trial < 20; ++trial) {
        const Word u = random_word(rng, ctx, 7);
        const Word v = random_word(rng, ctx, 5);
        Word uv = u;
        uv.syms.insert(uv.syms.end(), v.syms.begin(), v.syms.end());
        CHECK(eval_word(uv) == compose(eval_word(u), eval_word(v)));
      }
    }
  }
}

TEST_CASE("evaluations remain valid signed permutations") {
  std::mt19937 rng(99);
  for (GroupType type : {GroupType::A, GroupType::B, GroupType::D}) {
    const GroupContext ctx{type, 6};
    for (int trial = 0; trial < 50; ++trial) {
      const SignedPerm p = eval_word(random_word(rng, ctx, 30));
      CHECK_NOTHROW(SignedPerm(p.window())); // re-validates
      if (type == GroupType::A)
        CHECK(negative_count(p) == 0);
      if (type == GroupType::D)
        CHECK(negative_count(p) % 2 == 0);
    }
  }
}
