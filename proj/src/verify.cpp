#include "flipcox/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

#include "flipcox/word.hpp"

namespace flipcox {

namespace {

nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(UINT64_MAX))
    return v.convert_to<std::uint64_t>();
  return v.str();
}

} // namespace

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["context"] = {{"group_type", std::string(1, group_type_letter(r.context.type))},
                  {"degree", r.context.degree}};
  if (r.family)
    j["family"] = family_name(*r.family);
  j["relators_checked"] = r.relators_checked;
  auto rf = nlohmann::ordered_json::array();
  for (const auto& f : r.relators_failed) {
    nlohmann::ordered_json e;
    e["label"] = f.label;
    e["indices"] = f.indices;
    e["word"] = render(f.word);
    e["evaluated"] = f.evaluated.str();
    rf.push_back(std::move(e));
  }
  j["relators_failed"] = std::move(rf);
  j["identities_checked"] = r.identities_checked;
  auto idf = nlohmann::ordered_json::array();
  for (const auto& f : r.identities_failed) {
    nlohmann::ordered_json e;
    e["name"] = f.name;
    e["indices"] = f.indices;
    idf.push_back(std::move(e));
  }
  j["identities_failed"] = std::move(idf);
  if (r.order_found)
    j["order_found"] = big_to_json(*r.order_found);
  if (r.order_expected)
    j["order_expected"] = big_to_json(*r.order_expected);
  j["ok"] = r.ok();
  return j.dump(2) + "\n";
}

VerificationReport check_relators(const Presentation& p) {
  VerificationReport rep;
  rep.context = p.context;
  rep.family = p.family;
  const SignedPerm id = SignedPerm::identity(p.context.degree);
  for (const Relator& rel : p.relators) {
    ++rep.relators_checked;
    const SignedPerm got = eval_word(rel.word);
    if (!(got == id))
      rep.relators_failed.push_back(
          RelatorFailure{rel.label, rel.indices, rel.word, got});
  }
  return rep;
}

CayleyClosure bfs_order(const std::vector<Gen>& generators,
                        const GroupContext& ctx, std::uint64_t cap) {
  for (Gen g : generators)
    require_valid(g, ctx);
  if (cap < 1)
    throw Error("closure cap must be at least 1");

  CayleyClosure out;
  out.context = ctx;
  out.generators = generators;

  std::unordered_set<SignedPerm, SignedPermHash> seen;
  std::vector<SignedPerm> frontier{SignedPerm::identity(ctx.degree)};
  seen.insert(frontier.front());

  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    out.level_sizes.push_back(frontier.size());
    std::vector<SignedPerm> next;
    for (const SignedPerm& x : frontier) {
      for (Gen g : generators) {
        SignedPerm y = apply_flip(g, x, ctx);
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw OverflowError("group closure exceeded cap of " +
                                    std::to_string(cap) + " elements",
                                cap);
          next.push_back(std::move(y));
        }
      }
    }
    out.elements.insert(out.elements.end(), frontier.begin(), frontier.end());
    frontier = std::move(next);
  }
  // Every element contributes one endpoint per generator, and each edge has
  // two endpoints (flips are involutions, so edges are undirected pairs).
  out.edge_count = out.elements.size() * generators.size() / 2;
  return out;
}

VerificationReport check_order(const Presentation& p, std::uint64_t cap) {
  VerificationReport rep;
  rep.context = p.context;
  rep.family = p.family;
  const CayleyClosure closure = bfs_order(p.generators, p.context, cap);
  rep.order_found = BigInt(closure.elements.size());
  rep.order_expected = expected_order(p.context);
  return rep;
}

// --- consequence identities ------------------------------------------------

namespace {

void require_lemma_degree(const GroupContext& ctx) {
  if (ctx.degree <= 3)
    throw DegreeTooSmallError("identity suite for " + to_string(ctx) +
                              " requires degree > 3 (got " +
                              std::to_string(ctx.degree) + ")");
}

struct IdBuilder {
  GroupContext ctx;
  std::vector<LemmaIdentity> out;

  void add(const char* name, std::vector<int> idx, std::vector<Gen> lhs,
           std::vector<Gen> rhs) {
    out.push_back(LemmaIdentity{name, std::move(idx), Word{std::move(lhs), ctx},
                                Word{std::move(rhs), ctx}});
  }
};

// s_t s_{t-1} ... s_bottom appended to syms; bottom may be 0 in type B,
// where index 0 means the sign generator s_0.
void append_descending_b(std::vector<Gen>& syms, int t) {
  for (int i = t; i >= 0; --i)
    syms.push_back(i == 0 ? Gen::s0() : Gen::s(i));
}

std::vector<LemmaIdentity> identities_a(const GroupContext& ctx) {
  const int n = ctx.degree;
  IdBuilder b{ctx, {}};
  for (int i = 2; i <= n; ++i)
    b.add("s-from-r", {i}, {Gen::s(i - 1)},
          {Gen::r(i), Gen::r(2), Gen::r(i)});
  for (int k = 2; k <= n; ++k) {
    std::vector<Gen> rhs;
    for (int t = 1; t <= k - 1; ++t)
      for (int i = t; i >= 1; --i)
        rhs.push_back(Gen::s(i));
    b.add("r-expansion", {k}, {Gen::r(k)}, std::move(rhs));
  }
  for (int k = 2; k <= n - 1; ++k) {
    std::vector<Gen> rhs;
    for (int i = 1; i <= k; ++i)
      rhs.push_back(Gen::s(i));
    b.add("adjacent-pair", {k}, {Gen::r(k + 1), Gen::r(k)}, std::move(rhs));
  }
  for (int k = 2; k <= n - 2; ++k) {
    std::vector<Gen> rhs;
    for (int i = 1; i <= k + 1; ++i)
      rhs.push_back(Gen::s(i));
    for (int i = 1; i <= k; ++i)
      rhs.push_back(Gen::s(i));
    b.add("skip-pair", {k}, {Gen::r(k + 2), Gen::r(k)}, std::move(rhs));
  }
  for (int k = 3; k <= n; ++k)
    b.add("mid-conjugate", {k}, {Gen::r(k), Gen::r(3), Gen::r(k)},
          {Gen::s(k - 2), Gen::s(k - 1), Gen::s(k - 2)});
  for (int j = 2; j <= n - 1; ++j)
    for (int i = 2; i <= j - 1; ++i)
      b.add("disjoint-commute", {j, i}, {Gen::s(j), Gen::r(i)},
            {Gen::r(i), Gen::s(j)});
  for (int l = 2; l <= n; ++l)
    for (int k = 1; k <= l - 1; ++k)
      b.add("reversal-shift", {l, k}, {Gen::s(k), Gen::r(l)},
            {Gen::r(l), Gen::s(l - k)});
  return std::move(b.out);
}

std::vector<LemmaIdentity> identities_b(const GroupContext& ctx) {
  const int n = ctx.degree;
  IdBuilder b{ctx, {}};
  b.add("s0-from-r", {}, {Gen::s0()}, {Gen::r(1)});
  for (int i = 2; i <= n; ++i)
    b.add("s-from-r", {i}, {Gen::s(i - 1)},
          {Gen::r(i), Gen::r(1), Gen::r(2), Gen::r(1), Gen::r(i)});
  {
    std::vector<Gen> lhs;
    for (int t = 0; t < 3; ++t) {
      lhs.push_back(Gen::r(2));
      lhs.push_back(Gen::r(3));
      lhs.push_back(Gen::r(1));
    }
    b.add("r231-cube", {}, std::move(lhs), {});
  }
  for (int k = 1; k <= n; ++k) {
    std::vector<Gen> rhs;
    for (int t = 0; t <= k - 1; ++t)
      append_descending_b(rhs, t);
    b.add("r-expansion", {k}, {Gen::r(k)}, std::move(rhs));
  }
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      b.add("disjoint-commute", {i, j}, {Gen::s(j), Gen::r(i)},
            {Gen::r(i), Gen::s(j)});
  for (int l = 2; l <= n; ++l)
    for (int k = 1; k <= l - 1; ++k)
      b.add("reversal-shift", {l, k}, {Gen::s(k), Gen::r(l)},
            {Gen::r(l), Gen::s(l - k)});
  return std::move(b.out);
}

std::vector<LemmaIdentity> identities_d(const GroupContext& ctx) {
  const int n = ctx.degree;
  IdBuilder b{ctx, {}};
  b.add("s0p-from-rb2", {}, {Gen::s0p()}, {Gen::rbar2()});
  for (int i = 2; i <= n; ++i)
    b.add("s-from-r", {i}, {Gen::s(i - 1)},
          {Gen::r(i), Gen::r(2), Gen::r(i)});
  return std::move(b.out);
}

} // namespace

std::vector<LemmaIdentity> lemma_identities(const GroupContext& ctx) {
  require_lemma_degree(ctx);
  switch (ctx.type) {
  case GroupType::A:
    return identities_a(ctx);
  case GroupType::B:
    return identities_b(ctx);
  case GroupType::D:
    return identities_d(ctx);
  }
  return {};
}

VerificationReport check_lemma_identities(const GroupContext& ctx) {
  VerificationReport rep;
  rep.context = ctx;
  for (const LemmaIdentity& id : lemma_identities(ctx)) {
    ++rep.identities_checked;
    if (!(eval_word(id.lhs) == eval_word(id.rhs)))
      rep.identities_failed.push_back(IdentityFailure{id.name, id.indices});
  }
  return rep;
}

} // namespace flipcox
