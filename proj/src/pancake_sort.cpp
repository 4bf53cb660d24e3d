#include "flipcox/pancake_sort.hpp"

#include <algorithm>

#include <json.hpp>

#include "flipcox/word.hpp"

namespace flipcox {

SortCertificate greedy_sort(const SignedPerm& p, const GroupContext& ctx) {
  if (ctx.type == GroupType::D)
    throw InvalidContextError(
        "sorting by prefix reversals is defined for types A and B only");
  if (p.degree() != ctx.degree)
    throw DegreeMismatchError("input degree " + std::to_string(p.degree()) +
                              " does not match context " + to_string(ctx));
  const bool signed_flips = ctx.type == GroupType::B;
  if (!signed_flips)
    for (int v : p.window())
      if (v < 0)
        throw SignedEntryError("entry " + std::to_string(v) +
                               " is signed but the context is type A");

  const int n = ctx.degree;
  std::vector<int> w = p.window();
  std::vector<Gen> syms;
  auto flip = [&](int k) {
    std::reverse(w.begin(), w.begin() + k);
    if (signed_flips)
      for (int j = 0; j < k; ++j)
        w[static_cast<std::size_t>(j)] = -w[static_cast<std::size_t>(j)];
    syms.push_back(Gen::r(k));
  };

  // Settle magnitudes n, n-1, ..., 1: bring the target to the front, then
  // drop it into place. In type B the front is negated first if needed so
  // the final flip lands it positive.
  for (int m = n; m >= 1; --m) {
    int pos = 0;
    for (int j = 0; j < n; ++j)
      if (std::abs(w[static_cast<std::size_t>(j)]) == m) {
        pos = j + 1;
        break;
      }
    if (pos == m && w[static_cast<std::size_t>(m - 1)] == m)
      continue;
    if (pos > 1)
      flip(pos);
    if (signed_flips && w[0] == m)
      flip(1);
    flip(m);
  }

  SortCertificate cert;
  cert.input = p;
  cert.word = Word{std::move(syms), ctx};
  cert.flip_count = static_cast<int>(cert.word.syms.size());
  return cert;
}

bool verify_certificate(const SortCertificate& c, const GroupContext& ctx) {
  try {
    SignedPerm acc = c.input;
    for (Gen g : c.word.syms)
      acc = apply_flip(g, acc, ctx);
    return acc == SignedPerm::identity(ctx.degree);
  } catch (const Error&) {
    return false;
  }
}

std::string certificate_to_json(const SortCertificate& c) {
  nlohmann::ordered_json j;
  j["input"] = c.input.window();
  auto w = nlohmann::ordered_json::array();
  for (Gen g : c.word.syms)
    w.push_back(to_token(g));
  j["word"] = std::move(w);
  j["flip_count"] = c.flip_count;
  return j.dump(2) + "\n";
}

} // namespace flipcox
