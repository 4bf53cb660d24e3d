#include "flipcox/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace flipcox {

char group_type_letter(GroupType t) {
  switch (t) {
  case GroupType::A:
    return 'A';
  case GroupType::B:
    return 'B';
  case GroupType::D:
    return 'D';
  }
  return '?';
}

GroupType group_type_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
  case 'A':
    return GroupType::A;
  case 'B':
    return GroupType::B;
  case 'D':
    return GroupType::D;
  default:
    throw InvalidContextError(std::string("unknown group type '") + c +
                              "' (expected A, B or D)");
  }
}

std::string to_string(const GroupContext& ctx) {
  std::string s(1, group_type_letter(ctx.type));
  s += std::to_string(ctx.degree);
  return s;
}

std::string to_token(Gen g) {
  switch (g.family) {
  case GenFamily::R:
    return "r" + std::to_string(g.index);
  case GenFamily::RBar2:
    return "rb2";
  case GenFamily::S:
    return "s" + std::to_string(g.index);
  case GenFamily::S0:
    return "s0";
  case GenFamily::S0Prime:
    return "s0p";
  }
  return "?";
}

bool valid_in(Gen g, const GroupContext& ctx) {
  const int n = ctx.degree;
  if (n < 1)
    return false;
  switch (g.family) {
  case GenFamily::R:
    // The width-1 reversal only does something when reversals negate, so it
    // is a generator symbol in type B only.
    if (ctx.type == GroupType::B)
      return g.index >= 1 && g.index <= n;
    return g.index >= 2 && g.index <= n;
  case GenFamily::RBar2:
    return ctx.type == GroupType::D && n >= 2;
  case GenFamily::S:
    return g.index >= 1 && g.index <= n - 1;
  case GenFamily::S0:
    return ctx.type == GroupType::B;
  case GenFamily::S0Prime:
    return ctx.type == GroupType::D && n >= 2;
  }
  return false;
}

void require_valid(Gen g, const GroupContext& ctx) {
  if (!valid_in(g, ctx))
    throw InvalidSymbolError("symbol " + to_token(g) + " is not valid in " +
                             to_string(ctx));
}

// --- SignedPerm ------------------------------------------------------------

SignedPerm::SignedPerm(std::vector<int> window) : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  if (n == 0)
    throw Error("window must have at least one entry");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : window_) {
    const int a = v < 0 ? -v : v;
    if (v == 0 || a > n)
      throw Error("window entry " + std::to_string(v) +
                  " out of range for degree " + std::to_string(n));
    if (seen[static_cast<std::size_t>(a - 1)])
      throw Error("window repeats magnitude " + std::to_string(a));
    seen[static_cast<std::size_t>(a - 1)] = true;
  }
}

SignedPerm SignedPerm::identity(int degree) {
  if (degree < 1)
    throw Error("degree must be at least 1");
  std::vector<int> w(static_cast<std::size_t>(degree));
  for (int j = 0; j < degree; ++j)
    w[static_cast<std::size_t>(j)] = j + 1;
  return SignedPerm(unchecked_t{}, std::move(w));
}

SignedPerm SignedPerm::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw ParseError("expected '[' to open a window", i);
  ++i;
  std::vector<int> entries;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    throw ParseError("window must have at least one entry", i);
  }
  while (true) {
    skip_ws();
    const std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
      ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0 || digits > 9)
      throw ParseError("expected a window entry", start);
    entries.push_back(std::atoi(text.substr(start, i - start).c_str()));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    throw ParseError("expected ',' or ']' in window", i);
  }
  skip_ws();
  if (i != text.size())
    throw ParseError("trailing characters after window", i);
  try {
    return SignedPerm(std::move(entries));
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < window_.size(); ++j) {
    if (j)
      os << ',';
    os << window_[j];
  }
  os << ']';
  return os.str();
}

std::size_t SignedPermHash::operator()(const SignedPerm& p) const {
  // FNV-1a over the window entries.
  std::uint64_t h = 1469598103934665603ull;
  for (int v : p.window()) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

SignedPerm compose(const SignedPerm& p, const SignedPerm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError("cannot compose degree " +
                              std::to_string(p.degree()) + " with degree " +
                              std::to_string(q.degree()));
  const auto& pw = p.window();
  const auto& qw = q.window();
  std::vector<int> out(qw.size());
  for (std::size_t j = 0; j < qw.size(); ++j) {
    const int v = qw[j];
    out[j] = v > 0 ? pw[static_cast<std::size_t>(v - 1)]
                   : -pw[static_cast<std::size_t>(-v - 1)];
  }
  return SignedPerm(SignedPerm::unchecked_t{}, std::move(out));
}

SignedPerm inverse(const SignedPerm& p) {
  const auto& pw = p.window();
  std::vector<int> out(pw.size());
  for (std::size_t j = 0; j < pw.size(); ++j) {
    const int v = pw[j];
    if (v > 0)
      out[static_cast<std::size_t>(v - 1)] = static_cast<int>(j) + 1;
    else
      out[static_cast<std::size_t>(-v - 1)] = -(static_cast<int>(j) + 1);
  }
  return SignedPerm(SignedPerm::unchecked_t{}, std::move(out));
}

int negative_count(const SignedPerm& p) {
  int c = 0;
  for (int v : p.window())
    if (v < 0)
      ++c;
  return c;
}

// --- evaluation ------------------------------------------------------------

SignedPerm eval_symbol(Gen g, const GroupContext& ctx) {
  return apply_flip(g, SignedPerm::identity(ctx.degree), ctx);
}

SignedPerm apply_flip(Gen g, const SignedPerm& p, const GroupContext& ctx) {
  require_valid(g, ctx);
  if (p.degree() != ctx.degree)
    throw DegreeMismatchError("element degree " + std::to_string(p.degree()) +
                              " does not match context " + to_string(ctx));
  std::vector<int> w = p.window();
  switch (g.family) {
  case GenFamily::R: {
    const int k = g.index;
    std::reverse(w.begin(), w.begin() + k);
    if (ctx.type == GroupType::B)
      for (int j = 0; j < k; ++j)
        w[static_cast<std::size_t>(j)] = -w[static_cast<std::size_t>(j)];
    break;
  }
  case GenFamily::RBar2:
  case GenFamily::S0Prime:
    std::swap(w[0], w[1]);
    w[0] = -w[0];
    w[1] = -w[1];
    break;
  case GenFamily::S: {
    const std::size_t i = static_cast<std::size_t>(g.index);
    std::swap(w[i - 1], w[i]);
    break;
  }
  case GenFamily::S0:
    w[0] = -w[0];
    break;
  }
  return SignedPerm(SignedPerm::unchecked_t{}, std::move(w));
}

SignedPerm eval_word(const Word& w) {
  SignedPerm acc = SignedPerm::identity(w.ctx.degree);
  for (Gen g : w.syms)
    acc = apply_flip(g, acc, w.ctx);
  return acc;
}

} // namespace flipcox
