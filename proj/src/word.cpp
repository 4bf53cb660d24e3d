#include "flipcox/word.hpp"

#include <cctype>
#include <sstream>

namespace flipcox {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  }

  bool done() {
    skip_ws();
    return i >= text.size();
  }

  char peek() {
    skip_ws();
    return text[i];
  }
};

Gen gen_from_token(const std::string& tok, std::size_t pos,
                   const GroupContext& ctx) {
  Gen g;
  if (tok == "rb2") {
    g = Gen::rbar2();
  } else if (tok == "s0p") {
    g = Gen::s0p();
  } else if (tok.size() >= 2 && (tok[0] == 'r' || tok[0] == 's')) {
    if (tok.size() > 8)
      throw ParseError("token '" + tok + "' is too long", pos);
    for (std::size_t j = 1; j < tok.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(tok[j])))
        throw ParseError("unknown token '" + tok + "'", pos);
    if (tok[1] == '0' && tok.size() > 2)
      throw ParseError("token '" + tok + "' has a leading zero", pos);
    const int idx = std::stoi(tok.substr(1));
    if (tok[0] == 'r')
      g = Gen::r(idx);
    else
      g = idx == 0 ? Gen::s0() : Gen::s(idx);
  } else {
    throw ParseError("unknown token '" + tok + "'", pos);
  }
  require_valid(g, ctx); // InvalidSymbolError on context mismatch
  return g;
}

// seq := (token | '(' seq ')' '^' int)* ; stops at ')' or end of input.
void parse_seq(Lexer& lx, const GroupContext& ctx, std::vector<Gen>& out) {
  while (!lx.done()) {
    const char c = lx.peek();
    if (c == ')')
      return;
    if (c == '(') {
      const std::size_t open_pos = lx.i;
      ++lx.i;
      std::vector<Gen> inner;
      parse_seq(lx, ctx, inner);
      if (lx.done() || lx.peek() != ')')
        throw ParseError("unmatched '('", open_pos);
      ++lx.i;
      if (lx.done() || lx.peek() != '^')
        throw ParseError("expected '^' after ')'", lx.i);
      ++lx.i;
      lx.skip_ws();
      const std::size_t num_pos = lx.i;
      std::size_t digits = 0;
      while (lx.i < lx.text.size() &&
             std::isdigit(static_cast<unsigned char>(lx.text[lx.i]))) {
        ++lx.i;
        ++digits;
      }
      if (digits == 0 || digits > 6)
        throw ParseError("expected an exponent after '^'", num_pos);
      const int m = std::stoi(lx.text.substr(num_pos, digits));
      if (m < 1)
        throw ParseError("exponent must be at least 1", num_pos);
      for (int t = 0; t < m; ++t)
        out.insert(out.end(), inner.begin(), inner.end());
      continue;
    }
    if (c == '^')
      throw ParseError("'^' may only follow ')'", lx.i);
    // A bare token: letters/digits up to the next delimiter.
    const std::size_t start = lx.i;
    while (lx.i < lx.text.size()) {
      const char t = lx.text[lx.i];
      if (std::isspace(static_cast<unsigned char>(t)) || t == '(' ||
          t == ')' || t == '^')
        break;
      ++lx.i;
    }
    out.push_back(gen_from_token(lx.text.substr(start, lx.i - start), start, ctx));
  }
}

} // namespace

Word parse_word(const std::string& text, const GroupContext& ctx) {
  Lexer lx{text};
  std::vector<Gen> syms;
  parse_seq(lx, ctx, syms);
  if (!lx.done())
    throw ParseError("unmatched ')'", lx.i);
  return Word{std::move(syms), ctx};
}

std::string render_syms(const std::vector<Gen>& syms) {
  std::ostringstream os;
  for (std::size_t j = 0; j < syms.size(); ++j) {
    if (j)
      os << ' ';
    os << to_token(syms[j]);
  }
  return os.str();
}

std::string render(const Word& w) { return render_syms(w.syms); }

} // namespace flipcox
