#include "flipcox/rewrite.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "flipcox/word.hpp"

namespace flipcox {

namespace {

bool shortlex_less(const Letters& a, const Letters& b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

// True when `pat` occurs as a factor of `w`.
bool contains(const Letters& w, const Letters& pat) {
  return std::search(w.begin(), w.end(), pat.begin(), pat.end()) != w.end();
}

bool is_suffix(const Letters& w, const Letters& pat) {
  return pat.size() <= w.size() &&
         std::equal(pat.begin(), pat.end(), w.end() - static_cast<std::ptrdiff_t>(pat.size()));
}

} // namespace

Letters RewriteSystem::to_letters(const Word& w) const {
  Letters out;
  out.reserve(w.syms.size());
  for (Gen g : w.syms) {
    const auto it = std::find(alphabet.begin(), alphabet.end(), g);
    if (it == alphabet.end())
      throw InvalidSymbolError("symbol " + to_token(g) +
                               " is not in the rewriting alphabet");
    out.push_back(static_cast<std::uint8_t>(it - alphabet.begin()));
  }
  return out;
}

Word RewriteSystem::to_word(const Letters& ls) const {
  std::vector<Gen> syms;
  syms.reserve(ls.size());
  for (std::uint8_t l : ls)
    syms.push_back(alphabet.at(l));
  return Word{std::move(syms), context};
}

Letters reduce_letters(const Letters& w, const std::vector<RewriteRule>& rules) {
  Letters out;
  out.reserve(w.size());
  Letters pending(w.rbegin(), w.rend()); // next letter to consume is back()
  while (!pending.empty()) {
    out.push_back(pending.back());
    pending.pop_back();
    bool changed = true;
    while (changed) {
      changed = false;
      for (const RewriteRule& r : rules) {
        if (is_suffix(out, r.lhs)) {
          out.resize(out.size() - r.lhs.size());
          pending.insert(pending.end(), r.rhs.rbegin(), r.rhs.rend());
          changed = true;
          break;
        }
      }
    }
  }
  return out;
}

namespace {

struct Completion {
  std::vector<RewriteRule> rules;
  std::deque<std::pair<Letters, Letters>> pending;
  int max_rules;
  std::size_t max_len;
  bool cap_hit = false;
  bool stopped = false;

  // Queues the two reductions of the overlap words of r1 then-r2 (a proper
  // suffix of r1.lhs equal to a proper prefix of r2.lhs).
  void queue_overlaps(const RewriteRule& r1, const RewriteRule& r2) {
    if (r1.lhs.empty() || r2.lhs.empty())
      return;
    const std::size_t max_t = std::min(r1.lhs.size(), r2.lhs.size()) - 1;
    for (std::size_t t = 1; t <= max_t; ++t) {
      if (!std::equal(r1.lhs.end() - static_cast<std::ptrdiff_t>(t), r1.lhs.end(),
                      r2.lhs.begin()))
        continue;
      // w = r1.lhs + r2.lhs[t..]; rewrite its two halves.
      Letters left = r1.rhs;
      left.insert(left.end(), r2.lhs.begin() + static_cast<std::ptrdiff_t>(t),
                  r2.lhs.end());
      Letters right(r1.lhs.begin(),
                    r1.lhs.end() - static_cast<std::ptrdiff_t>(t));
      right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
      pending.emplace_back(std::move(left), std::move(right));
    }
  }

  void add_rule(Letters lhs, Letters rhs) {
    // Interreduce: any active rule whose left side contains the new left
    // side is retired and re-queued as an equation.
    RewriteRule nr{std::move(lhs), std::move(rhs)};
    for (std::size_t i = rules.size(); i-- > 0;) {
      if (contains(rules[i].lhs, nr.lhs)) {
        pending.emplace_back(std::move(rules[i].lhs), std::move(rules[i].rhs));
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    rules.push_back(std::move(nr));
    if (static_cast<int>(rules.size()) > max_rules) {
      cap_hit = true;
      stopped = true;
      return;
    }
    const RewriteRule& added = rules.back();
    for (const RewriteRule& r : rules) {
      queue_overlaps(added, r);
      if (&r != &added)
        queue_overlaps(r, added);
    }
  }

  void run() {
    while (!pending.empty() && !stopped) {
      auto [u, v] = std::move(pending.front());
      pending.pop_front();
      Letters ur = reduce_letters(u, rules);
      Letters vr = reduce_letters(v, rules);
      if (ur == vr)
        continue;
      if (shortlex_less(ur, vr))
        std::swap(ur, vr);
      if (ur.size() > max_len) {
        cap_hit = true;
        continue;
      }
      add_rule(std::move(ur), std::move(vr));
    }
  }
};

} // namespace

RewriteSystem kb_complete(const Presentation& p, const std::vector<Gen>& order,
                          int max_rules, std::size_t max_len) {
  if (order.size() != p.generators.size())
    throw InvalidContextError("symbol order must list every generator once");
  for (Gen g : p.generators)
    if (std::count(order.begin(), order.end(), g) != 1)
      throw InvalidContextError("symbol order must list every generator once");

  RewriteSystem rs;
  rs.context = p.context;
  rs.alphabet = order;

  Completion comp;
  comp.max_rules = max_rules;
  comp.max_len = max_len;
  for (std::size_t l = 0; l < order.size(); ++l)
    comp.pending.emplace_back(
        Letters{static_cast<std::uint8_t>(l), static_cast<std::uint8_t>(l)},
        Letters{});
  for (const Relator& rel : p.relators)
    comp.pending.emplace_back(rs.to_letters(rel.word), Letters{});
  comp.run();

  rs.rules = std::move(comp.rules);
  rs.rule_cap_hit = comp.cap_hit;
  rs.confluent = !comp.cap_hit && !comp.stopped;
  return rs;
}

RewriteSystem kb_complete(const Presentation& p, int max_rules,
                          std::size_t max_len) {
  return kb_complete(p, p.generators, max_rules, max_len);
}

Word reduce(const Word& w, const RewriteSystem& rs) {
  if (!(w.ctx == rs.context))
    throw InvalidContextError("word context does not match the rewriting system");
  return rs.to_word(reduce_letters(rs.to_letters(w), rs.rules));
}

std::uint64_t enumerate_normal_forms(const RewriteSystem& rs,
                                     std::uint64_t cap) {
  if (!rs.confluent)
    throw NotConfluentError(
        "normal form enumeration needs a confluent rewriting system");
  const std::size_t nletters = rs.alphabet.size();
  std::uint64_t count = 1; // the empty word
  if (count > cap)
    throw OverflowError("normal form count exceeded cap", cap);
  std::vector<Letters> level{Letters{}};
  while (!level.empty()) {
    std::vector<Letters> next;
    for (const Letters& u : level) {
      for (std::size_t l = 0; l < nletters; ++l) {
        Letters w = u;
        w.push_back(static_cast<std::uint8_t>(l));
        bool reducible = false;
        for (const RewriteRule& r : rs.rules) {
          if (is_suffix(w, r.lhs)) {
            reducible = true;
            break;
          }
        }
        if (reducible)
          continue;
        if (++count > cap)
          throw OverflowError("normal form count exceeded cap", cap);
        next.push_back(std::move(w));
      }
    }
    level = std::move(next);
  }
  return count;
}

bool critical_pairs_resolve(const RewriteSystem& rs) {
  const auto& rules = rs.rules;
  auto resolves = [&](const Letters& a, const Letters& b) {
    return reduce_letters(a, rules) == reduce_letters(b, rules);
  };
  for (const RewriteRule& r1 : rules) {
    for (const RewriteRule& r2 : rules) {
      if (r1.lhs.empty() || r2.lhs.empty())
        return false;
      // Proper overlaps: suffix of r1.lhs = prefix of r2.lhs.
      const std::size_t max_t = std::min(r1.lhs.size(), r2.lhs.size()) - 1;
      for (std::size_t t = 1; t <= max_t; ++t) {
        if (!std::equal(r1.lhs.end() - static_cast<std::ptrdiff_t>(t),
                        r1.lhs.end(), r2.lhs.begin()))
          continue;
        Letters left = r1.rhs;
        left.insert(left.end(), r2.lhs.begin() + static_cast<std::ptrdiff_t>(t),
                    r2.lhs.end());
        Letters right(r1.lhs.begin(),
                      r1.lhs.end() - static_cast<std::ptrdiff_t>(t));
        right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
        if (!resolves(left, right))
          return false;
      }
      // Containments: r2.lhs a proper factor of r1.lhs.
      if (r2.lhs.size() >= r1.lhs.size())
        continue;
      for (std::size_t at = 0; at + r2.lhs.size() <= r1.lhs.size(); ++at) {
        if (!std::equal(r2.lhs.begin(), r2.lhs.end(),
                        r1.lhs.begin() + static_cast<std::ptrdiff_t>(at)))
          continue;
        Letters inner(r1.lhs.begin(),
                      r1.lhs.begin() + static_cast<std::ptrdiff_t>(at));
        inner.insert(inner.end(), r2.rhs.begin(), r2.rhs.end());
        inner.insert(inner.end(),
                     r1.lhs.begin() + static_cast<std::ptrdiff_t>(at + r2.lhs.size()),
                     r1.lhs.end());
        if (!resolves(r1.rhs, inner))
          return false;
      }
    }
  }
  return true;
}

std::string rules_to_json(const RewriteSystem& rs) {
  nlohmann::ordered_json j;
  auto order = nlohmann::ordered_json::array();
  for (Gen g : rs.alphabet)
    order.push_back(to_token(g));
  j["order"] = std::move(order);
  j["confluent"] = rs.confluent;
  j["rule_cap_hit"] = rs.rule_cap_hit;
  auto rules = nlohmann::ordered_json::array();
  for (const RewriteRule& r : rs.rules) {
    nlohmann::ordered_json e;
    auto side = [&rs](const Letters& ls) {
      auto arr = nlohmann::ordered_json::array();
      for (std::uint8_t l : ls)
        arr.push_back(to_token(rs.alphabet.at(l)));
      return arr;
    };
    e["lhs"] = side(r.lhs);
    e["rhs"] = side(r.rhs);
    rules.push_back(std::move(e));
  }
  j["rules"] = std::move(rules);
  return j.dump(2) + "\n";
}

RewriteSystem rules_from_json(const std::string& text, const GroupContext& ctx) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid rules json: ") + e.what(), 0);
  }
  try {
    RewriteSystem rs;
    rs.context = ctx;
    for (const auto& tok : j.at("order")) {
      const Word w = parse_word(tok.get<std::string>(), ctx);
      if (w.syms.size() != 1)
        throw ParseError("order entries must be single tokens", 0);
      rs.alphabet.push_back(w.syms[0]);
    }
    rs.confluent = j.at("confluent").get<bool>();
    rs.rule_cap_hit = j.value("rule_cap_hit", false);
    for (const auto& e : j.at("rules")) {
      RewriteRule r;
      auto read_side = [&rs, &ctx](const nlohmann::json& arr) {
        Letters ls;
        for (const auto& tok : arr) {
          const Word w = parse_word(tok.get<std::string>(), ctx);
          if (w.syms.size() != 1)
            throw ParseError("rule entries must be single tokens", 0);
          const auto it =
              std::find(rs.alphabet.begin(), rs.alphabet.end(), w.syms[0]);
          if (it == rs.alphabet.end())
            throw InvalidSymbolError("rule symbol " + to_token(w.syms[0]) +
                                     " is not in the declared order");
          ls.push_back(static_cast<std::uint8_t>(it - rs.alphabet.begin()));
        }
        return ls;
      };
      r.lhs = read_side(e.at("lhs"));
      r.rhs = read_side(e.at("rhs"));
      rs.rules.push_back(std::move(r));
    }
    return rs;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid rules json: ") + e.what(), 0);
  }
}

} // namespace flipcox
