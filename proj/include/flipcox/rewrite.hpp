#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flipcox/presentation.hpp"

namespace flipcox {

/// Letters are indices into `alphabet`; the shortlex order compares length
/// first, then position in `alphabet` (earlier = smaller).
using Letters = std::vector<std::uint8_t>;

struct RewriteRule {
  Letters lhs;
  Letters rhs; // shortlex-smaller than lhs

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// A shortlex rewriting system for a presentation's generators. When
/// `confluent` is true, reduction computes the unique shortest normal form
/// of every word. The caps are reported, not thrown: `rule_cap_hit` records
/// that completion gave up on some consequence, leaving the system usable
/// but not confluent.
struct RewriteSystem {
  GroupContext context;
  std::vector<Gen> alphabet;
  std::vector<RewriteRule> rules;
  bool confluent = false;
  bool rule_cap_hit = false;

  Letters to_letters(const Word& w) const;
  Word to_word(const Letters& ls) const;
};

inline constexpr int kDefaultMaxRules = 20000;
inline constexpr std::size_t kDefaultMaxLen = 64;

/// Knuth-Bendix completion seeded with the relators (relator -> empty word)
/// and the involution rules gg -> empty. `order` permutes the alphabet used
/// for the shortlex comparison; it must contain exactly the presentation's
/// generators. Deterministic: pending equations are processed FIFO and the
/// active rules are interreduced as rules are added.
RewriteSystem kb_complete(const Presentation& p, const std::vector<Gen>& order,
                          int max_rules = kDefaultMaxRules,
                          std::size_t max_len = kDefaultMaxLen);

/// kb_complete with the presentation's own generator order.
RewriteSystem kb_complete(const Presentation& p,
                          int max_rules = kDefaultMaxRules,
                          std::size_t max_len = kDefaultMaxLen);

/// Exhaustive leftmost reduction of w by rs (terminates for any rule set
/// because every rule replaces a factor by something shortlex-smaller).
Word reduce(const Word& w, const RewriteSystem& rs);

Letters reduce_letters(const Letters& w, const std::vector<RewriteRule>& rules);

/// Counts irreducible words by prefix-closed breadth-first search; for a
/// confluent system this is the group order. Throws NotConfluentError unless
/// rs.confluent, and OverflowError if the count would exceed `cap`.
std::uint64_t enumerate_normal_forms(const RewriteSystem& rs,
                                     std::uint64_t cap);

/// Independent confluence certificate: resolves every critical pair of the
/// finished system from scratch.
bool critical_pairs_resolve(const RewriteSystem& rs);

/// {"order": [tokens], "confluent": bool, "rule_cap_hit": bool,
///  "rules": [{"lhs": [tokens], "rhs": [tokens]}]}
std::string rules_to_json(const RewriteSystem& rs);
RewriteSystem rules_from_json(const std::string& text, const GroupContext& ctx);

} // namespace flipcox
