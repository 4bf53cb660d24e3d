#pragma once

#include <string>

#include "flipcox/group.hpp"

namespace flipcox {

/// A sorting witness: applying `word`'s flips to `input` (left to right)
/// yields the identity arrangement. The word uses reversal symbols only.
struct SortCertificate {
  SignedPerm input;
  Word word;
  int flip_count = 0;
};

/// Greedy selection sort by prefix reversals: settle the largest magnitude
/// first. Type A (plain stacks) uses at most 2(n-1) flips; type B (every
/// flip also turns the prefix over) uses at most 3n. Type D contexts are
/// rejected with InvalidContextError: its generating set cannot move single
/// positions and is not a sorting network in this sense. A type A context
/// with signed input raises SignedEntryError.
SortCertificate greedy_sort(const SignedPerm& p, const GroupContext& ctx);

/// True iff folding apply_flip over c.word starting from c.input gives the
/// identity. Never throws: malformed certificates are simply not valid.
bool verify_certificate(const SortCertificate& c, const GroupContext& ctx);

/// {"input": [window], "word": [tokens], "flip_count": m}
std::string certificate_to_json(const SortCertificate& c);

} // namespace flipcox
