#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipcox/presentation.hpp"

namespace flipcox {

struct RelatorFailure {
  std::string label;
  std::vector<int> indices;
  Word word;
  SignedPerm evaluated; // what the word actually evaluated to
};

struct IdentityFailure {
  std::string name;
  std::vector<int> indices;
};

/// Outcome of one verification pass. `ok()` is the single verdict the CLI
/// turns into an exit code.
struct VerificationReport {
  GroupContext context;
  std::optional<Family> family;
  int relators_checked = 0;
  std::vector<RelatorFailure> relators_failed;
  int identities_checked = 0;
  std::vector<IdentityFailure> identities_failed;
  std::optional<BigInt> order_found;
  std::optional<BigInt> order_expected;

  bool ok() const {
    return relators_failed.empty() && identities_failed.empty() &&
           (!order_found || !order_expected || *order_found == *order_expected);
  }
};

std::string report_to_json(const VerificationReport& r);

/// Breadth-first closure of a generating set inside the concrete group.
/// `elements` lists every element in visit order: level by level, each level
/// sorted lexicographically by window, so the output is reproducible.
/// `level_sizes[d]` counts elements at word-length distance d (the histogram
/// ends at the eccentricity of the identity); `edge_count` is the number of
/// undirected Cayley graph edges.
struct CayleyClosure {
  GroupContext context;
  std::vector<Gen> generators;
  std::vector<SignedPerm> elements;
  std::vector<std::uint64_t> level_sizes;
  std::uint64_t edge_count = 0;

  int diameter() const { return static_cast<int>(level_sizes.size()) - 1; }
};

/// Evaluates every defining relator; failures identify the instance.
VerificationReport check_relators(const Presentation& p);

/// Closes the generating set under right multiplication via apply_flip.
/// Throws OverflowError when the closure would exceed `cap` elements.
CayleyClosure bfs_order(const std::vector<Gen>& generators,
                        const GroupContext& ctx, std::uint64_t cap);

/// bfs_order on p's generators, compared against the expected group order.
VerificationReport check_order(const Presentation& p, std::uint64_t cap);

/// One consequence identity: lhs and rhs must evaluate to the same element.
struct LemmaIdentity {
  std::string name;
  std::vector<int> indices;
  Word lhs;
  Word rhs;
};

/// The full suite of generator change-of-basis and commutation identities
/// for the context's type, instantiated across their index ranges.
/// Requires degree > 3.
std::vector<LemmaIdentity> lemma_identities(const GroupContext& ctx);

/// Evaluates the whole suite; failures carry the identity name and indices.
VerificationReport check_lemma_identities(const GroupContext& ctx);

} // namespace flipcox
