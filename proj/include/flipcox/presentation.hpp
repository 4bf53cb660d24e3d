#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flipcox/group.hpp"

namespace flipcox {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { Pancake, Coxeter };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// One defining relator: the word is a cyclic identity (evaluates to the
/// identity element), `label` names the relator family it was instantiated
/// from, and `indices` records the instantiating parameters in loop order
/// (empty for one-off relators). Equality ignores `indices`, which is
/// bookkeeping rather than content.
struct Relator {
  std::string label;
  std::vector<int> indices;
  Word word;

  friend bool operator==(const Relator& a, const Relator& b) {
    return a.label == b.label && a.word == b.word;
  }
};

/// A finite presentation of the group named by `context`: either the prefix
/// reversal ("pancake flip") generating set or the classical simple
/// transposition generating set.
struct Presentation {
  GroupContext context;
  Family family{Family::Pancake};
  std::vector<Gen> generators;
  std::vector<Relator> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Prefix reversal presentation. Requires degree > 3.
/// Generators: type A r_2..r_n, type B r_1..r_n, type D rb2, r_2..r_n.
Presentation pancake_presentation(const GroupContext& ctx);

/// Simple transposition presentation. Requires degree >= 2 for types A and B
/// and degree >= 4 for type D (below that the diagram degenerates).
/// Generators: type A s_1..s_{n-1}, type B s_0..s_{n-1}, type D s0p,
/// s_1..s_{n-1}.
Presentation coxeter_presentation(const GroupContext& ctx);

/// Number of relators the corresponding builder emits, by closed formula.
int relator_count(const GroupContext& ctx, Family family);

/// |A_{n-1} as permutations| = n!, |B_n| = 2^n n!, |D_n| = 2^(n-1) n!.
BigInt expected_order(const GroupContext& ctx);

enum class ExportFormat { Json, GapScript };

/// Json: stable schema {group_type, degree, family, generators, relators}.
/// GapScript: four lines defining F, its generators, rels and G := F / rels.
std::string export_presentation(const Presentation& p, ExportFormat format);

/// Inverse of the Json export (indices are not serialized and come back
/// empty; equality is unaffected).
Presentation presentation_from_json(const std::string& text);

} // namespace flipcox
