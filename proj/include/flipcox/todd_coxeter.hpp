#pragma once

#include <cstdint>
#include <vector>

#include "flipcox/presentation.hpp"

namespace flipcox {

enum class TcStatus { InProgress, Closed, Overflowed };

/// Compacted coset table over an involution alphabet (one column per
/// generator, no inverse letters: entry symmetry tab[c][g] == d implies
/// tab[d][g] == c). Rows are live cosets numbered in definition order with
/// coset 0 the subgroup itself.
struct CosetTable {
  int ngens = 0;
  TcStatus status = TcStatus::InProgress;
  std::vector<std::int32_t> entries; // rows() x ngens, row-major, -1 = unset
  std::int64_t defined_total = 0;    // cosets ever defined
  std::int64_t coincidences = 0;     // merges processed

  std::int64_t rows() const {
    return ngens == 0 ? 0 : static_cast<std::int64_t>(entries.size()) / ngens;
  }
  std::int32_t entry(std::int64_t c, int g) const {
    return entries[static_cast<std::size_t>(c * ngens + g)];
  }
};

/// Systematic coset enumeration of p modulo the subgroup generated by
/// `subgroup_words` (trivial subgroup when empty): relator scanning with
/// gap filling, immediate coincidence handling, definition in first-gap
/// order. Deterministic. Returns status Overflowed (not an exception) when
/// more than `max_cosets` cosets would be defined at once.
CosetTable coset_enumerate(const Presentation& p,
                           const std::vector<Word>& subgroup_words,
                           std::int64_t max_cosets);

/// Checks a Closed table: total, involution-symmetric, and every relator
/// traces back to its starting coset from every coset.
bool validate_table(const CosetTable& t, const Presentation& p);

} // namespace flipcox
