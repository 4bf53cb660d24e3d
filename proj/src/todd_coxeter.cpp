#include "flipcox/todd_coxeter.hpp"

#include <algorithm>

#include "flipcox/word.hpp"

namespace flipcox {

namespace {

constexpr std::int32_t kNone = -1;

std::vector<int> letters_of(const Word& w, const std::vector<Gen>& alphabet) {
  std::vector<int> out;
  out.reserve(w.syms.size());
  for (Gen g : w.syms) {
    const auto it = std::find(alphabet.begin(), alphabet.end(), g);
    if (it == alphabet.end())
      throw InvalidSymbolError("symbol " + to_token(g) +
                               " is not a generator of this presentation");
    out.push_back(static_cast<int>(it - alphabet.begin()));
  }
  return out;
}

// Coset table engine over an involution alphabet. Representatives carry the
// rows; dead cosets forward to their representative via a union-find with
// the smaller id surviving, and stale table entries are canonicalized as
// they are read.
struct Engine {
  int ngens = 0;
  std::int64_t max_cosets = 0;
  std::vector<std::int32_t> tab;
  std::vector<std::int32_t> parent;
  std::int64_t live = 0;
  std::int64_t defined_total = 0;
  std::int64_t merges = 0;
  bool overflow = false;

  std::int32_t nrows() const { return static_cast<std::int32_t>(parent.size()); }

  std::int32_t find(std::int32_t c) {
    while (parent[static_cast<std::size_t>(c)] != c) {
      parent[static_cast<std::size_t>(c)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(c)])];
      c = parent[static_cast<std::size_t>(c)];
    }
    return c;
  }

  std::int32_t& cell(std::int32_t c, int g) {
    return tab[static_cast<std::size_t>(c) * static_cast<std::size_t>(ngens) +
               static_cast<std::size_t>(g)];
  }

  // Canonicalized read; c must be a representative.
  std::int32_t at(std::int32_t c, int g) {
    const std::int32_t d = cell(c, g);
    if (d == kNone)
      return kNone;
    const std::int32_t rd = find(d);
    if (rd != d)
      cell(c, g) = rd;
    return rd;
  }

  std::int32_t define(std::int32_t c, int g) {
    if (nrows() >= max_cosets) {
      overflow = true;
      return kNone;
    }
    const std::int32_t d = nrows();
    parent.push_back(d);
    tab.resize(tab.size() + static_cast<std::size_t>(ngens), kNone);
    cell(c, g) = d;
    cell(d, g) = c;
    ++live;
    ++defined_total;
    return d;
  }

  void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& dead) {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (a > b)
      std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    --live;
    ++merges;
    dead.push_back(b);
  }

  // Identifies a and b, then drains the queue of dead cosets, replaying each
  // dead row onto the surviving representatives. Secondary clashes queue
  // further merges until everything is consistent again.
  void coincide(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> dead;
    merge(a, b, dead);
    while (!dead.empty()) {
      const std::int32_t y = dead.back();
      dead.pop_back();
      for (int g = 0; g < ngens; ++g) {
        const std::int32_t d = cell(y, g);
        if (d == kNone)
          continue;
        cell(y, g) = kNone;
        if (cell(d, g) == y)
          cell(d, g) = kNone;
        const std::int32_t u = find(y);
        const std::int32_t v = find(d);
        const std::int32_t eu = at(u, g);
        if (eu != kNone && eu != v) {
          // u's edge already goes elsewhere; the clash is a coincidence and
          // the loser's replay re-establishes whatever was cleared above.
          merge(eu, v, dead);
          continue;
        }
        cell(u, g) = v;
        const std::int32_t ev = at(v, g);
        if (ev == kNone)
          cell(v, g) = u;
        else if (ev != u)
          merge(ev, u, dead);
      }
    }
  }

  // Records the edge c --g--> d (both representatives), merging on clash.
  void connect(std::int32_t c, std::int32_t d, int g) {
    const std::int32_t e = at(c, g);
    if (e == kNone) {
      cell(c, g) = d;
      const std::int32_t e2 = at(d, g);
      if (e2 == kNone)
        cell(d, g) = c;
      else if (e2 != c)
        coincide(e2, c);
    } else if (e != d) {
      coincide(e, d);
    }
  }

  // Traces w from `start` forwards and backwards; a single gap becomes a
  // deduction, a wider gap is filled with fresh definitions. Returns false
  // only when the definition budget runs out.
  bool scan_and_fill(std::int32_t start, const std::vector<int>& w) {
    std::int32_t f = find(start);
    std::int32_t b = f;
    std::size_t i = 0;
    std::size_t j = w.size();
    while (true) {
      while (i < j) {
        const std::int32_t d = at(f, w[i]);
        if (d == kNone)
          break;
        f = d;
        ++i;
      }
      if (i == j) {
        if (f != b)
          coincide(f, b);
        return true;
      }
      while (j > i) {
        const std::int32_t d = at(b, w[j - 1]);
        if (d == kNone)
          break;
        b = d;
        --j;
      }
      if (j == i) {
        if (f != b)
          coincide(f, b);
        return true;
      }
      if (j == i + 1) {
        connect(f, b, w[i]);
        return true;
      }
      const std::int32_t d = define(f, w[i]);
      if (d == kNone)
        return false;
      f = d;
      ++i;
    }
  }
};

} // namespace

CosetTable coset_enumerate(const Presentation& p,
                           const std::vector<Word>& subgroup_words,
                           std::int64_t max_cosets) {
  if (max_cosets < 1)
    throw Error("coset budget must be at least 1");
  const int ngens = static_cast<int>(p.generators.size());
  if (ngens == 0)
    throw Error("presentation has no generators");

  std::vector<std::vector<int>> relator_letters;
  relator_letters.reserve(p.relators.size());
  for (const Relator& rel : p.relators)
    relator_letters.push_back(letters_of(rel.word, p.generators));

  std::vector<std::vector<int>> subgroup_letters;
  for (const Word& w : subgroup_words) {
    if (!(w.ctx == p.context))
      throw InvalidContextError(
          "subgroup word context does not match the presentation");
    subgroup_letters.push_back(letters_of(w, p.generators));
  }

  Engine eng;
  eng.ngens = ngens;
  eng.max_cosets = max_cosets;
  eng.parent.push_back(0);
  eng.tab.assign(static_cast<std::size_t>(ngens), kNone);
  eng.live = 1;
  eng.defined_total = 1;

  // Coset 0 is the subgroup: its generators fix it.
  for (const auto& lw : subgroup_letters) {
    if (!eng.scan_and_fill(0, lw))
      break;
  }

  if (!eng.overflow) {
    for (std::int32_t a = 0; a < eng.nrows() && !eng.overflow; ++a) {
      if (eng.find(a) != a)
        continue; // dead
      bool died = false;
      for (const auto& lw : relator_letters) {
        if (!eng.scan_and_fill(a, lw)) {
          died = true; // overflow; flag checked by the loop guard
          break;
        }
        if (eng.find(a) != a) {
          died = true;
          break;
        }
      }
      if (died || eng.overflow)
        continue;
      for (int g = 0; g < ngens; ++g) {
        if (eng.at(a, g) == kNone && eng.define(a, g) == kNone)
          break;
      }
    }
  }

  // Compact: live cosets keep their relative order and become 0..live-1.
  std::vector<std::int32_t> newid(static_cast<std::size_t>(eng.nrows()), kNone);
  std::int32_t next = 0;
  for (std::int32_t c = 0; c < eng.nrows(); ++c)
    if (eng.find(c) == c)
      newid[static_cast<std::size_t>(c)] = next++;

  CosetTable t;
  t.ngens = ngens;
  t.status = eng.overflow ? TcStatus::Overflowed : TcStatus::Closed;
  t.defined_total = eng.defined_total;
  t.coincidences = eng.merges;
  t.entries.assign(static_cast<std::size_t>(next) * static_cast<std::size_t>(ngens),
                   kNone);
  for (std::int32_t c = 0; c < eng.nrows(); ++c) {
    if (newid[static_cast<std::size_t>(c)] == kNone)
      continue;
    for (int g = 0; g < ngens; ++g) {
      const std::int32_t d = eng.at(c, g);
      t.entries[static_cast<std::size_t>(newid[static_cast<std::size_t>(c)]) *
                    static_cast<std::size_t>(ngens) +
                static_cast<std::size_t>(g)] =
          d == kNone ? kNone : newid[static_cast<std::size_t>(d)];
    }
  }
  return t;
}

bool validate_table(const CosetTable& t, const Presentation& p) {
  if (t.status != TcStatus::Closed)
    return false;
  if (t.ngens != static_cast<int>(p.generators.size()))
    return false;
  const std::int64_t rows = t.rows();
  if (rows == 0)
    return false;
  for (std::int64_t c = 0; c < rows; ++c) {
    for (int g = 0; g < t.ngens; ++g) {
      const std::int32_t d = t.entry(c, g);
      if (d < 0 || d >= rows)
        return false;
      if (t.entry(d, g) != c)
        return false;
    }
  }
  for (const Relator& rel : p.relators) {
    const std::vector<int> lw = letters_of(rel.word, p.generators);
    for (std::int64_t c = 0; c < rows; ++c) {
      std::int64_t x = c;
      for (int g : lw)
        x = t.entry(x, g);
      if (x != c)
        return false;
    }
  }
  return true;
}

} // namespace flipcox
