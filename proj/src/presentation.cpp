#include "flipcox/presentation.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "flipcox/word.hpp"

namespace flipcox {

std::string family_name(Family f) {
  return f == Family::Pancake ? "pancake" : "coxeter";
}

Family family_from_name(const std::string& name) {
  if (name == "pancake")
    return Family::Pancake;
  if (name == "coxeter")
    return Family::Coxeter;
  throw InvalidContextError("unknown presentation family '" + name + "'");
}

namespace {

Gen r(int k) { return Gen::r(k); }

void require_pancake_degree(const GroupContext& ctx) {
  if (ctx.degree <= 3)
    throw DegreeTooSmallError("prefix reversal presentation of " +
                              to_string(ctx) +
                              " requires degree > 3 (got " +
                              std::to_string(ctx.degree) + ")");
}

void require_coxeter_degree(const GroupContext& ctx) {
  const int min = ctx.type == GroupType::D ? 4 : 2;
  if (ctx.degree < min)
    throw DegreeTooSmallError("transposition presentation of " +
                              to_string(ctx) + " requires degree >= " +
                              std::to_string(min) + " (got " +
                              std::to_string(ctx.degree) + ")");
}

struct Builder {
  GroupContext ctx;
  std::vector<Relator> rels;

  void add(const char* label, std::vector<int> idx, std::vector<Gen> syms) {
    rels.push_back(Relator{label, std::move(idx), Word{std::move(syms), ctx}});
  }

  void power(const char* label, std::vector<int> idx,
             const std::vector<Gen>& base, int m) {
    std::vector<Gen> syms;
    syms.reserve(base.size() * static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t)
      syms.insert(syms.end(), base.begin(), base.end());
    add(label, std::move(idx), std::move(syms));
  }
};

// In type B the transposition alphabet starts at s_0.
Gen bs(int i) { return i == 0 ? Gen::s0() : Gen::s(i); }

std::vector<Relator> pancake_relators_a(const GroupContext& ctx) {
  const int n = ctx.degree;
  Builder b{ctx, {}};
  for (int k = 2; k <= n; ++k)
    b.power("R1", {k}, {r(k)}, 2);
  b.power("R2", {}, {r(2), r(3)}, 3);
  for (int k = 4; k <= n; ++k)
    b.power("R3", {k}, {r(2), r(k)}, 4);
  for (int l = 4; l <= n; ++l)
    for (int k = 3; k <= l - 1; ++k)
      b.add("R4", {l, k},
            {r(l), r(l - k + 2), r(2), r(l - k + 2), r(l), r(k), r(2), r(k)});
  for (int k = 3; k <= n - 1; ++k)
    b.add("R5", {k},
          {r(k), r(k - 1), r(k + 1), r(2), r(k + 1), r(k), r(k + 1)});
  for (int k = 3; k <= n - 1; ++k)
    b.add("R6", {k},
          {r(k), r(k - 1), r(k), r(k - 1), r(k + 1), r(3), r(k + 1), r(k - 1),
           r(k + 1)});
  return std::move(b.rels);
}

std::vector<Relator> pancake_relators_b(const GroupContext& ctx) {
  const int n = ctx.degree;
  Builder b{ctx, {}};
  for (int k = 1; k <= n; ++k)
    b.power("Rb1", {k}, {r(k)}, 2);
  b.power("Rb2", {}, {r(2), r(3)}, 6);
  for (int k = 2; k <= n; ++k)
    b.power("Rb3", {k}, {r(1), r(k)}, 4);
  for (int k = 4; k <= n; ++k)
    b.power("Rb4", {k}, {r(1), r(2), r(1), r(k)}, 4);
  for (int k = 3; k <= n; ++k)
    b.power("Rb5", {k}, {r(k), r(1), r(k), r(2)}, 2);
  for (int k = 2; k <= n - 1; ++k)
    b.add("Rb6", {k},
          {r(k), r(1), r(2), r(1), r(k), r(k + 1), r(2), r(3), r(2), r(1),
           r(k + 1)});
  for (int k = 2; k <= n - 1; ++k)
    b.add("Rb7", {k},
          {r(k + 1), r(1), r(2), r(1), r(k + 1), r(k - 1), r(k), r(k + 1),
           r(k)});
  for (int k = 2; k <= n - 2; ++k)
    for (int l = k + 2; l <= n; ++l)
      b.add("Rb8", {k, l},
            {r(k), r(1), r(2), r(1), r(k), r(l), r(l - k + 2), r(1), r(2),
             r(1), r(l - k + 2), r(l)});
  return std::move(b.rels);
}

std::vector<Relator> pancake_relators_d(const GroupContext& ctx) {
  const int n = ctx.degree;
  const Gen q = Gen::rbar2();
  Builder b{ctx, {}};
  b.power("Rd1", {}, {q}, 2);
  for (int k = 2; k <= n; ++k)
    b.power("Rd2", {k}, {r(k)}, 2);
  b.power("Rd3", {}, {q, r(2)}, 2);
  b.power("Rd4", {}, {r(2), r(3)}, 3);
  for (int k = 4; k <= n; ++k)
    b.power("Rd5", {k}, {r(2), r(k)}, 4);
  b.power("Rd6", {}, {q, r(3), r(2), r(3)}, 3);
  for (int k = 4; k <= n; ++k)
    b.power("Rd7", {k}, {q, r(k), r(2), r(k)}, 2);
  for (int k = 3; k <= n - 1; ++k)
    b.add("Rd8", {k},
          {r(k), r(k - 1), r(k + 1), r(2), r(k + 1), r(k), r(k + 1)});
  for (int k = 3; k <= n - 1; ++k)
    b.add("Rd9", {k},
          {r(k), r(k - 1), r(k), r(k - 1), r(k + 1), r(3), r(k + 1), r(k - 1),
           r(k + 1)});
  for (int l = 4; l <= n; ++l)
    for (int k = 3; k <= l - 2; ++k)
      b.add("Rd10", {l, k},
            {r(l), r(l - k + 2), r(2), r(l - k + 2), r(l), r(k), r(2), r(k)});
  return std::move(b.rels);
}

std::vector<Relator> coxeter_relators_a(const GroupContext& ctx) {
  const int n = ctx.degree;
  Builder b{ctx, {}};
  for (int i = 1; i <= n - 1; ++i)
    b.power("Ca1", {i}, {Gen::s(i)}, 2);
  for (int i = 1; i <= n - 2; ++i)
    b.power("Ca2", {i}, {Gen::s(i), Gen::s(i + 1)}, 3);
  for (int i = 1; i <= n - 3; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      b.power("Ca3", {i, j}, {Gen::s(i), Gen::s(j)}, 2);
  return std::move(b.rels);
}

std::vector<Relator> coxeter_relators_b(const GroupContext& ctx) {
  const int n = ctx.degree;
  Builder b{ctx, {}};
  for (int i = 0; i <= n - 1; ++i)
    b.power("Cb1", {i}, {bs(i)}, 2);
  if (n >= 2)
    b.power("Cb2", {}, {bs(0), bs(1)}, 4);
  for (int i = 1; i <= n - 2; ++i)
    b.power("Cb3", {i}, {bs(i), bs(i + 1)}, 3);
  for (int i = 0; i <= n - 3; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      b.power("Cb4", {i, j}, {bs(i), bs(j)}, 2);
  return std::move(b.rels);
}

std::vector<Relator> coxeter_relators_d(const GroupContext& ctx) {
  const int n = ctx.degree;
  const Gen q = Gen::s0p();
  Builder b{ctx, {}};
  for (int i = 1; i <= n - 1; ++i)
    b.power("Cd1", {i}, {Gen::s(i)}, 2);
  b.power("Cd2", {}, {q}, 2);
  b.power("Cd3", {}, {q, Gen::s(2)}, 3);
  for (int i = 1; i <= n - 2; ++i)
    b.power("Cd4", {i}, {Gen::s(i), Gen::s(i + 1)}, 3);
  for (int i = 1; i <= n - 1; ++i)
    if (i != 2)
      b.power("Cd5", {i}, {q, Gen::s(i)}, 2);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      b.power("Cd6", {i, j}, {Gen::s(i), Gen::s(j)}, 2);
  return std::move(b.rels);
}

std::vector<Gen> pancake_generators(const GroupContext& ctx) {
  std::vector<Gen> gens;
  if (ctx.type == GroupType::D)
    gens.push_back(Gen::rbar2());
  const int first = ctx.type == GroupType::B ? 1 : 2;
  for (int k = first; k <= ctx.degree; ++k)
    gens.push_back(Gen::r(k));
  return gens;
}

std::vector<Gen> coxeter_generators(const GroupContext& ctx) {
  std::vector<Gen> gens;
  if (ctx.type == GroupType::B)
    gens.push_back(Gen::s0());
  else if (ctx.type == GroupType::D)
    gens.push_back(Gen::s0p());
  for (int i = 1; i <= ctx.degree - 1; ++i)
    gens.push_back(Gen::s(i));
  return gens;
}

} // namespace

Presentation pancake_presentation(const GroupContext& ctx) {
  require_pancake_degree(ctx);
  Presentation p;
  p.context = ctx;
  p.family = Family::Pancake;
  p.generators = pancake_generators(ctx);
  switch (ctx.type) {
  case GroupType::A:
    p.relators = pancake_relators_a(ctx);
    break;
  case GroupType::B:
    p.relators = pancake_relators_b(ctx);
    break;
  case GroupType::D:
    p.relators = pancake_relators_d(ctx);
    break;
  }
  return p;
}

Presentation coxeter_presentation(const GroupContext& ctx) {
  require_coxeter_degree(ctx);
  Presentation p;
  p.context = ctx;
  p.family = Family::Coxeter;
  p.generators = coxeter_generators(ctx);
  switch (ctx.type) {
  case GroupType::A:
    p.relators = coxeter_relators_a(ctx);
    break;
  case GroupType::B:
    p.relators = coxeter_relators_b(ctx);
    break;
  case GroupType::D:
    p.relators = coxeter_relators_d(ctx);
    break;
  }
  return p;
}

int relator_count(const GroupContext& ctx, Family family) {
  const int n = ctx.degree;
  if (family == Family::Pancake) {
    require_pancake_degree(ctx);
    switch (ctx.type) {
    case GroupType::A:
      return (n - 1) + 1 + (n - 3) + (n - 2) * (n - 3) / 2 + 2 * (n - 3);
    case GroupType::B:
      return n + 1 + (n - 1) + (n - 3) + 3 * (n - 2) + (n - 2) * (n - 3) / 2;
    case GroupType::D:
      return 4 + (n - 1) + 4 * (n - 3) + (n - 3) * (n - 4) / 2;
    }
  } else {
    require_coxeter_degree(ctx);
    switch (ctx.type) {
    case GroupType::A:
      return (n - 1) + (n - 2) + (n - 2) * (n - 3) / 2;
    case GroupType::B:
      return n + 1 + (n - 2) + (n - 1) * (n - 2) / 2;
    case GroupType::D:
      return (n - 1) + 2 + 2 * (n - 2) + (n - 2) * (n - 3) / 2;
    }
  }
  return 0;
}

BigInt expected_order(const GroupContext& ctx) {
  if (ctx.degree < 1)
    throw Error("degree must be at least 1");
  BigInt fact = 1;
  for (int j = 2; j <= ctx.degree; ++j)
    fact *= j;
  switch (ctx.type) {
  case GroupType::A:
    return fact;
  case GroupType::B:
    return fact << ctx.degree;
  case GroupType::D:
    return fact << (ctx.degree - 1);
  }
  return 0;
}

// --- export / import -------------------------------------------------------

namespace {

// Renders a relator word as a GAP free-group product, folding a full-word
// period into a power so that e.g. r2 r3 r2 r3 r2 r3 prints as (r2*r3)^3.
std::string gap_word(const std::vector<Gen>& syms) {
  const std::size_t len = syms.size();
  if (len == 0)
    return "One(F)";
  std::size_t period = len;
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0)
      continue;
    bool ok = true;
    for (std::size_t j = p; j < len && ok; ++j)
      ok = syms[j] == syms[j % p];
    if (ok) {
      period = p;
      break;
    }
  }
  const std::size_t m = len / period;
  std::ostringstream os;
  if (m > 1 && period == 1) {
    os << to_token(syms[0]) << '^' << m;
    return os.str();
  }
  if (m > 1)
    os << '(';
  for (std::size_t j = 0; j < period; ++j) {
    if (j)
      os << '*';
    os << to_token(syms[j]);
  }
  if (m > 1)
    os << ")^" << m;
  return os.str();
}

std::string gap_script(const Presentation& p) {
  std::ostringstream os;
  os << "F := FreeGroup(";
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    if (j)
      os << ", ";
    os << '"' << to_token(p.generators[j]) << '"';
  }
  os << ");;\n";
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    if (j)
      os << ' ';
    os << to_token(p.generators[j]) << " := F." << (j + 1) << ";;";
  }
  os << '\n';
  os << "rels := [ ";
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    if (j)
      os << ", ";
    os << gap_word(p.relators[j].word.syms);
  }
  os << " ];;\n";
  os << "G := F / rels;;\n";
  return os.str();
}

} // namespace

std::string export_presentation(const Presentation& p, ExportFormat format) {
  if (format == ExportFormat::GapScript)
    return gap_script(p);
  nlohmann::ordered_json j;
  j["group_type"] = std::string(1, group_type_letter(p.context.type));
  j["degree"] = p.context.degree;
  j["family"] = family_name(p.family);
  auto gens = nlohmann::ordered_json::array();
  for (Gen g : p.generators)
    gens.push_back(to_token(g));
  j["generators"] = std::move(gens);
  auto rels = nlohmann::ordered_json::array();
  for (const Relator& rel : p.relators) {
    nlohmann::ordered_json r;
    r["label"] = rel.label;
    auto w = nlohmann::ordered_json::array();
    for (Gen g : rel.word.syms)
      w.push_back(to_token(g));
    r["word"] = std::move(w);
    rels.push_back(std::move(r));
  }
  j["relators"] = std::move(rels);
  return j.dump(2) + "\n";
}

Presentation presentation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid presentation json: ") + e.what(), 0);
  }
  try {
    Presentation p;
    const std::string type = j.at("group_type").get<std::string>();
    if (type.size() != 1)
      throw InvalidContextError("unknown group type '" + type + "'");
    p.context.type = group_type_from_letter(type[0]);
    p.context.degree = j.at("degree").get<int>();
    if (p.context.degree < 1)
      throw InvalidContextError("degree must be at least 1");
    p.family = family_from_name(j.at("family").get<std::string>());
    for (const auto& tok : j.at("generators")) {
      const Word w = parse_word(tok.get<std::string>(), p.context);
      if (w.syms.size() != 1)
        throw ParseError("generator entries must be single tokens", 0);
      p.generators.push_back(w.syms[0]);
    }
    for (const auto& rel : j.at("relators")) {
      Relator out;
      out.label = rel.at("label").get<std::string>();
      std::vector<Gen> syms;
      for (const auto& tok : rel.at("word"))
        syms.push_back(parse_word(tok.get<std::string>(), p.context).syms.at(0));
      out.word = Word{std::move(syms), p.context};
      p.relators.push_back(std::move(out));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid presentation json: ") + e.what(), 0);
  }
}

} // namespace flipcox
