#include "flipcox/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "flipcox/pancake_sort.hpp"
#include "flipcox/rewrite.hpp"
#include "flipcox/todd_coxeter.hpp"
#include "flipcox/verify.hpp"
#include "flipcox/word.hpp"

namespace flipcox {

namespace {

std::string label_with_indices(const std::string& label,
                               const std::vector<int>& indices) {
  if (indices.empty())
    return label;
  std::string s = label + "(";
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (j)
      s += ',';
    s += std::to_string(indices[j]);
  }
  return s + ")";
}

GroupContext context_of(const RunConfig& cfg) {
  return GroupContext{cfg.group_type, cfg.degree};
}

Presentation build(const RunConfig& cfg) {
  return cfg.family == Family::Pancake
             ? pancake_presentation(context_of(cfg))
             : coxeter_presentation(context_of(cfg));
}

std::string context_heading(const GroupContext& ctx) { return to_string(ctx); }

void print_verify_text(std::ostream& out, const VerificationReport& rep) {
  out << context_heading(rep.context);
  if (rep.family)
    out << ' ' << family_name(*rep.family);
  out << ": ";
  if (rep.relators_checked > 0) {
    out << rep.relators_checked << " relators checked, ";
    if (rep.relators_failed.empty())
      out << "all evaluate to the identity\n";
    else {
      out << rep.relators_failed.size() << " FAILED\n";
      for (const auto& f : rep.relators_failed)
        out << "  " << label_with_indices(f.label, f.indices) << ": "
            << render(f.word) << " -> " << f.evaluated.str() << "\n";
    }
  }
  if (rep.identities_checked > 0) {
    out << rep.identities_checked << " identities checked, ";
    if (rep.identities_failed.empty())
      out << "all hold\n";
    else {
      out << rep.identities_failed.size() << " FAILED\n";
      for (const auto& f : rep.identities_failed)
        out << "  " << label_with_indices(f.name, f.indices) << "\n";
    }
  }
  if (rep.order_found) {
    out << "closure order " << *rep.order_found;
    if (rep.order_expected)
      out << ", expected " << *rep.order_expected;
    out << (rep.ok() ? " (ok)" : " (MISMATCH)") << "\n";
  }
}

int report_exit(const VerificationReport& rep) { return rep.ok() ? 0 : 1; }

int cmd_present(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = build(cfg);
  if (cfg.output == OutputMode::Json) {
    out << export_presentation(p, ExportFormat::Json);
    return 0;
  }
  out << context_heading(p.context) << ' ' << family_name(p.family) << ": "
      << p.generators.size() << " generators, " << p.relators.size()
      << " relators\n";
  out << "generators:";
  for (Gen g : p.generators)
    out << ' ' << to_token(g);
  out << "\n";
  for (const Relator& rel : p.relators)
    out << "  " << label_with_indices(rel.label, rel.indices) << ": "
        << render(rel.word) << "\n";
  return 0;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Presentation p = build(cfg);
  const std::string text = export_presentation(p, cfg.export_format);
  if (cfg.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(cfg.out_path);
  if (!f) {
    err << "cannot open " << cfg.out_path << " for writing\n";
    return 3;
  }
  f << text;
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const VerificationReport rep = check_relators(build(cfg));
  if (cfg.output == OutputMode::Json)
    out << report_to_json(rep);
  else
    print_verify_text(out, rep);
  return report_exit(rep);
}

int cmd_order(const RunConfig& cfg, std::ostream& out) {
  const VerificationReport rep = check_order(build(cfg), cfg.bfs_cap);
  if (cfg.output == OutputMode::Json)
    out << report_to_json(rep);
  else
    print_verify_text(out, rep);
  return report_exit(rep);
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& out) {
  const VerificationReport rep = check_lemma_identities(context_of(cfg));
  if (cfg.output == OutputMode::Json)
    out << report_to_json(rep);
  else
    print_verify_text(out, rep);
  return report_exit(rep);
}

const char* status_name(TcStatus s) {
  switch (s) {
  case TcStatus::InProgress:
    return "in_progress";
  case TcStatus::Closed:
    return "closed";
  case TcStatus::Overflowed:
    return "overflowed";
  }
  return "?";
}

int cmd_tc(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = build(cfg);
  std::vector<Word> sub;
  for (const std::string& text : cfg.subgroup)
    sub.push_back(parse_word(text, p.context));
  const CosetTable t = coset_enumerate(p, sub, cfg.max_cosets);
  const bool closed = t.status == TcStatus::Closed;
  const bool valid = closed && validate_table(t, p);
  const bool trivial_subgroup = sub.empty();
  bool matches = true;
  BigInt expected = 0;
  if (closed && trivial_subgroup) {
    expected = expected_order(p.context);
    matches = BigInt(t.rows()) == expected;
  }
  if (cfg.output == OutputMode::Json) {
    nlohmann::ordered_json j;
    j["context"] = {{"group_type",
                     std::string(1, group_type_letter(p.context.type))},
                    {"degree", p.context.degree}};
    j["family"] = family_name(p.family);
    auto subj = nlohmann::ordered_json::array();
    for (const Word& w : sub)
      subj.push_back(render(w));
    j["subgroup"] = std::move(subj);
    j["status"] = status_name(t.status);
    j["cosets"] = t.rows();
    j["defined_total"] = t.defined_total;
    j["coincidences"] = t.coincidences;
    if (closed)
      j["valid"] = valid;
    if (closed && trivial_subgroup) {
      j["expected_index"] = expected.convert_to<std::uint64_t>();
      j["matches_expected"] = matches;
    }
    out << j.dump(2) << "\n";
  } else {
    out << context_heading(p.context) << ' ' << family_name(p.family);
    if (trivial_subgroup)
      out << " / trivial subgroup: ";
    else {
      out << " / subgroup <";
      for (std::size_t i = 0; i < sub.size(); ++i)
        out << (i ? ", " : " ") << render(sub[i]);
      out << " >: ";
    }
    if (t.status == TcStatus::Overflowed)
      out << "overflowed after defining " << t.defined_total << " cosets\n";
    else {
      out << "closed with " << t.rows() << " cosets (defined "
          << t.defined_total << ", coincidences " << t.coincidences
          << ", table " << (valid ? "valid" : "INVALID") << ")";
      if (trivial_subgroup)
        out << (matches ? ", matches expected order" : ", EXPECTED " +
                                                           expected.str());
      out << "\n";
    }
  }
  if (t.status == TcStatus::Overflowed)
    return 2;
  return valid && matches ? 0 : 1;
}

int cmd_kb(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Presentation p = build(cfg);
  const RewriteSystem rs =
      kb_complete(p, cfg.max_rules, static_cast<std::size_t>(cfg.max_len));
  if (!cfg.emit_path.empty()) {
    std::ofstream f(cfg.emit_path);
    if (!f) {
      err << "cannot open " << cfg.emit_path << " for writing\n";
      return 3;
    }
    f << rules_to_json(rs);
  }
  std::uint64_t nf = 0;
  bool matches = false;
  BigInt expected = expected_order(p.context);
  if (rs.confluent) {
    nf = enumerate_normal_forms(rs, cfg.bfs_cap);
    matches = BigInt(nf) == expected;
  }
  if (cfg.output == OutputMode::Json) {
    nlohmann::ordered_json j;
    j["context"] = {{"group_type",
                     std::string(1, group_type_letter(p.context.type))},
                    {"degree", p.context.degree}};
    j["family"] = family_name(p.family);
    j["confluent"] = rs.confluent;
    j["rule_cap_hit"] = rs.rule_cap_hit;
    j["rules"] = rs.rules.size();
    if (rs.confluent) {
      j["normal_forms"] = nf;
      j["expected_order"] = expected.convert_to<std::uint64_t>();
      j["matches_expected"] = matches;
    }
    out << j.dump(2) << "\n";
  } else {
    out << context_heading(p.context) << ' ' << family_name(p.family) << ": ";
    if (rs.confluent)
      out << "confluent, " << rs.rules.size() << " rules, " << nf
          << " normal forms"
          << (matches ? " (matches expected order)" : " (EXPECTED " +
                                                          expected.str() + ")")
          << "\n";
    else
      out << "completion stopped (" << rs.rules.size() << " rules, cap hit: "
          << (rs.rule_cap_hit ? "yes" : "no") << ")\n";
  }
  if (!rs.confluent)
    return 2;
  return matches ? 0 : 1;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GroupContext ctx = context_of(cfg);
  RewriteSystem rs;
  if (!cfg.rules_path.empty()) {
    std::ifstream f(cfg.rules_path);
    if (!f) {
      err << "cannot open " << cfg.rules_path << "\n";
      return 3;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    rs = rules_from_json(buf.str(), ctx);
  } else {
    rs = kb_complete(build(cfg), cfg.max_rules,
                     static_cast<std::size_t>(cfg.max_len));
  }
  const Word input = parse_word(cfg.word_text, ctx);
  const Word red = reduce(input, rs);
  const SignedPerm val = eval_word(red);
  const bool consistent = val == eval_word(input);
  if (cfg.output == OutputMode::Json) {
    nlohmann::ordered_json j;
    j["input"] = render(input);
    j["reduced"] = render(red);
    j["element"] = val.str();
    j["consistent"] = consistent;
    out << j.dump(2) << "\n";
  } else {
    out << "input:   " << render(input) << "\n";
    out << "reduced: " << (red.syms.empty() ? "(empty word)" : render(red))
        << "\n";
    out << "element: " << val.str() << "\n";
    if (!consistent)
      out << "WARNING: reduction changed the evaluated element\n";
  }
  return consistent ? 0 : 1;
}

int cmd_sort(const RunConfig& cfg, std::ostream& out) {
  const GroupContext ctx = context_of(cfg);
  const SignedPerm input = SignedPerm::parse(cfg.perm_text);
  const SortCertificate cert = greedy_sort(input, ctx);
  const bool ok = verify_certificate(cert, ctx);
  if (cfg.output == OutputMode::Json) {
    out << certificate_to_json(cert);
  } else {
    out << "input: " << input.str() << "\n";
    out << "word:  "
        << (cert.word.syms.empty() ? "(empty word)" : render(cert.word))
        << "\n";
    out << "flips: " << cert.flip_count << "\n";
    out << "verified: " << (ok ? "yes" : "NO") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_all(const RunConfig& cfg, std::ostream& out) {
  SweepOptions opts;
  opts.bfs_cap = cfg.bfs_cap;
  opts.max_cosets = cfg.max_cosets;
  opts.include_tc = !cfg.skip_tc;
  const SweepReport rep = run_all(opts);
  if (cfg.output == OutputMode::Json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepRow& r : rep.rows) {
      nlohmann::ordered_json e;
      e["group_type"] = std::string(1, group_type_letter(r.type));
      e["degree"] = r.degree;
      e["check"] = r.check;
      e["verdict"] = r.verdict;
      e["detail"] = r.detail;
      rows.push_back(std::move(e));
    }
    nlohmann::ordered_json j;
    j["rows"] = std::move(rows);
    j["exit_code"] = rep.exit_code();
    out << j.dump(2) << "\n";
  } else {
    for (const SweepRow& r : rep.rows) {
      std::ostringstream name;
      name << group_type_letter(r.type) << r.degree;
      out << std::left << std::setw(4) << name.str() << std::setw(18)
          << r.check
          << std::setw(12)
          << (r.verdict == 0 ? "pass" : r.verdict == 1 ? "FAIL" : "overflow")
          << r.detail << "\n";
    }
    out << (rep.exit_code() == 0
                ? "all checks passed"
                : rep.exit_code() == 1 ? "SOME CHECKS FAILED"
                                       : "some checks were inconclusive")
        << "\n";
  }
  return rep.exit_code();
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
    case Command::Present:
      return cmd_present(cfg, out);
    case Command::Verify:
      return cmd_verify(cfg, out);
    case Command::Order:
      return cmd_order(cfg, out);
    case Command::Lemmas:
      return cmd_lemmas(cfg, out);
    case Command::Tc:
      return cmd_tc(cfg, out);
    case Command::Kb:
      return cmd_kb(cfg, out, err);
    case Command::Reduce:
      return cmd_reduce(cfg, out, err);
    case Command::Sort:
      return cmd_sort(cfg, out);
    case Command::Export:
      return cmd_export(cfg, out, err);
    case Command::All:
      return cmd_all(cfg, out);
    }
    err << "unknown command\n";
    return 3;
  } catch (const OverflowError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const NotConfluentError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

// --- sweep -----------------------------------------------------------------

int SweepReport::exit_code() const {
  int code = 0;
  for (const SweepRow& r : rows) {
    if (r.verdict == 1)
      return 1;
    if (r.verdict == 2)
      code = 2;
  }
  return code;
}

namespace {

std::string failure_list(const VerificationReport& rep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : rep.relators_failed) {
    if (!first)
      os << ", ";
    os << label_with_indices(f.label, f.indices);
    first = false;
  }
  for (const auto& f : rep.identities_failed) {
    if (!first)
      os << ", ";
    os << label_with_indices(f.name, f.indices);
    first = false;
  }
  return os.str();
}

SweepRow relator_row(const Presentation& p, const std::string& check) {
  const VerificationReport rep = check_relators(p);
  SweepRow row{p.context.type, p.context.degree, check, 0, ""};
  if (rep.relators_failed.empty()) {
    row.detail = std::to_string(rep.relators_checked) + " relators ok";
  } else {
    row.verdict = 1;
    row.detail = "failed: " + failure_list(rep);
  }
  return row;
}

SweepRow order_row(const Presentation& p, const std::string& check,
                   std::uint64_t cap) {
  SweepRow row{p.context.type, p.context.degree, check, 0, ""};
  try {
    const VerificationReport rep = check_order(p, cap);
    if (rep.ok()) {
      row.detail = "order " + rep.order_found->str();
    } else {
      row.verdict = 1;
      row.detail = "found " + rep.order_found->str() + ", expected " +
                   rep.order_expected->str();
    }
  } catch (const OverflowError&) {
    row.verdict = 2;
    row.detail = "closure exceeded cap " + std::to_string(cap);
  }
  return row;
}

SweepRow tc_row(const Presentation& p, const std::string& check,
                std::int64_t max_cosets) {
  SweepRow row{p.context.type, p.context.degree, check, 0, ""};
  const CosetTable t = coset_enumerate(p, {}, max_cosets);
  if (t.status == TcStatus::Overflowed) {
    row.verdict = 2;
    row.detail = "overflowed at " + std::to_string(t.defined_total) +
                 " cosets defined";
    return row;
  }
  const bool valid = validate_table(t, p);
  const BigInt expected = expected_order(p.context);
  if (!valid || BigInt(t.rows()) != expected) {
    row.verdict = 1;
    row.detail = "cosets " + std::to_string(t.rows()) + ", expected " +
                 expected.str() + (valid ? "" : ", table invalid");
  } else {
    row.detail = std::to_string(t.rows()) + " cosets";
  }
  return row;
}

} // namespace

SweepReport run_all(const SweepOptions& opts) {
  SweepReport rep;
  for (const auto& [type, range] : opts.ranges) {
    for (int n = range.first; n <= range.second; ++n) {
      const GroupContext ctx{type, n};
      Presentation pan = pancake_presentation(ctx);
      Presentation cox = coxeter_presentation(ctx);
      if (opts.mutate) {
        opts.mutate(pan);
        opts.mutate(cox);
      }
      rep.rows.push_back(relator_row(pan, "relators-pancake"));
      rep.rows.push_back(relator_row(cox, "relators-coxeter"));
      {
        const VerificationReport lem = check_lemma_identities(ctx);
        SweepRow row{type, n, "lemmas", 0, ""};
        if (lem.identities_failed.empty()) {
          row.detail = std::to_string(lem.identities_checked) + " identities ok";
        } else {
          row.verdict = 1;
          row.detail = "failed: " + failure_list(lem);
        }
        rep.rows.push_back(std::move(row));
      }
      rep.rows.push_back(order_row(pan, "order-pancake", opts.bfs_cap));
      rep.rows.push_back(order_row(cox, "order-coxeter", opts.bfs_cap));
      const int tc_max = type == GroupType::A ? opts.tc_max_degree_a
                                              : opts.tc_max_degree_bd;
      if (opts.include_tc && n <= tc_max) {
        rep.rows.push_back(tc_row(pan, "tc-pancake", opts.max_cosets));
        rep.rows.push_back(tc_row(cox, "tc-coxeter", opts.max_cosets));
      }
    }
  }
  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const SweepRow& a, const SweepRow& b) {
              if (a.type != b.type)
                return static_cast<int>(a.type) < static_cast<int>(b.type);
              if (a.degree != b.degree)
                return a.degree < b.degree;
              return a.check < b.check;
            });
  return rep;
}

} // namespace flipcox
