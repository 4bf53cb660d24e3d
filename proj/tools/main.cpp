#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "flipcox/cli.hpp"

namespace {

using flipcox::Command;
using flipcox::RunConfig;

void add_context_flags(CLI::App* sub, RunConfig& cfg, bool with_family) {
  sub->add_option_function<std::string>(
         "--type",
         [&cfg](const std::string& s) {
           cfg.group_type = flipcox::group_type_from_letter(s.at(0));
         },
         "Group type: A, B or D")
      ->check(CLI::IsMember({"A", "B", "D", "a", "b", "d"}))
      ->required();
  sub->add_option("--n", cfg.degree, "Degree n")->required();
  if (with_family)
    sub->add_option_function<std::string>(
           "--family",
           [&cfg](const std::string& s) {
             cfg.family = flipcox::family_from_name(s);
           },
           "Presentation family: pancake (default) or coxeter")
        ->check(CLI::IsMember({"pancake", "coxeter"}));
}

void add_json_flag(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag_callback(
      "--json", [&cfg] { cfg.output = flipcox::OutputMode::Json; },
      "Emit JSON instead of text");
}

void add_bfs_cap(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--cap", cfg.bfs_cap, "Element budget for closures")
      ->envname("FLIPCOX_BFS_CAP");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prefix reversal presentations of the classical reflection "
               "groups: construction, verification and sorting tools"};
  app.require_subcommand(1);

  RunConfig cfg;

  CLI::App* present = app.add_subcommand(
      "present", "Print a presentation (generators and relators)");
  add_context_flags(present, cfg, true);
  add_json_flag(present, cfg);
  present->callback([&cfg] { cfg.command = Command::Present; });

  CLI::App* verify = app.add_subcommand(
      "verify", "Evaluate every relator in the permutation group");
  add_context_flags(verify, cfg, true);
  add_json_flag(verify, cfg);
  verify->callback([&cfg] { cfg.command = Command::Verify; });

  CLI::App* order = app.add_subcommand(
      "order", "Close the generating set and compare with the group order");
  add_context_flags(order, cfg, true);
  add_json_flag(order, cfg);
  add_bfs_cap(order, cfg);
  order->callback([&cfg] { cfg.command = Command::Order; });

  CLI::App* lemmas = app.add_subcommand(
      "lemmas", "Check the generator change-of-basis identity suite");
  add_context_flags(lemmas, cfg, false);
  add_json_flag(lemmas, cfg);
  lemmas->callback([&cfg] { cfg.command = Command::Lemmas; });

  CLI::App* tc = app.add_subcommand(
      "tc", "Coset enumeration against the presentation");
  add_context_flags(tc, cfg, true);
  add_json_flag(tc, cfg);
  tc->add_option("--subgroup", cfg.subgroup,
                 "Subgroup generator word (repeatable)");
  tc->add_option("--max-cosets", cfg.max_cosets, "Coset definition budget")
      ->envname("FLIPCOX_MAX_COSETS");
  tc->callback([&cfg] { cfg.command = Command::Tc; });

  CLI::App* kb = app.add_subcommand(
      "kb", "Shortlex Knuth-Bendix completion of the presentation");
  add_context_flags(kb, cfg, true);
  add_json_flag(kb, cfg);
  add_bfs_cap(kb, cfg);
  kb->add_option("--max-rules", cfg.max_rules, "Active rule budget")
      ->envname("FLIPCOX_MAX_RULES");
  kb->add_option("--max-len", cfg.max_len, "Rule left-side length budget")
      ->envname("FLIPCOX_MAX_LEN");
  kb->add_option("--emit", cfg.emit_path, "Write the rule set to a file");
  kb->callback([&cfg] { cfg.command = Command::Kb; });

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Rewrite a word to its shortlex normal form");
  add_context_flags(reduce, cfg, true);
  add_json_flag(reduce, cfg);
  reduce->add_option("--word", cfg.word_text, "Word to reduce")->required();
  reduce->add_option("--rules", cfg.rules_path,
                     "Load a rule set instead of completing first");
  reduce->add_option("--max-rules", cfg.max_rules, "Active rule budget")
      ->envname("FLIPCOX_MAX_RULES");
  reduce->add_option("--max-len", cfg.max_len, "Rule left-side length budget")
      ->envname("FLIPCOX_MAX_LEN");
  reduce->callback([&cfg] { cfg.command = Command::Reduce; });

  CLI::App* sort = app.add_subcommand(
      "sort", "Greedy prefix reversal sorting with a verified certificate");
  add_context_flags(sort, cfg, false);
  add_json_flag(sort, cfg);
  sort->add_option("--perm", cfg.perm_text, "Window to sort, e.g. [3,1,-2]")
      ->required();
  sort->callback([&cfg] { cfg.command = Command::Sort; });

  CLI::App* exp = app.add_subcommand(
      "export", "Write a presentation as JSON or as a GAP script");
  add_context_flags(exp, cfg, true);
  exp->add_option_function<std::string>(
         "--format",
         [&cfg](const std::string& s) {
           cfg.export_format = s == "gap" ? flipcox::ExportFormat::GapScript
                                          : flipcox::ExportFormat::Json;
         },
         "json (default) or gap")
      ->check(CLI::IsMember({"json", "gap"}));
  exp->add_option("-o,--out", cfg.out_path, "Output file (default stdout)");
  exp->callback([&cfg] { cfg.command = Command::Export; });

  CLI::App* all = app.add_subcommand(
      "all", "Run the whole verification sweep across types and degrees");
  add_json_flag(all, cfg);
  all->add_option("--cap", cfg.bfs_cap, "Element budget for closures")
      ->envname("FLIPCOX_BFS_CAP");
  all->add_option("--max-cosets", cfg.max_cosets, "Coset definition budget")
      ->envname("FLIPCOX_MAX_COSETS");
  all->add_flag("--skip-tc", cfg.skip_tc, "Skip the coset enumeration rows");
  all->callback([&cfg] { cfg.command = Command::All; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const flipcox::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  return flipcox::run(cfg, std::cout, std::cerr);
}
