#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "flipcox/presentation.hpp"

namespace flipcox {

enum class Command {
  Present,
  Verify,
  Order,
  Lemmas,
  Tc,
  Kb,
  Reduce,
  Sort,
  Export,
  All
};

enum class OutputMode { Text, Json };

/// Everything a CLI invocation needs, decoupled from flag parsing so runs
/// can be driven in-process.
struct RunConfig {
  Command command = Command::Present;
  GroupType group_type = GroupType::A;
  int degree = 4;
  Family family = Family::Pancake;
  OutputMode output = OutputMode::Text;

  std::uint64_t bfs_cap = 2000000;       // closure / normal form budget
  std::int64_t max_cosets = 5000000;     // coset enumeration budget
  int max_rules = 20000;                 // completion budgets
  int max_len = 64;

  std::string word_text;                 // reduce
  std::string perm_text;                 // sort
  std::vector<std::string> subgroup;     // tc
  std::string rules_path;                // reduce: load rules
  std::string emit_path;                 // kb: save rules
  std::string out_path;                  // export
  ExportFormat export_format = ExportFormat::Json;
  bool skip_tc = false;                  // all
};

/// Exit codes: 0 = verified / done, 1 = a check failed, 2 = inconclusive
/// (some budget overflowed or completion did not finish), 3 = usage error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// --- full sweep ------------------------------------------------------------

struct SweepOptions {
  std::uint64_t bfs_cap = 2000000;
  std::int64_t max_cosets = 5000000;
  bool include_tc = true;
  /// Inclusive degree ranges per type for the relator/order/identity checks.
  std::vector<std::pair<GroupType, std::pair<int, int>>> ranges = {
      {GroupType::A, {4, 8}}, {GroupType::B, {4, 6}}, {GroupType::D, {4, 6}}};
  /// Coset enumeration is capped at lower degrees (index grows factorially).
  int tc_max_degree_a = 7;
  int tc_max_degree_bd = 5;
  /// Test seam: applied to every presentation after construction.
  std::function<void(Presentation&)> mutate;
};

struct SweepRow {
  GroupType type{GroupType::A};
  int degree = 0;
  std::string check;
  int verdict = 0; // 0 pass, 1 fail, 2 inconclusive
  std::string detail;
};

struct SweepReport {
  std::vector<SweepRow> rows;

  /// Worst verdict wins: any failure beats any overflow beats success.
  int exit_code() const;
};

SweepReport run_all(const SweepOptions& opts);

} // namespace flipcox
