#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace runlab {

struct AuditEntry {
  enum class Kind { fail, flag, info };
  Kind kind = Kind::info;
  std::string message;
};

/// Result of one invariant audit over one string. Failures mean the checked
/// property was violated; flags mark noteworthy-but-allowed observations.
struct AuditReport {
  std::string audit;
  std::vector<AuditEntry> entries;
  std::map<std::string, long long> counters;

  bool passed() const {
    for (const auto& e : entries) {
      if (e.kind == AuditEntry::Kind::fail) return false;
    }
    return true;
  }
  void fail(std::string message) {
    entries.push_back({AuditEntry::Kind::fail, std::move(message)});
  }
  void flag(std::string message) {
    entries.push_back({AuditEntry::Kind::flag, std::move(message)});
  }
  void info(std::string message) {
    entries.push_back({AuditEntry::Kind::info, std::move(message)});
  }
  void bump(const std::string& counter, long long delta = 1) { counters[counter] += delta; }
};

/// Aggregated audit outcomes over a string population.
struct SweepReport {
  struct Tally {
    long long strings_checked = 0;
    long long failures = 0;
    long long flags = 0;
    std::vector<std::string> failure_witnesses;  // capped; counts stay exact
  };

  // population descriptor
  std::string kind;  // "exhaustive" | "random"
  int alphabet = 0;
  int min_len = 0;
  int max_len = 0;
  long long population = 0;
  unsigned long long seed = 0;
  std::string generator;  // empty for exhaustive sweeps
  std::string mode;       // "assert" | "survey"

  std::map<std::string, Tally> audits;
  std::map<std::string, long long> counters;

  // extremal statistics with witnesses
  std::string max_runs_ratio;  // runs/n as "num/den"
  std::string max_runs_witness;
  std::string max_sum_exp_ratio;
  std::string max_sum_exp_witness;

  bool passed() const {
    for (const auto& [name, tally] : audits) {
      if (tally.failures > 0) return false;
    }
    return true;
  }
};

constexpr int kWitnessCap = 10;

/// One row of the run-density table.
struct DensityRow {
  int n = 0;
  long long max_runs = 0;
  std::string max_sum_exp;  // "num/den"
  std::string runs_witness;
  std::string sum_exp_witness;
};

struct DensityTable {
  int alphabet = 0;
  std::vector<DensityRow> rows;
  bool density_bound_holds = true;  // max_runs <= n on every row (checked for k=2)
};

}  // namespace runlab
