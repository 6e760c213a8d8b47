#pragma once

#include <string>
#include <vector>

#include "runlab/explorer.hpp"
#include "runlab/report.hpp"
#include "runlab/runs.hpp"

// Machine-readable output. Positions are 1-based everywhere; rationals are
// serialized as "num/den" strings, never floats.
//
// JSON run record (field names are a fixed contract):
//   {"start":int,"end":int,"period":int,"center":int,"square_end":int,
//    "exponent":"num/den"}
// CSV density row: n,max_runs,max_sum_exp_num,max_sum_exp_den,witness

namespace runlab {

enum class OutputFormat { human, json, csv };

std::string format_name(OutputFormat f);

std::string runs_to_json(const RunSet& runs);
std::string runs_to_csv(const RunSet& runs);
std::string runs_to_text(const RunSet& runs);

std::string audits_to_json(int n, const std::vector<AuditReport>& reports, bool assert_mode);
std::string audits_to_csv(const std::vector<AuditReport>& reports);
std::string audits_to_text(int n, const std::vector<AuditReport>& reports);

std::string sweep_to_json(const SweepReport& report);
std::string sweep_to_csv(const SweepReport& report);
std::string sweep_to_text(const SweepReport& report);

std::string density_to_json(const DensityTable& table);
std::string density_to_csv(const DensityTable& table);
std::string density_to_text(const DensityTable& table);

std::string fib_to_json(const FibStats& stats);
std::string fib_to_csv(const FibStats& stats);
std::string fib_to_text(const FibStats& stats);

}  // namespace runlab
