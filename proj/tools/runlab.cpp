// runlab: enumerate maximal repetitions (runs) in strings and audit the
// combinatorial structure of their centers, periods and exponents.
//
// Exit codes: 0 clean, 1 audit failure in assert mode, 2 usage or input
// error, 3 work-budget refusal. All positions in the output are 1-based;
// rationals print as "num/den".

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "runlab/audits.hpp"
#include "runlab/explorer.hpp"
#include "runlab/lce.hpp"
#include "runlab/periods.hpp"
#include "runlab/runs.hpp"
#include "runlab/serialize.hpp"

namespace {

using namespace runlab;

constexpr int kExitClean = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
  std::string format = "human";
  std::string mode = "assert";
  int threads = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;

  OutputFormat output() const {
    if (format == "json") return OutputFormat::json;
    if (format == "csv") return OutputFormat::csv;
    return OutputFormat::human;
  }
  bool assert_mode() const { return mode == "assert"; }
};

struct InputOptions {
  std::string literal;
  bool literal_given = false;
  std::string file;
  bool use_stdin = false;
  int alphabet_check = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& input) {
  cmd->add_option("string", input.literal, "Input string (raw bytes)")
      ->trigger_on_parse()
      ->each([&input](const std::string&) { input.literal_given = true; });
  cmd->add_option("--file", input.file, "Read the input from a file (raw bytes, no stripping)");
  cmd->add_flag("--stdin", input.use_stdin, "Read the input from standard input");
  cmd->add_option("--alphabet-check", input.alphabet_check,
                  "Reject inputs with more than this many distinct symbols");
}

std::string read_input(const InputOptions& input) {
  const int sources = (input.literal_given ? 1 : 0) + (!input.file.empty() ? 1 : 0) +
                      (input.use_stdin ? 1 : 0);
  if (sources != 1) {
    throw std::invalid_argument(sources == 0 ? "no input given (string, --file or --stdin)"
                                             : "exactly one input source expected");
  }
  std::string data;
  if (input.literal_given) {
    data = input.literal;
  } else if (!input.file.empty()) {
    std::ifstream in(input.file, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + input.file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    data = buffer.str();
  } else {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    data = buffer.str();
  }
  if (data.empty()) throw std::invalid_argument("empty input string");
  if (input.alphabet_check > 0) {
    bool seen[256] = {};
    int distinct = 0;
    for (unsigned char c : data) {
      if (!seen[c]) {
        seen[c] = true;
        ++distinct;
      }
    }
    if (distinct > input.alphabet_check) {
      throw std::invalid_argument("input uses " + std::to_string(distinct) +
                                  " distinct symbols, above the declared alphabet of " +
                                  std::to_string(input.alphabet_check));
    }
  }
  return data;
}

struct AuditFlags {
  bool all = false;
  std::vector<std::string> selected;
};

void add_audit_flags(CLI::App* cmd, AuditFlags& flags) {
  cmd->add_flag("--all", flags.all, "Run every audit (default when none selected)");
  for (AuditId id : all_audits()) {
    const std::string name(audit_name(id));
    cmd->add_flag_callback(
        "--" + name, [&flags, name] { flags.selected.push_back(name); },
        "Select the " + name + " audit");
  }
}

std::vector<AuditId> resolve_audits(const AuditFlags& flags) {
  if (flags.all || flags.selected.empty()) return all_audits();
  std::vector<AuditId> ids;
  for (const auto& name : flags.selected) {
    const auto id = audit_from_name(name);
    if (!id) throw std::invalid_argument("unknown audit: " + name);
    ids.push_back(*id);
  }
  return ids;
}

int cmd_runs(const GlobalOptions& global, const InputOptions& input, bool use_oracle) {
  const std::string w = read_input(input);
  const RunSet runs = use_oracle ? enumerate_runs_oracle(w) : enumerate_runs_fast(w);
  switch (global.output()) {
    case OutputFormat::json: std::cout << runs_to_json(runs) << "\n"; break;
    case OutputFormat::csv: std::cout << runs_to_csv(runs); break;
    case OutputFormat::human: std::cout << runs_to_text(runs); break;
  }
  return kExitClean;
}

int cmd_audit(const GlobalOptions& global, const InputOptions& input, const AuditFlags& flags,
              long long audit_budget) {
  const std::string w = read_input(input);
  const auto ids = resolve_audits(flags);
  const RunSet runs = w.size() <= 64 ? enumerate_runs_oracle(w) : enumerate_runs_fast(w);
  AuditOptions options;
  if (audit_budget > 0) options.work_budget = audit_budget;
  const auto reports = run_audits(ids, w, runs, options);
  switch (global.output()) {
    case OutputFormat::json:
      std::cout << audits_to_json(static_cast<int>(w.size()), reports, global.assert_mode())
                << "\n";
      break;
    case OutputFormat::csv: std::cout << audits_to_csv(reports); break;
    case OutputFormat::human:
      std::cout << audits_to_text(static_cast<int>(w.size()), reports);
      break;
  }
  bool all_passed = true;
  for (const auto& report : reports) all_passed = all_passed && report.passed();
  return all_passed || !global.assert_mode() ? kExitClean : kExitAuditFailure;
}

int emit_sweep(const GlobalOptions& global, const SweepReport& report) {
  switch (global.output()) {
    case OutputFormat::json: std::cout << sweep_to_json(report) << "\n"; break;
    case OutputFormat::csv: std::cout << sweep_to_csv(report); break;
    case OutputFormat::human: std::cout << sweep_to_text(report); break;
  }
  return report.passed() || !global.assert_mode() ? kExitClean : kExitAuditFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"runs (maximal repetitions) enumerator and structure auditor"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--mode", global.mode,
                 "assert: nonzero exit on audit failure; survey: record only")
      ->check(CLI::IsMember({"assert", "survey"}))
      ->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", global.seed, "Seed for random sweeps")
      ->trigger_on_parse()
      ->each([&global](const std::string&) { global.seed_given = true; });

  // runs
  auto* runs_cmd = app.add_subcommand("runs", "Enumerate all runs of one string");
  InputOptions runs_input;
  add_input_options(runs_cmd, runs_input);
  bool use_oracle = false, use_fast = false;
  runs_cmd->add_flag("--oracle", use_oracle, "Use the quadratic definition-faithful enumerator");
  runs_cmd->add_flag("--fast", use_fast, "Use the LCE-anchored enumerator (default)");

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "Run structure audits on one string");
  InputOptions audit_input;
  add_input_options(audit_cmd, audit_input);
  AuditFlags audit_flags;
  add_audit_flags(audit_cmd, audit_flags);
  long long audit_budget = 0;
  audit_cmd->add_option("--audit-budget", audit_budget,
                        "Work budget for quadratic audits (ops; raises the skip threshold)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Audit a population of strings");
  bool sweep_random = false;
  int sweep_k = 2, sweep_n = 14, sweep_min = 1;
  long long sweep_samples = 1000, sweep_budget = 0;
  sweep_cmd->add_flag("--random", sweep_random,
                      "Random sampling instead of exhaustive canonical enumeration");
  sweep_cmd->add_option("-k,--alphabet", sweep_k, "Alphabet size")->capture_default_str();
  sweep_cmd->add_option("-n,--length", sweep_n,
                        "Max length (exhaustive) or string length (random)")
      ->capture_default_str();
  sweep_cmd->add_option("--min-length", sweep_min, "Min length for exhaustive sweeps")
      ->capture_default_str();
  sweep_cmd->add_option("--samples", sweep_samples, "Sample count for random sweeps")
      ->capture_default_str();
  sweep_cmd->add_option("--budget", sweep_budget, "Work-estimate budget (ops)");
  AuditFlags sweep_flags;
  add_audit_flags(sweep_cmd, sweep_flags);

  // density
  auto* density_cmd = app.add_subcommand("density", "Max runs and exponent sums per length");
  int density_k = 2, density_n = 10;
  long long density_budget = 0;
  density_cmd->add_option("-k,--alphabet", density_k, "Alphabet size")->capture_default_str();
  density_cmd->add_option("-n,--max-length", density_n, "Max length")->capture_default_str();
  density_cmd->add_option("--budget", density_budget, "Work-estimate budget (ops)");

  // fib
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci word and its run statistics");
  int fib_m = 10;
  bool fib_stats_flag = false;
  long long fib_max_len = 64'000'000;
  fib_cmd->add_option("-m,--index", fib_m, "Index m of F_m (F_1 = \"b\", F_2 = \"a\")")
      ->capture_default_str();
  fib_cmd->add_flag("--stats", fib_stats_flag, "Print run statistics instead of the word");
  fib_cmd->add_option("--max-length", fib_max_len, "Length guard")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (runs_cmd->parsed()) {
      if (use_oracle && use_fast) throw std::invalid_argument("choose one of --oracle/--fast");
      return cmd_runs(global, runs_input, use_oracle);
    }
    if (audit_cmd->parsed()) {
      return cmd_audit(global, audit_input, audit_flags, audit_budget);
    }
    if (sweep_cmd->parsed()) {
      SweepOptions options;
      options.alphabet = sweep_k;
      options.assert_mode = global.assert_mode();
      options.threads = global.threads;
      options.audits = resolve_audits(sweep_flags);
      if (sweep_budget > 0) options.budget = sweep_budget;
      SweepReport report;
      if (sweep_random) {
        if (!global.seed_given) {
          throw std::invalid_argument("random sweeps require an explicit --seed");
        }
        options.len = sweep_n;
        options.samples = sweep_samples;
        options.seed = global.seed;
        report = random_sweep(options);
      } else {
        options.min_len = sweep_min;
        options.max_len = sweep_n;
        report = exhaustive_sweep(options);
      }
      return emit_sweep(global, report);
    }
    if (density_cmd->parsed()) {
      const DensityTable table =
          density_table(density_k, density_n,
                        density_budget > 0 ? density_budget : 600'000'000, global.threads);
      switch (global.output()) {
        case OutputFormat::json: std::cout << density_to_json(table) << "\n"; break;
        case OutputFormat::csv: std::cout << density_to_csv(table); break;
        case OutputFormat::human: std::cout << density_to_text(table); break;
      }
      return table.density_bound_holds || !global.assert_mode() ? kExitClean
                                                                : kExitAuditFailure;
    }
    if (fib_cmd->parsed()) {
      if (fib_stats_flag) {
        const FibStats stats = fibonacci_stats(fib_m, fib_max_len);
        switch (global.output()) {
          case OutputFormat::json: std::cout << fib_to_json(stats) << "\n"; break;
          case OutputFormat::csv: std::cout << fib_to_csv(stats); break;
          case OutputFormat::human: std::cout << fib_to_text(stats); break;
        }
      } else {
        std::cout << fibonacci_word(fib_m, fib_max_len) << "\n";
      }
      return kExitClean;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << " (raise --budget to override)\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
