#include "runlab/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace runlab {

using nlohmann::json;

namespace {

const char* kind_name(AuditEntry::Kind kind) {
  switch (kind) {
    case AuditEntry::Kind::fail: return "fail";
    case AuditEntry::Kind::flag: return "flag";
    case AuditEntry::Kind::info: return "info";
  }
  return "?";
}

json run_record(const Run& run) {
  return json{{"start", run.start},
              {"end", run.end},
              {"period", run.period},
              {"center", run.center()},
              {"square_end", run.square_end()},
              {"exponent", run.exponent().str()}};
}

json report_record(const AuditReport& report) {
  json entries = json::array();
  for (const auto& entry : report.entries) {
    entries.push_back(json{{"kind", kind_name(entry.kind)}, {"message", entry.message}});
  }
  return json{{"name", report.audit},
              {"passed", report.passed()},
              {"counters", report.counters},
              {"entries", entries}};
}

}  // namespace

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::human: return "human";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "?";
}

std::string runs_to_json(const RunSet& runs) {
  json doc;
  doc["n"] = runs.n();
  doc["count"] = runs.size();
  json records = json::array();
  for (const Run& run : runs.runs()) records.push_back(run_record(run));
  doc["runs"] = std::move(records);
  return doc.dump();
}

std::string runs_to_csv(const RunSet& runs) {
  std::ostringstream out;
  out << "start,end,period,center,square_end,exponent\n";
  for (const Run& run : runs.runs()) {
    out << run.start << ',' << run.end << ',' << run.period << ',' << run.center() << ','
        << run.square_end() << ',' << run.exponent().str() << '\n';
  }
  return out.str();
}

std::string runs_to_text(const RunSet& runs) {
  std::ostringstream out;
  out << runs.size() << " run(s) in a string of length " << runs.n() << "\n";
  if (!runs.empty()) {
    out << "start   end     period  center  sq_end  exponent\n";
    for (const Run& run : runs.runs()) {
      char line[128];
      std::snprintf(line, sizeof line, "%-7d %-7d %-7d %-7d %-7d %s\n", run.start, run.end,
                    run.period, run.center(), run.square_end(), run.exponent().str().c_str());
      out << line;
    }
  }
  return out.str();
}

std::string audits_to_json(int n, const std::vector<AuditReport>& reports, bool assert_mode) {
  json doc;
  doc["n"] = n;
  doc["mode"] = assert_mode ? "assert" : "survey";
  bool all_passed = true;
  json items = json::array();
  for (const auto& report : reports) {
    all_passed = all_passed && report.passed();
    items.push_back(report_record(report));
  }
  doc["passed"] = all_passed;
  doc["audits"] = std::move(items);
  return doc.dump();
}

std::string audits_to_csv(const std::vector<AuditReport>& reports) {
  std::ostringstream out;
  out << "audit,passed,failures,flags\n";
  for (const auto& report : reports) {
    long long failures = 0, flags = 0;
    for (const auto& entry : report.entries) {
      if (entry.kind == AuditEntry::Kind::fail) ++failures;
      if (entry.kind == AuditEntry::Kind::flag) ++flags;
    }
    out << report.audit << ',' << (report.passed() ? "true" : "false") << ',' << failures << ','
        << flags << '\n';
  }
  return out.str();
}

std::string audits_to_text(int n, const std::vector<AuditReport>& reports) {
  std::ostringstream out;
  out << "auditing string of length " << n << "\n";
  for (const auto& report : reports) {
    out << "[" << (report.passed() ? "pass" : "FAIL") << "] " << report.audit;
    if (!report.counters.empty()) {
      out << "  (";
      bool first = true;
      for (const auto& [key, value] : report.counters) {
        if (!first) out << ", ";
        first = false;
        out << key << "=" << value;
      }
      out << ")";
    }
    out << "\n";
    for (const auto& entry : report.entries) {
      out << "    " << kind_name(entry.kind) << ": " << entry.message << "\n";
    }
  }
  return out.str();
}

namespace {

json sweep_record(const SweepReport& report) {
  json audits;
  for (const auto& [name, tally] : report.audits) {
    audits[name] = json{{"strings_checked", tally.strings_checked},
                        {"failures", tally.failures},
                        {"flags", tally.flags},
                        {"failure_witnesses", tally.failure_witnesses}};
  }
  json doc{{"kind", report.kind},
           {"alphabet", report.alphabet},
           {"min_len", report.min_len},
           {"max_len", report.max_len},
           {"population", report.population},
           {"mode", report.mode},
           {"passed", report.passed()},
           {"audits", std::move(audits)},
           {"counters", report.counters},
           {"max_runs_ratio", report.max_runs_ratio},
           {"max_runs_witness", report.max_runs_witness},
           {"max_sum_exp_ratio", report.max_sum_exp_ratio},
           {"max_sum_exp_witness", report.max_sum_exp_witness}};
  if (report.kind == "random") {
    doc["seed"] = report.seed;
    doc["generator"] = report.generator;
  }
  return doc;
}

}  // namespace

std::string sweep_to_json(const SweepReport& report) { return sweep_record(report).dump(); }

std::string sweep_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "audit,strings_checked,failures,flags\n";
  for (const auto& [name, tally] : report.audits) {
    out << name << ',' << tally.strings_checked << ',' << tally.failures << ',' << tally.flags
        << '\n';
  }
  return out.str();
}

std::string sweep_to_text(const SweepReport& report) {
  std::ostringstream out;
  out << report.kind << " sweep: alphabet " << report.alphabet;
  if (report.kind == "random") {
    out << ", length " << report.max_len << ", samples " << report.population << ", seed "
        << report.seed << ", generator " << report.generator;
  } else {
    out << ", lengths " << report.min_len << ".." << report.max_len << ", "
        << report.population << " canonical strings";
  }
  out << ", mode " << report.mode << "\n";
  out << "result: " << (report.passed() ? "all audits clean" : "FAILURES FOUND") << "\n";
  for (const auto& [name, tally] : report.audits) {
    out << "  " << name << ": checked " << tally.strings_checked << ", failures "
        << tally.failures << ", flags " << tally.flags << "\n";
    for (const auto& witness : tally.failure_witnesses) {
      out << "    witness: " << witness << "\n";
    }
  }
  if (!report.max_runs_ratio.empty()) {
    out << "  max runs/n = " << report.max_runs_ratio << " at \"" << report.max_runs_witness
        << "\"\n";
    out << "  max sum-exp/n = " << report.max_sum_exp_ratio << " at \""
        << report.max_sum_exp_witness << "\"\n";
  }
  for (const auto& [key, value] : report.counters) {
    out << "  counter " << key << " = " << value << "\n";
  }
  return out.str();
}

std::string density_to_json(const DensityTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back(json{{"n", row.n},
                        {"max_runs", row.max_runs},
                        {"max_sum_exp", row.max_sum_exp},
                        {"runs_witness", row.runs_witness},
                        {"sum_exp_witness", row.sum_exp_witness}});
  }
  return json{{"alphabet", table.alphabet},
              {"density_bound_holds", table.density_bound_holds},
              {"rows", std::move(rows)}}
      .dump();
}

std::string density_to_csv(const DensityTable& table) {
  std::ostringstream out;
  out << "n,max_runs,max_sum_exp_num,max_sum_exp_den,witness\n";
  for (const auto& row : table.rows) {
    const Rational max_sum = Rational::parse(row.max_sum_exp);
    out << row.n << ',' << row.max_runs << ',' << max_sum.num().str() << ','
        << max_sum.den().str() << ',' << row.runs_witness << '\n';
  }
  return out.str();
}

std::string density_to_text(const DensityTable& table) {
  std::ostringstream out;
  out << "run density over alphabet size " << table.alphabet << "\n";
  out << "n       max_runs  max_sum_exp   witness\n";
  for (const auto& row : table.rows) {
    char line[256];
    std::snprintf(line, sizeof line, "%-7d %-9lld %-13s %s\n", row.n, row.max_runs,
                  row.max_sum_exp.c_str(), row.runs_witness.c_str());
    out << line;
  }
  return out.str();
}

std::string fib_to_json(const FibStats& stats) {
  return json{{"m", stats.m},
              {"length", stats.length},
              {"runs", stats.runs},
              {"ratio", stats.ratio.str()}}
      .dump();
}

std::string fib_to_csv(const FibStats& stats) {
  std::ostringstream out;
  out << "m,length,runs,ratio_num,ratio_den\n";
  out << stats.m << ',' << stats.length << ',' << stats.runs << ',' << stats.ratio.num().str()
      << ',' << stats.ratio.den().str() << '\n';
  return out.str();
}

std::string fib_to_text(const FibStats& stats) {
  std::ostringstream out;
  out << "F_" << stats.m << ": length " << stats.length << ", runs " << stats.runs
      << ", runs/length = " << stats.ratio.str() << "\n";
  return out.str();
}

}  // namespace runlab
