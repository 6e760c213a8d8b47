#include <doctest.h>

#include <json.hpp>

#include "runlab/audits.hpp"
#include "runlab/explorer.hpp"
#include "runlab/runs.hpp"
#include "runlab/serialize.hpp"

using namespace runlab;
using nlohmann::json;

TEST_CASE("run records carry the fixed field set") {
  const RunSet runs = enumerate_runs_oracle("abbababbaba");
  const json doc = json::parse(runs_to_json(runs));
  CHECK(doc.at("n") == 11);
  CHECK(doc.at("count") == 6);
  REQUIRE(doc.at("runs").size() == 6);
  const json& record = doc.at("runs").at(2);  // [3..7]
  CHECK(record.at("start") == 3);
  CHECK(record.at("end") == 7);
  CHECK(record.at("period") == 2);
  CHECK(record.at("center") == 5);
  CHECK(record.at("square_end") == 6);
  CHECK(record.at("exponent") == "5/2");
  CHECK(record.size() == 6);  // no extra fields
}

TEST_CASE("json output round-trips byte-identically") {
  const RunSet runs = enumerate_runs_oracle("baabababaababababaab");
  const std::string serialized = runs_to_json(runs);
  CHECK(json::parse(serialized).dump() == serialized);

  SweepOptions options;
  options.alphabet = 2;
  options.max_len = 8;
  const std::string sweep = sweep_to_json(exhaustive_sweep(options));
  CHECK(json::parse(sweep).dump() == sweep);
}

TEST_CASE("csv outputs carry the documented headers") {
  const RunSet runs = enumerate_runs_oracle("aaa");
  const std::string csv = runs_to_csv(runs);
  CHECK(csv == "start,end,period,center,square_end,exponent\n1,3,1,2,2,3/1\n");

  const DensityTable table = density_table(2, 3);
  const std::string density = density_to_csv(table);
  CHECK(density.rfind("n,max_runs,max_sum_exp_num,max_sum_exp_den,witness\n", 0) == 0);
  CHECK(density.find("2,1,2,1,aa\n") != std::string::npos);
}

TEST_CASE("audit serialization keeps entries and counters") {
  const std::string w = "abbababbaba";
  const RunSet runs = enumerate_runs_oracle(w);
  const auto reports = run_audits({AuditId::three_close, AuditId::buckets}, w, runs);
  const json doc = json::parse(audits_to_json(static_cast<int>(w.size()), reports, true));
  CHECK(doc.at("n") == 11);
  CHECK(doc.at("passed") == true);
  CHECK(doc.at("mode") == "assert");
  REQUIRE(doc.at("audits").size() == 2);
  CHECK(doc.at("audits").at(0).at("name") == "three-close");
  CHECK(doc.at("audits").at(1).at("counters").at("total_runs") == 6);
  // per-bucket tallies are part of the serialized report
  CHECK(doc.at("audits").at(1).at("counters").contains("bucket_0"));

  const std::string text = audits_to_text(static_cast<int>(w.size()), reports);
  CHECK(text.find("[pass] three-close") != std::string::npos);
  const std::string csv = audits_to_csv(reports);
  CHECK(csv.rfind("audit,passed,failures,flags\n", 0) == 0);
}

TEST_CASE("fib stats serialization") {
  const FibStats stats = fibonacci_stats(10);
  const json doc = json::parse(fib_to_json(stats));
  CHECK(doc.at("m") == 10);
  CHECK(doc.at("length") == 55);
  CHECK(fib_to_csv(stats).rfind("m,length,runs,ratio_num,ratio_den\n", 0) == 0);
}
