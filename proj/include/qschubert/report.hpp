#pragma once

// JSON and CSV views of rank results and theorem reports.

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qschubert/conformal_blocks.hpp"
#include "qschubert/text.hpp"

namespace qschubert {

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
inline nlohmann::json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

inline nlohmann::json optional_int(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

inline nlohmann::json rank_result_json(const RankQuery& q, const RankResult& r) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& w : q.weights) weights.push_back(format_weight(w));
  return {
      {"n", q.n},
      {"level", q.level},
      {"weights", weights},
      {"rank", bigint_to_json(r.rank)},
      {"rank_is_lower_bound", r.lower_bound},
      {"dictionary_case", std::string(to_string(r.dictionary_case))},
      {"s", optional_int(r.s)},
      {"grassmannian", r.context_used ? nlohmann::json(to_string(*r.context_used)) : nlohmann::json()},
  };
}

inline nlohmann::json weight_record_json(const WeightRecord& rec) {
  return {
      {"weight", format_weight(rec.weight)},
      {"partition", format_partition(rec.partition)},
      {"rank_or_bound", bigint_to_json(rec.result.rank)},
      {"rank_is_lower_bound", rec.result.lower_bound},
      {"in_lambda", rec.lambda.has_value()},
      {"lambda_witness", rec.lambda ? nlohmann::json{rec.lambda->i, rec.lambda->m} : nlohmann::json()},
      {"dictionary_case", std::string(to_string(rec.result.dictionary_case))},
      {"s", optional_int(rec.result.s)},
      {"consistent", rec.consistent()},
  };
}

inline nlohmann::json theorem_report_json(const TheoremReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : report.records) records.push_back(weight_record_json(rec));
  return {
      {"n", report.n},
      {"level", report.level},
      {"weights", report.records.size()},
      {"verdict", report.pass() ? "PASS" : "FAIL"},
      {"records", std::move(records)},
  };
}

/// One CSV row per weight record of every cell in a sweep report.
inline std::string sweep_report_csv(const nlohmann::json& report) {
  std::ostringstream out;
  out << "n,level,weight,partition,rank_or_bound,rank_is_lower_bound,in_lambda,dictionary_case,s\n";
  for (const auto& cell : report.at("cells")) {
    for (const auto& rec : cell.at("records")) {
      const auto& rank = rec.at("rank_or_bound");
      out << cell.at("n").get<int>() << ',' << cell.at("level").get<int>() << ",\""
          << rec.at("weight").get<std::string>() << "\",\"" << rec.at("partition").get<std::string>() << "\","
          << (rank.is_string() ? rank.get<std::string>() : rank.dump()) << ','
          << (rec.at("rank_is_lower_bound").get<bool>() ? "true" : "false") << ','
          << (rec.at("in_lambda").get<bool>() ? "true" : "false") << ','
          << rec.at("dictionary_case").get<std::string>() << ','
          << (rec.at("s").is_null() ? std::string() : rec.at("s").dump()) << '\n';
    }
  }
  return out.str();
}

}  // namespace qschubert
