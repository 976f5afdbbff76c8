#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/errors.hpp"

namespace sigma0 {

enum class Verdict { pass, fail, skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::pass: return "pass";
  case Verdict::fail: return "fail";
  case Verdict::skipped: return "skipped";
  }
  return "?";
}

inline Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "skipped") return Verdict::skipped;
  throw parse_error("unknown verdict '" + s + "'");
}

/// Outcome of one check. Numbers are kept as exact decimal strings.
struct CheckReport {
  std::string id;
  std::string range;
  Verdict verdict = Verdict::pass;
  std::string reason; // why skipped
  std::vector<std::pair<std::string, std::string>> witness;
  std::vector<std::string> counterexamples;
  std::vector<std::string> assumed_inputs;

  CheckReport() = default;
  CheckReport(std::string id_, std::string range_) : id(std::move(id_)), range(std::move(range_)) {}

  void note(const std::string& key, const std::string& value) { witness.emplace_back(key, value); }
  void note(const std::string& key, const char* value) { witness.emplace_back(key, value); }
  void note(const std::string& key, const Nat& value) { witness.emplace_back(key, value.str()); }
  void note(const std::string& key, const ExactRatio& value) { witness.emplace_back(key, to_string(value)); }
  template <class I>
    requires std::is_integral_v<I>
  void note(const std::string& key, I value) {
    witness.emplace_back(key, std::to_string(value));
  }

  /// Records a counterexample; the report fails.
  void fail(const std::string& what) {
    verdict = Verdict::fail;
    counterexamples.push_back(what);
  }

  /// fail(what) unless ok; returns ok.
  bool expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
    return ok;
  }

  void skip(const std::string& why) {
    if (verdict != Verdict::fail) verdict = Verdict::skipped;
    reason = why;
  }

  void assume(const std::string& input) {
    for (const auto& a : assumed_inputs)
      if (a == input) return;
    assumed_inputs.push_back(input);
  }

  bool passed() const { return verdict == Verdict::pass; }
};

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.id;
  j["range"] = r.range;
  j["verdict"] = to_string(r.verdict);
  if (!r.reason.empty()) j["reason"] = r.reason;
  auto w = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.witness) w[k] = v;
  j["witness"] = w;
  j["counterexamples"] = r.counterexamples;
  j["assumed_inputs"] = r.assumed_inputs;
  return j;
}

inline CheckReport report_from_json(const nlohmann::ordered_json& j) {
  CheckReport r(j.at("check").get<std::string>(), j.at("range").get<std::string>());
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (j.contains("reason")) r.reason = j.at("reason").get<std::string>();
  for (const auto& [k, v] : j.at("witness").items()) r.witness.emplace_back(k, v.get<std::string>());
  r.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
  r.assumed_inputs = j.at("assumed_inputs").get<std::vector<std::string>>();
  return r;
}

enum class OutputFormat { table, csv, jsonl };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::table;
  if (s == "csv") return OutputFormat::csv;
  if (s == "jsonl") return OutputFormat::jsonl;
  throw parse_error("unknown format '" + s + "' (table, csv, jsonl)");
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string witness_line(const CheckReport& r) {
  std::string s;
  for (const auto& [k, v] : r.witness) s += (s.empty() ? "" : "; ") + k + "=" + v;
  return s;
}

} // namespace detail

inline void write_reports(std::ostream& out, const std::vector<CheckReport>& reports, OutputFormat fmt) {
  switch (fmt) {
  case OutputFormat::jsonl:
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
    break;
  case OutputFormat::csv:
    out << "check,range,verdict,reason,witness,counterexamples,assumed_inputs\n";
    for (const auto& r : reports) {
      std::string ce, as;
      for (const auto& c : r.counterexamples) ce += (ce.empty() ? "" : "; ") + c;
      for (const auto& a : r.assumed_inputs) as += (as.empty() ? "" : "; ") + a;
      out << detail::csv_field(r.id) << ',' << detail::csv_field(r.range) << ',' << to_string(r.verdict) << ','
          << detail::csv_field(r.reason) << ',' << detail::csv_field(detail::witness_line(r)) << ','
          << detail::csv_field(ce) << ',' << detail::csv_field(as) << '\n';
    }
    break;
  case OutputFormat::table: {
    std::size_t wid = 5, wrange = 5;
    for (const auto& r : reports) {
      wid = std::max(wid, r.id.size());
      wrange = std::max(wrange, r.range.size());
    }
    const auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
    out << pad("check", wid) << pad("range", wrange) << "verdict\n";
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
      out << pad(r.id, wid) << pad(r.range, wrange) << to_string(r.verdict);
      if (!r.reason.empty()) out << " (" << r.reason << ")";
      out << '\n';
      for (const auto& c : r.counterexamples) out << "    counterexample: " << c << '\n';
      if (!r.assumed_inputs.empty()) {
        out << "    assumed:";
        for (const auto& a : r.assumed_inputs) out << ' ' << a << ';';
        out << '\n';
      }
      pass += r.verdict == Verdict::pass;
      fail += r.verdict == Verdict::fail;
      skip += r.verdict == Verdict::skipped;
    }
    out << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
    break;
  }
  }
}

} // namespace sigma0
