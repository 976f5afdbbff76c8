#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sigma0/combinat.hpp"
#include "sigma0/families/counts.hpp"
#include "sigma0/verify/report.hpp"

namespace sigma0 {

/// One row of the sigma_0(S_n) table: an exact value or an interval [low, high].
struct TheoremRow {
  unsigned n = 0;
  std::string regime; // "small", "power of two", "3*2^a", "general"
  Nat low, high;      // equal for exact rows
  std::vector<std::string> certified_by;

  bool exact() const { return low == high; }
  std::string value() const { return exact() ? low.str() : "[" + low.str() + ", " + high.str() + "]"; }
};

/// Degrees whose unbeatable verdict is checked case by case.
inline const std::vector<unsigned>& unbeatable_small_degrees() {
  static const std::vector<unsigned> d{5, 7, 9, 10, 11, 13, 14, 18, 20, 40};
  return d;
}

/// Claimed sigma_0(S_n) for 3 <= n <= n_max, with the checks behind each row.
inline std::vector<TheoremRow> reproduce_theorem_table(unsigned n_max = 64) {
  if (n_max < 3 || n_max > 64) throw precondition_error("reproduce_theorem_table: need 3 <= n_max <= 64");
  std::vector<TheoremRow> rows;
  for (unsigned n = 3; n <= n_max; ++n) {
    TheoremRow row;
    row.n = n;
    const auto a = static_cast<unsigned>(__builtin_ctz(n));
    if (n == 3 || n == 6) {
      row.regime = "small";
      row.low = row.high = n == 3 ? 4 : 7;
      row.certified_by = {"sigma0-small", "solvable"};
      if (n == 6) row.certified_by = {"s6", "sigma0-small"};
    } else if (is_power_of_two(n)) {
      row.regime = "power of two";
      row.low = row.high = trivial_upper_bound(n);
      row.certified_by = {"power2(a=" + std::to_string(a) + ")", "trivial-bound"};
      if (n == 4) row.certified_by.push_back("sigma0-small");
    } else if (n == 3u << a) {
      row.regime = "3*2^a";
      const auto b = bounds_3_2a(a);
      row.low = b.c1;
      row.high = b.c2;
      row.certified_by = {"32a(a=" + std::to_string(a) + ")", "subsum"};
    } else {
      row.regime = "general";
      row.low = row.high = trivial_upper_bound(n);
      row.certified_by = {"trivial-bound", "unbeatable(n=" + std::to_string(n) + ")"};
      if (n == 5) row.certified_by.push_back("s5");
      if (n == 7) row.certified_by.push_back("sigma0-small");
      if (n == 10) row.certified_by.push_back("s10");
      if (n >= 15 && (n % 2 == 1 || (n >= 22 && n != 40))) row.certified_by.push_back("f-char");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::ordered_json to_json(const TheoremRow& row) {
  nlohmann::ordered_json j;
  j["n"] = row.n;
  j["regime"] = row.regime;
  if (row.exact()) {
    j["sigma0"] = row.low.str();
  } else {
    j["low"] = row.low.str();
    j["high"] = row.high.str();
  }
  j["certified_by"] = row.certified_by;
  return j;
}

inline void write_table(std::ostream& out, const std::vector<TheoremRow>& rows, OutputFormat fmt) {
  const auto joined = [](const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
  };
  switch (fmt) {
  case OutputFormat::jsonl:
    for (const auto& r : rows) out << to_json(r).dump() << '\n';
    break;
  case OutputFormat::csv:
    out << "n,regime,low,high,certified_by\n";
    for (const auto& r : rows)
      out << r.n << ',' << r.regime << ',' << r.low << ',' << r.high << ',' << detail::csv_field(joined(r.certified_by, "; "))
          << '\n';
    break;
  case OutputFormat::table:
    for (const auto& r : rows) {
      std::string n = std::to_string(r.n);
      out << std::string(4 - std::min<std::size_t>(4, n.size()), ' ') << n << "  " << r.value() << "  ("
          << joined(r.certified_by, ", ") << ")\n";
    }
    break;
  }
}

} // namespace sigma0
