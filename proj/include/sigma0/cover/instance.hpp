#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sigma0/errors.hpp"
#include "sigma0/perm/corpus.hpp"

namespace sigma0 {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct CoverSet {
  std::string label;                  // provenance, e.g. "X1{3}" or "W5{1,2,3,4,5}{6,7,8,9,10}"
  std::vector<std::uint32_t> members; // sorted element ids
};

/// Universe {0, ..., universe-1} and candidate sets over it.
struct CoverInstance {
  std::size_t universe = 0;
  std::vector<CoverSet> sets;

  void add_set(std::string label, std::vector<std::uint32_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= universe)
      throw precondition_error("CoverInstance: element id " + std::to_string(members.back()) + " outside universe");
    sets.push_back({std::move(label), std::move(members)});
  }

  /// Candidate set indices per element.
  std::vector<std::vector<std::uint32_t>> candidates() const {
    std::vector<std::vector<std::uint32_t>> c(universe);
    for (std::size_t s = 0; s < sets.size(); ++s)
      for (auto e : sets[s].members) c[e].push_back(static_cast<std::uint32_t>(s));
    return c;
  }

  /// Elements lying in no set.
  std::vector<std::uint32_t> uncoverable() const {
    Bits hit(universe);
    for (const auto& s : sets)
      for (auto e : s.members) hit.set(e);
    std::vector<std::uint32_t> out;
    for (std::size_t e = 0; e < universe; ++e)
      if (!hit.test(e)) out.push_back(static_cast<std::uint32_t>(e));
    return out;
  }

  bool feasible() const { return uncoverable().empty(); }

  /// Text form: `universe <count>` then `set <id> <label>: e,e,...`.
  void dump(std::ostream& out) const {
    out << "universe " << universe << '\n';
    for (std::size_t s = 0; s < sets.size(); ++s) {
      out << "set " << s << ' ' << sets[s].label << ':';
      for (std::size_t i = 0; i < sets[s].members.size(); ++i) out << (i ? "," : " ") << sets[s].members[i];
      out << '\n';
    }
  }

  static CoverInstance load(std::istream& in) {
    CoverInstance inst;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
      ++lineno;
      const auto where = "instance line " + std::to_string(lineno);
      line = detail::trim(line);
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string kw;
      ls >> kw;
      if (kw == "universe") {
        if (header) throw parse_error(where + ": repeated universe header");
        std::string count;
        ls >> count;
        inst.universe = detail::parse_unsigned(count, where);
        header = true;
        continue;
      }
      if (kw != "set") throw parse_error(where + ": expected 'universe' or 'set'");
      if (!header) throw parse_error(where + ": set before universe header");
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw parse_error(where + ": missing ':'");
      std::istringstream head(line.substr(3, colon - 3));
      std::string id, label;
      head >> id >> label;
      if (detail::parse_unsigned(id, where) != inst.sets.size())
        throw parse_error(where + ": set ids must be consecutive from 0");
      std::vector<std::uint32_t> members;
      const auto body = detail::trim(line.substr(colon + 1));
      if (!body.empty())
        for (const auto& tok : detail::split(body, ',')) members.push_back(detail::parse_unsigned(tok, where));
      try {
        inst.add_set(label, std::move(members));
      } catch (const precondition_error& e) {
        throw parse_error(where + ": " + e.what());
      }
    }
    if (!header) throw parse_error("instance: missing universe header");
    return inst;
  }
};

enum class CoverStatus { optimal, upper_bound_only, infeasible, infinite };

inline const char* to_string(CoverStatus s) {
  switch (s) {
  case CoverStatus::optimal: return "optimal";
  case CoverStatus::upper_bound_only: return "upper-bound-only";
  case CoverStatus::infeasible: return "infeasible";
  case CoverStatus::infinite: return "infinite";
  }
  return "?";
}

struct CoverSolution {
  std::vector<std::uint32_t> chosen; // set indices, ascending
  CoverStatus status = CoverStatus::infeasible;
  std::size_t lower_bound = 0;
  std::uint64_t nodes = 0;
  double seconds = 0;
  bool assumed_maximality = false; // some candidate set relies on an assumed catalog entry

  std::size_t size() const { return chosen.size(); }
  bool finite() const { return status == CoverStatus::optimal || status == CoverStatus::upper_bound_only; }

  void dump(std::ostream& out) const {
    out << "status " << to_string(status) << '\n' << "size " << (finite() ? std::to_string(size()) : "-") << '\n';
    out << "lb " << lower_bound << '\n' << "nodes " << nodes << '\n' << "chosen";
    for (auto s : chosen) out << ' ' << s;
    out << '\n';
  }
};

/// Independent re-check: the chosen sets exist and cover every element.
inline bool verify_cover(const CoverInstance& inst, const std::vector<std::uint32_t>& chosen) {
  Bits hit(inst.universe);
  for (auto s : chosen) {
    if (s >= inst.sets.size()) return false;
    for (auto e : inst.sets[s].members) hit.set(e);
  }
  return hit.all();
}

struct Budget {
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 60;
  bool deterministic = true;
  unsigned threads = 1;

  void validate() const {
    if (max_nodes == 0 || !(max_seconds > 0)) throw precondition_error("Budget: limits must be positive");
    if (threads == 0) throw precondition_error("Budget: need at least one thread");
  }
};

/// Parses "90s", "10m", "24h", "1500" (seconds) or "200000n" (nodes).
inline Budget parse_budget(const std::string& text, Budget base = {}) {
  if (text.empty()) throw parse_error("budget: empty");
  const char unit = text.back();
  const bool has_unit = unit < '0' || unit > '9';
  const auto digits = has_unit ? text.substr(0, text.size() - 1) : text;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error("budget: cannot parse '" + text + "'");
  const double v = std::stod(digits);
  if (v <= 0) throw parse_error("budget: must be positive");
  switch (has_unit ? unit : 's') {
  case 's': base.max_seconds = v; break;
  case 'm': base.max_seconds = v * 60; break;
  case 'h': base.max_seconds = v * 3600; break;
  case 'n': base.max_nodes = static_cast<std::uint64_t>(v); break;
  default: throw parse_error("budget: unknown unit in '" + text + "'");
  }
  return base;
}

} // namespace sigma0
