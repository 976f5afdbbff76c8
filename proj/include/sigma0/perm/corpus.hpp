#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sigma0/errors.hpp"
#include "sigma0/perm/group.hpp"

namespace sigma0 {

/// One line of a group corpus file: `name;degree;gen1|gen2|...`.
struct CorpusEntry {
  std::string name;
  unsigned degree = 0;
  std::vector<Perm> generators;

  ConcreteGroup build(std::size_t cap = kDefaultClosureCap) const {
    return ConcreteGroup::close(generators, degree, cap);
  }
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline unsigned parse_unsigned(const std::string& s, const std::string& what) {
  const auto t = trim(s);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error(what + ": expected a non-negative integer, got '" + s + "'");
  return static_cast<unsigned>(std::stoul(t));
}

inline std::vector<Perm> parse_generator_list(const std::string& field, unsigned n) {
  std::vector<Perm> gens;
  for (const auto& g : split(field, '|')) {
    const auto t = trim(g);
    if (t.empty()) continue;
    gens.push_back(Perm::parse_cycles(t, n));
  }
  return gens;
}

} // namespace detail

inline std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto f = detail::split(line, ';');
    if (f.size() != 3) throw parse_error("corpus line " + std::to_string(lineno) + ": expected 3 fields");
    CorpusEntry e;
    e.name = detail::trim(f[0]);
    e.degree = detail::parse_unsigned(f[1], "corpus line " + std::to_string(lineno));
    e.generators = detail::parse_generator_list(f[2], e.degree);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open corpus file " + path);
  return parse_corpus(in);
}

#ifdef SIGMA0_DATA_DIR
inline std::string shipped_corpus_path() { return SIGMA0_DATA_DIR "/group_corpus.txt"; }
#endif

/// `Sn`, `An`, `Cn` by name, else a corpus entry.
inline ConcreteGroup group_by_ref(const std::string& ref, const std::vector<CorpusEntry>& corpus,
                                  std::size_t cap = kDefaultClosureCap) {
  for (const auto& e : corpus)
    if (e.name == ref) return e.build(cap);
  if (ref.size() >= 2 && (ref[0] == 'S' || ref[0] == 'A' || ref[0] == 'C') &&
      ref.find_first_not_of("0123456789", 1) == std::string::npos) {
    const unsigned k = static_cast<unsigned>(std::stoul(ref.substr(1)));
    if (k < 1 || k > Perm::kMaxDegree) throw precondition_error("group reference degree out of range: " + ref);
    if (ref[0] == 'S') return ConcreteGroup::symmetric(k, cap);
    if (ref[0] == 'A') return ConcreteGroup::alternating(k, cap);
    return ConcreteGroup::cyclic(k, cap);
  }
  throw precondition_error("unknown group reference '" + ref + "'");
}

} // namespace sigma0
