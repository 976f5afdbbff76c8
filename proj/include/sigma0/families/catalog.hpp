#pragma once

#include <algorithm>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/errors.hpp"
#include "sigma0/perm/corpus.hpp"
#include "sigma0/perm/group.hpp"

namespace sigma0 {

enum class Maximality { verified, assumed };

inline const char* to_string(Maximality m) { return m == Maximality::verified ? "verified" : "assumed"; }

/// A conjugacy class of primitive maximal subgroups of S_n (other than A_n).
struct PrimitiveCatalogEntry {
  unsigned n = 0;
  std::string name;
  Nat order;
  Nat conjugates;
  Maximality maximality = Maximality::assumed;
  std::vector<Perm> generators;

  ConcreteGroup build(std::size_t cap = kDefaultClosureCap) const {
    return ConcreteGroup::close(generators, n, cap);
  }
};

/// Result of the load-time checks on one entry.
struct CatalogValidation {
  std::string id;
  bool order_ok = false;
  bool divides_factorial = false;
  bool conjugates_ok = false;
  bool transitive = false;
  bool primitive = false;
  bool has_odd = false;
  std::string error;

  bool ok() const { return error.empty() && order_ok && divides_factorial && conjugates_ok && transitive && primitive; }
};

/// Minimal block containing points a and b under the group generated by `gens`.
inline std::uint32_t minimal_block(const std::vector<Perm>& gens, unsigned n, unsigned a, unsigned b) {
  // union-find over points; merge images of merged pairs until stable
  std::vector<unsigned> parent(n);
  for (unsigned i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<unsigned, unsigned>> queue{{a, b}};
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    const unsigned rx = find(x), ry = find(y);
    if (rx == ry) continue;
    parent[rx] = ry;
    for (const auto& g : gens) queue.emplace_back(g(x), g(y));
  }
  std::uint32_t block = 0;
  const unsigned r = find(a);
  for (unsigned i = 0; i < n; ++i)
    if (find(i) == r) block |= 1u << i;
  return block;
}

inline bool is_primitive_action(const ConcreteGroup& g) {
  const unsigned n = g.degree();
  if (!g.is_transitive()) return false;
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);
  for (unsigned b = 1; b < n; ++b)
    if (minimal_block(g.generators(), n, 0, b) != all) return false;
  return true;
}

inline CatalogValidation validate_entry(const PrimitiveCatalogEntry& e) {
  CatalogValidation v;
  v.id = std::to_string(e.n) + ":" + e.name;
  try {
    const auto g = e.build();
    v.order_ok = g.order() == e.order;
    v.divides_factorial = factorial(e.n) % e.order == 0;
    v.conjugates_ok = e.conjugates * e.order == factorial(e.n);
    v.transitive = g.is_transitive();
    v.primitive = is_primitive_action(g);
    for (const auto& x : e.generators)
      if (x.sign() == Parity::odd) v.has_odd = true;
  } catch (const std::exception& ex) {
    v.error = ex.what();
  }
  return v;
}

class PrimitiveCatalog {
public:
  PrimitiveCatalog() = default;

  static PrimitiveCatalog parse(std::istream& in) {
    PrimitiveCatalog c;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = detail::trim(line);
      if (line.empty() || line[0] == '#') continue;
      const auto where = "catalog line " + std::to_string(lineno);
      const auto f = detail::split(line, ';');
      if (f.size() != 6) throw parse_error(where + ": expected 6 fields");
      auto e = std::make_shared<PrimitiveCatalogEntry>();
      e->n = detail::parse_unsigned(f[0], where);
      e->name = detail::trim(f[1]);
      e->order = Nat(detail::parse_unsigned(f[2], where));
      const auto conj = detail::trim(f[3]);
      if (conj.empty() || conj.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error(where + ": bad conjugate count");
      e->conjugates = Nat(conj);
      const auto status = detail::trim(f[4]);
      if (status == "verified")
        e->maximality = Maximality::verified;
      else if (status == "assumed")
        e->maximality = Maximality::assumed;
      else
        throw parse_error(where + ": maximality must be 'verified' or 'assumed'");
      e->generators = detail::parse_generator_list(f[5], e->n);
      if (e->generators.empty()) throw parse_error(where + ": no generators");
      c.entries_.push_back(std::move(e));
    }
    return c;
  }

  static PrimitiveCatalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open catalog file " + path);
    return parse(in);
  }

  static PrimitiveCatalog shipped() { return load(SIGMA0_DATA_DIR "/primitive_catalog.txt"); }

  /// Runs validate_entry on all entries; throws on the first failure.
  std::vector<CatalogValidation> validate() const {
    std::vector<CatalogValidation> out;
    for (const auto& e : entries_) {
      auto v = validate_entry(*e);
      if (!v.ok()) throw parse_error("catalog entry " + v.id + " failed validation" + (v.error.empty() ? "" : ": " + v.error));
      out.push_back(std::move(v));
    }
    return out;
  }

  std::vector<std::shared_ptr<const PrimitiveCatalogEntry>> entries_for(unsigned n) const {
    std::vector<std::shared_ptr<const PrimitiveCatalogEntry>> out;
    for (const auto& e : entries_)
      if (e->n == n) out.push_back(e);
    return out;
  }

  std::shared_ptr<const PrimitiveCatalogEntry> find(unsigned n, const std::string& name) const {
    for (const auto& e : entries_)
      if (e->n == n && e->name == name) return e;
    throw precondition_error("catalog has no entry '" + name + "' for degree " + std::to_string(n));
  }

  /// Degrees up to the largest listed one are taken as fully listed; a degree
  /// below that with no entry has no primitive maximal subgroup besides A_n.
  bool covers_degree(unsigned n) const {
    unsigned top = 0;
    for (const auto& e : entries_) top = std::max(top, e->n);
    return n <= top;
  }

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::shared_ptr<PrimitiveCatalogEntry>>& entries() const { return entries_; }

private:
  std::vector<std::shared_ptr<PrimitiveCatalogEntry>> entries_;
};

} // namespace sigma0
