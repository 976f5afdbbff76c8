#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/errors.hpp"
#include "sigma0/perm/perm.hpp"

namespace sigma0 {

/// Membership over the element indices of one ConcreteGroup.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size();
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(s, std::back_inserter(blocks));
    for (auto b : blocks) h = (h ^ b) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

inline constexpr std::size_t kDefaultClosureCap = 50000;

/// A permutation group with every element enumerated. Elements are kept in
/// ascending Perm order, so two equal groups list identical element vectors.
class ConcreteGroup {
public:
  ConcreteGroup() = default;

  /// Subgroup generated by `gens` in S_n; throws cap_exceeded past `cap` elements.
  static ConcreteGroup close(std::vector<Perm> gens, unsigned n, std::size_t cap = kDefaultClosureCap) {
    for (const auto& g : gens)
      if (g.degree() != n) throw precondition_error("close: generator degree mismatch");
    std::vector<Perm> elems{Perm::identity(n)};
    std::unordered_map<Perm, std::uint32_t, PermHash> seen{{elems[0], 0u}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& g : gens) {
        Perm x = elems[i] * g;
        if (seen.count(x)) continue;
        if (elems.size() >= cap)
          throw cap_exceeded("close: group order exceeds cap " + std::to_string(cap));
        seen.emplace(x, static_cast<std::uint32_t>(elems.size()));
        elems.push_back(x);
      }
    }
    return from_elements(n, std::move(gens), std::move(elems));
  }

  /// Trusts that `elems` is a group containing the generators.
  static ConcreteGroup from_elements(unsigned n, std::vector<Perm> gens, std::vector<Perm> elems) {
    ConcreteGroup g;
    g.n_ = n;
    g.gens_ = std::move(gens);
    std::sort(elems.begin(), elems.end());
    g.elems_ = std::move(elems);
    g.index_.reserve(g.elems_.size() * 2);
    for (std::size_t i = 0; i < g.elems_.size(); ++i) g.index_.emplace(g.elems_[i], static_cast<std::uint32_t>(i));
    if (g.gens_.empty()) g.gens_ = g.greedy_generators();
    return g;
  }

  static ConcreteGroup symmetric(unsigned n, std::size_t cap = kDefaultClosureCap) {
    if (n <= 1) return close({}, n, cap);
    std::vector<Perm> gens{Perm::parse_cycles("(1,2)", n)};
    if (n > 2) gens.push_back(n_cycle(n));
    return close(std::move(gens), n, cap);
  }

  static ConcreteGroup alternating(unsigned n, std::size_t cap = kDefaultClosureCap) {
    std::vector<Perm> gens;
    for (unsigned k = 3; k <= n; ++k)
      gens.push_back(Perm::parse_cycles("(1,2," + std::to_string(k) + ")", n));
    return close(std::move(gens), n, cap);
  }

  static ConcreteGroup cyclic(unsigned k, std::size_t cap = kDefaultClosureCap) {
    if (k == 1) return close({}, 1, cap);
    return close({n_cycle(k)}, k, cap);
  }

  unsigned degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  Nat order() const { return Nat(elems_.size()); }
  const Perm& element(std::size_t i) const { return elems_[i]; }

  bool contains(const Perm& p) const { return p.degree() == n_ && index_.count(p) != 0; }

  std::optional<std::uint32_t> index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t require_index(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw precondition_error("element " + p.str() + " not in group");
    return it->second;
  }

  ElementSet all_set() const {
    ElementSet s(size());
    s.set();
    return s;
  }

  /// Indices of a subgroup's elements inside this group.
  ElementSet set_of(const ConcreteGroup& sub) const {
    ElementSet s(size());
    for (const auto& p : sub.elements()) s.set(require_index(p));
    return s;
  }

  ConcreteGroup subgroup_from_set(const ElementSet& s, std::vector<Perm> gens = {}) const {
    std::vector<Perm> elems;
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) elems.push_back(elems_[i]);
    return from_elements(n_, std::move(gens), std::move(elems));
  }

  bool is_subgroup_of(const ConcreteGroup& other) const {
    if (other.degree() != n_ || other.size() % size() != 0) return false;
    return std::all_of(elems_.begin(), elems_.end(), [&](const Perm& g) { return other.contains(g); });
  }

  bool operator==(const ConcreteGroup& o) const { return n_ == o.n_ && elems_ == o.elems_; }

  /// h^{-1} G h.
  ConcreteGroup conjugate_by(const Perm& h) const {
    std::vector<Perm> gens, elems;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(g.conjugate_by(h));
    elems.reserve(elems_.size());
    for (const auto& g : elems_) elems.push_back(g.conjugate_by(h));
    return from_elements(n_, std::move(gens), std::move(elems));
  }

  bool is_abelian() const {
    for (const auto& a : gens_)
      for (const auto& b : gens_)
        if (!(a * b == b * a)) return false;
    return true;
  }

  bool is_cyclic() const {
    return std::any_of(elems_.begin(), elems_.end(), [&](const Perm& g) { return g.order() == size(); });
  }

  /// Cyclic of prime-power order (including trivial): no proper primary covering exists.
  bool is_cyclic_p_group() const { return is_cyclic() && prime_power_base(static_cast<std::uint64_t>(size())) != 0; }

  /// Whether the group moves every point into one orbit.
  bool is_transitive() const {
    std::uint64_t orbit = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& g : gens_)
        for (unsigned i = 0; i < n_; ++i)
          if ((orbit >> i & 1u) && !(orbit >> g(i) & 1u)) {
            orbit |= std::uint64_t{1} << g(i);
            grew = true;
          }
    }
    return orbit == (n_ == 64 ? ~0ull : ((std::uint64_t{1} << n_) - 1));
  }

  /// Derived subgroup: normal closure of the generator commutators.
  ConcreteGroup derived_subgroup() const {
    std::vector<Perm> comms;
    for (const auto& a : gens_)
      for (const auto& b : gens_) {
        Perm c = a.inverse() * b.inverse() * a * b;
        if (!c.is_identity()) comms.push_back(c);
      }
    ConcreteGroup d = close(comms, n_, size());
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& x : std::vector<Perm>(d.gens_))
        for (const auto& g : gens_) {
          Perm y = x.conjugate_by(g);
          if (!d.contains(y)) {
            comms.push_back(y);
            d = close(comms, n_, size());
            changed = true;
          }
        }
    }
    return d;
  }

  bool is_solvable() const {
    ConcreteGroup cur = *this;
    while (cur.size() > 1) {
      ConcreteGroup next = cur.derived_subgroup();
      if (next.size() == cur.size()) return false;
      cur = std::move(next);
    }
    return true;
  }

  /// Indices of the primary elements (prime-power order, identity included).
  ElementSet primary_elements() const {
    ElementSet s(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (is_primary(elems_[i])) s.set(i);
    return s;
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].str();
    }
    return s + "> order " + std::to_string(size());
  }

private:
  // Scan elements in order, keeping any not yet generated.
  std::vector<Perm> greedy_generators() const {
    std::vector<Perm> gens;
    std::vector<char> in(elems_.size(), 0);
    std::vector<std::uint32_t> list;
    auto absorb = [&](std::uint32_t i) {
      if (!in[i]) {
        in[i] = 1;
        list.push_back(i);
      }
    };
    if (elems_.empty()) return gens;
    absorb(index_.at(Perm::identity(n_)));
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (in[k]) continue;
      gens.push_back(elems_[k]);
      // re-close: every known element times every generator
      for (std::size_t i = 0; i < list.size(); ++i)
        for (const auto& x : gens) absorb(index_.at(elems_[list[i]] * x));
    }
    return gens;
  }

  static Perm n_cycle(unsigned k) {
    std::vector<unsigned> images(k);
    for (unsigned i = 0; i < k; ++i) images[i] = (i + 1) % k;
    return Perm::from_images(images);
  }

  unsigned n_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
};

/// |G/G'| and whether it is a prime power.
struct AbelianizationReport {
  bool p_group = false;
  std::uint64_t p = 0;                 // the prime when p_group (1 for the trivial quotient)
  std::uint64_t q1 = 0, q2 = 0;        // two distinct prime divisors otherwise
  std::uint64_t quotient_order = 1;
};

inline AbelianizationReport abelianization_is_p_group(const ConcreteGroup& g) {
  AbelianizationReport r;
  const auto d = g.derived_subgroup();
  r.quotient_order = g.size() / d.size();
  const auto base = prime_power_base(r.quotient_order);
  if (base != 0) {
    r.p_group = true;
    r.p = base;
    return r;
  }
  r.q1 = smallest_prime_divisor(r.quotient_order);
  std::uint64_t rest = r.quotient_order;
  while (rest % r.q1 == 0) rest /= r.q1;
  r.q2 = smallest_prime_divisor(rest);
  return r;
}

/// Dense product table over the group's element indices; practical up to a few thousand elements.
class MulTable {
public:
  explicit MulTable(const ConcreteGroup& g) : n_(g.size()), mul_(n_ * n_), inv_(n_) {
    if (n_ > 65535) throw cap_exceeded("MulTable: group too large for a dense table");
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b)
        mul_[a * n_ + b] = static_cast<std::uint16_t>(g.require_index(g.element(a) * g.element(b)));
      inv_[a] = static_cast<std::uint16_t>(g.require_index(g.element(a).inverse()));
    }
  }

  std::size_t size() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  /// h^{-1} a h
  std::uint32_t conj(std::uint32_t a, std::uint32_t h) const { return mul(mul(inv(h), a), h); }

private:
  std::size_t n_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
};

/// Subgroup of `g` generated by element indices, closed via the product table.
inline ElementSet close_in(const MulTable& t, const std::vector<std::uint32_t>& gens, std::uint32_t identity) {
  ElementSet s(t.size());
  std::vector<std::uint32_t> list{identity};
  s.set(identity);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto x : gens) {
      const auto y = t.mul(list[i], x);
      if (!s.test(y)) {
        s.set(y);
        list.push_back(y);
      }
    }
  return s;
}

/// Action of G on the right cosets of a normal subgroup N: a faithful permutation
/// representation of G/N of degree |G:N|.
inline ConcreteGroup quotient_group(const ConcreteGroup& g, const ConcreteGroup& n) {
  if (!n.is_subgroup_of(g)) throw precondition_error("quotient_group: N is not a subgroup of G");
  for (const auto& x : g.generators())
    for (const auto& y : n.generators())
      if (!n.contains(y.conjugate_by(x))) throw precondition_error("quotient_group: N is not normal");
  const std::size_t index = g.size() / n.size();
  if (index > Perm::kMaxDegree) throw cap_exceeded("quotient_group: index exceeds permutation degree cap");
  std::vector<std::int32_t> coset_of(g.size(), -1);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (coset_of[i] >= 0) continue;
    const auto c = static_cast<std::int32_t>(reps.size());
    reps.push_back(g.element(i));
    for (const auto& m : n.elements()) coset_of[g.require_index(m * g.element(i))] = c;
  }
  const auto deg = static_cast<unsigned>(index);
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) {
    std::vector<unsigned> images(deg);
    for (unsigned c = 0; c < deg; ++c) images[c] = static_cast<unsigned>(coset_of[g.require_index(reps[c] * x)]);
    gens.push_back(Perm::from_images(images));
  }
  if (gens.empty()) gens.push_back(Perm::identity(deg));
  return ConcreteGroup::close(std::move(gens), deg);
}

} // namespace sigma0
