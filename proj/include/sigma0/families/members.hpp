#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sigma0/errors.hpp"
#include "sigma0/families/catalog.hpp"
#include "sigma0/families/spec.hpp"
#include "sigma0/perm/enumerate.hpp"
#include "sigma0/perm/group.hpp"

namespace sigma0 {

/// Work allowed when listing primitive conjugates: conjugates x group order.
inline constexpr std::uint64_t kDefaultConjugateCost = 10'000'000;

/// One concrete subgroup of S_n from a family, held structurally so that
/// membership is cheap at degrees where the subgroup cannot be enumerated.
class FamilyMember {
public:
  static FamilyMember alternating(unsigned n) {
    FamilyMember m(FamilyKind::alternating, n);
    m.label_ = "A" + std::to_string(n);
    return m;
  }

  static FamilyMember set_stab(unsigned n, std::uint32_t mask) {
    FamilyMember m(FamilyKind::set_stab, n);
    m.mask_ = mask;
    m.label_ = "X" + std::to_string(__builtin_popcount(mask)) + points_str(mask);
    return m;
  }

  /// block_of[i] is the block containing point i; blocks numbered 0..k-1.
  static FamilyMember block_stab(unsigned n, std::vector<std::uint8_t> block_of) {
    FamilyMember m(FamilyKind::block_stab, n);
    const unsigned k = *std::max_element(block_of.begin(), block_of.end()) + 1u;
    std::string s;
    for (unsigned b = 0; b < k; ++b) {
      std::uint32_t mask = 0;
      for (unsigned i = 0; i < n; ++i)
        if (block_of[i] == b) mask |= 1u << i;
      s += points_str(mask);
    }
    m.label_ = "W" + std::to_string(n / k) + s;
    m.block_of_ = std::move(block_of);
    return m;
  }

  /// h^{-1} P h for the catalogued group P.
  static FamilyMember primitive(std::shared_ptr<const PrimitiveCatalogEntry> e,
                                std::shared_ptr<const ConcreteGroup> base, const Perm& h, std::size_t ordinal) {
    FamilyMember m(FamilyKind::primitive, e->n);
    m.label_ = e->name + "#" + std::to_string(ordinal);
    m.conj_ = h;
    m.conj_inv_ = h.inverse();
    m.entry_ = std::move(e);
    m.base_ = std::move(base);
    return m;
  }

  FamilyKind kind() const { return kind_; }
  unsigned degree() const { return n_; }
  const std::string& label() const { return label_; }
  std::uint32_t mask() const { return mask_; }
  const std::vector<std::uint8_t>& blocks() const { return block_of_; }
  Maximality maximality() const { return entry_ ? entry_->maximality : Maximality::verified; }
  /// For primitive members: the h with member = h^{-1} P h.
  const Perm& conjugator() const { return conj_; }

  bool contains(const Perm& g) const {
    switch (kind_) {
    case FamilyKind::alternating: return g.sign() == Parity::even;
    case FamilyKind::set_stab: return g.image_of_mask(mask_) == mask_;
    case FamilyKind::block_stab: {
      std::array<std::uint8_t, 32> target;
      target.fill(0xff);
      for (unsigned i = 0; i < n_; ++i) {
        auto& t = target[block_of_[i]];
        const auto b = block_of_[g(i)];
        if (t == 0xff) t = b;
        else if (t != b) return false;
      }
      return true;
    }
    case FamilyKind::primitive: return base_->contains(conj_ * g * conj_inv_);
    }
    return false;
  }

  std::vector<Perm> generators() const {
    std::vector<Perm> gens;
    const auto transposition = [&](unsigned a, unsigned b) {
      std::vector<unsigned> img(n_);
      for (unsigned i = 0; i < n_; ++i) img[i] = i;
      std::swap(img[a], img[b]);
      return Perm::from_images(img);
    };
    const auto chain = [&](std::uint32_t mask) {
      int prev = -1;
      for (unsigned i = 0; i < n_; ++i) {
        if (!(mask >> i & 1u)) continue;
        if (prev >= 0) gens.push_back(transposition(static_cast<unsigned>(prev), i));
        prev = static_cast<int>(i);
      }
    };
    switch (kind_) {
    case FamilyKind::alternating:
      for (unsigned k = 2; k < n_; ++k) {
        std::vector<unsigned> img(n_);
        for (unsigned i = 0; i < n_; ++i) img[i] = i;
        img[0] = 1;
        img[1] = k;
        img[k] = 0;
        gens.push_back(Perm::from_images(img));
      }
      break;
    case FamilyKind::set_stab: {
      const std::uint32_t all = n_ == 32 ? ~0u : (1u << n_) - 1u;
      chain(mask_);
      chain(all & ~mask_);
      break;
    }
    case FamilyKind::block_stab: {
      const unsigned k = *std::max_element(block_of_.begin(), block_of_.end()) + 1u;
      std::vector<std::vector<unsigned>> pts(k);
      for (unsigned i = 0; i < n_; ++i) pts[block_of_[i]].push_back(i);
      for (const auto& b : pts) {
        std::uint32_t mask = 0;
        for (auto i : b) mask |= 1u << i;
        chain(mask);
      }
      for (unsigned b = 0; b + 1 < k; ++b) {
        std::vector<unsigned> img(n_);
        for (unsigned i = 0; i < n_; ++i) img[i] = i;
        for (std::size_t j = 0; j < pts[b].size(); ++j) std::swap(img[pts[b][j]], img[pts[b + 1][j]]);
        gens.push_back(Perm::from_images(img));
      }
      break;
    }
    case FamilyKind::primitive:
      for (const auto& g : base_->generators()) gens.push_back(g.conjugate_by(conj_));
      break;
    }
    return gens;
  }

  ConcreteGroup group(std::size_t cap = kDefaultClosureCap) const {
    return ConcreteGroup::close(generators(), n_, cap);
  }

private:
  FamilyMember(FamilyKind k, unsigned n) : kind_(k), n_(n) {}

  static std::string points_str(std::uint32_t mask) {
    std::string s = "{";
    for (unsigned i = 0; mask; ++i, mask >>= 1)
      if (mask & 1u) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
    return s + "}";
  }

  FamilyKind kind_;
  unsigned n_;
  std::string label_;
  std::uint32_t mask_ = 0;
  std::vector<std::uint8_t> block_of_;
  std::shared_ptr<const PrimitiveCatalogEntry> entry_;
  std::shared_ptr<const ConcreteGroup> base_;
  Perm conj_, conj_inv_;
};

namespace detail {

inline void for_each_subset(unsigned n, unsigned m, std::uint32_t required, auto&& visit) {
  if (m == 0 || m > n) return;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << m) - 1; s < top;) {
    const auto mask = static_cast<std::uint32_t>(s);
    if ((mask & required) == required) visit(mask);
    const std::uint64_t c = s & -s, r = s + c; // next mask with the same popcount
    s = (((r ^ s) >> 2) / c) | r;
  }
}

inline void for_each_block_system(unsigned n, unsigned d, auto&& visit) {
  std::vector<std::uint8_t> block_of(n, 0xff);
  auto place = [&](auto&& self, unsigned block) -> void {
    unsigned first = 0;
    while (first < n && block_of[first] != 0xff) ++first;
    if (first == n) {
      visit(block_of);
      return;
    }
    block_of[first] = static_cast<std::uint8_t>(block);
    auto fill = [&](auto&& again, unsigned from, unsigned left) -> void {
      if (left == 0) {
        self(self, block + 1);
        return;
      }
      for (unsigned p = from; p < n; ++p) {
        if (block_of[p] != 0xff) continue;
        block_of[p] = static_cast<std::uint8_t>(block);
        again(again, p + 1, left - 1);
        block_of[p] = 0xff;
      }
    };
    fill(fill, first + 1, d - 1);
    block_of[first] = 0xff;
  };
  place(place, 0);
}

} // namespace detail

/// Every member of a family, realized structurally. Primitive conjugates are
/// found by conjugating with (1,2) and the n-cycle until no new one appears.
inline std::vector<FamilyMember> family_members(const FamilySpec& spec,
                                                std::uint64_t conjugate_cost = kDefaultConjugateCost) {
  const unsigned n = spec.n;
  if (n > Perm::kMaxDegree) throw cap_exceeded("family_members: degree above " + std::to_string(Perm::kMaxDegree));
  std::vector<FamilyMember> out;
  switch (spec.kind) {
  case FamilyKind::alternating: out.push_back(FamilyMember::alternating(n)); break;
  case FamilyKind::set_stab: {
    const std::uint32_t req = spec.anchor ? 1u << *spec.anchor : 0u;
    detail::for_each_subset(n, spec.size, req, [&](std::uint32_t mask) { out.push_back(FamilyMember::set_stab(n, mask)); });
    break;
  }
  case FamilyKind::block_stab:
    detail::for_each_block_system(n, spec.size, [&](const std::vector<std::uint8_t>& b) { out.push_back(FamilyMember::block_stab(n, b)); });
    break;
  case FamilyKind::primitive: {
    const auto& e = spec.entry;
    if (n > Perm::kMaxRankDegree) throw cap_exceeded("family_members: primitive conjugates need n <= 20");
    if (e->conjugates * e->order > conjugate_cost)
      throw cap_exceeded("family_members: " + e->name + " has " + to_string(e->conjugates) + " conjugates of order " +
                         to_string(e->order) + ", over the work cap");
    auto base = std::make_shared<const ConcreteGroup>(e->build());
    const auto key = [&](const Perm& h) {
      std::vector<std::uint64_t> r;
      r.reserve(base->size());
      for (const auto& p : base->elements()) r.push_back(p.conjugate_by(h).rank());
      std::sort(r.begin(), r.end());
      return r;
    };
    std::vector<unsigned> shift(n);
    for (unsigned i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    const std::vector<Perm> steps{Perm::parse_cycles("(1,2)", n), Perm::from_images(shift)};
    std::set<std::vector<std::uint64_t>> seen;
    std::deque<Perm> queue{Perm::identity(n)};
    seen.insert(key(queue.front()));
    while (!queue.empty()) {
      const Perm h = queue.front();
      queue.pop_front();
      out.push_back(FamilyMember::primitive(e, base, h, out.size() + 1));
      for (const auto& s : steps) {
        Perm h2 = h * s;
        if (seen.insert(key(h2)).second) queue.push_back(h2);
      }
    }
    if (Nat(out.size()) != e->conjugates)
      throw precondition_error("family_members: found " + std::to_string(out.size()) + " conjugates of " + e->name +
                               ", catalog says " + to_string(e->conjugates));
    break;
  }
  }
  return out;
}

/// Families of maximal subgroups of S_n: A_n, X_m (m < n/2), W_d for every
/// proper block size, and the catalogued primitive groups.
inline std::vector<FamilySpec> maximal_families(unsigned n, const PrimitiveCatalog& catalog) {
  if (n < 3) throw precondition_error("maximal_families: need n >= 3");
  if (!catalog.covers_degree(n))
    throw precondition_error("maximal_families: primitive catalog does not cover degree " + std::to_string(n));
  std::vector<FamilySpec> out{FamilySpec::alternating(n)};
  for (unsigned m = 1; 2 * m < n; ++m) out.push_back(FamilySpec::set_stab(n, m));
  for (unsigned d = 2; d < n; ++d)
    if (n % d == 0) out.push_back(FamilySpec::block_stab(n, d));
  for (const auto& e : catalog.entries_for(n)) out.push_back(FamilySpec::primitive(e));
  return out;
}

/// Catalog-mode list of all maximal subgroups of S_n.
inline std::vector<FamilyMember> catalog_maximal_subgroups(unsigned n, const PrimitiveCatalog& catalog,
                                                           std::uint64_t conjugate_cost = kDefaultConjugateCost) {
  std::vector<FamilyMember> out;
  for (const auto& spec : maximal_families(n, catalog)) {
    auto part = family_members(spec, conjugate_cost);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

/// |member cap class(lambda)| by enumerating the class.
inline Nat brute_intersection(const FamilyMember& m, const Partition& lambda,
                              std::uint64_t budget = kDefaultClassBudget) {
  std::uint64_t c = 0;
  for_each_in_class(m.degree(), lambda, [&](const Perm& g) { c += m.contains(g); }, budget);
  return c;
}

/// Decides maximality of a member of S_n (n <= 9): for one g in each double
/// coset MgM outside M, checks that <M, g> = S_n.
inline bool is_maximal_by_double_cosets(const FamilyMember& m) {
  const unsigned n = m.degree();
  if (n > 9) throw cap_exceeded("is_maximal_by_double_cosets: need n <= 9");
  const auto total = static_cast<std::uint64_t>(factorial(n));
  const auto gens = m.generators();
  std::vector<char> seen(total, 0);
  std::vector<Perm> stack;
  const auto sweep = [&](const Perm& g) {
    seen[g.rank()] = 1;
    stack.push_back(g);
    while (!stack.empty()) {
      const Perm x = stack.back();
      stack.pop_back();
      for (const auto& s : gens)
        for (const Perm& y : {x * s, s * x})
          if (!seen[y.rank()]) {
            seen[y.rank()] = 1;
            stack.push_back(y);
          }
    }
  };
  for (std::uint64_t r = 0; r < total; ++r) {
    if (seen[r]) continue;
    const Perm g = Perm::unrank(r, n);
    sweep(g);
    if (m.contains(g)) continue;
    auto with = gens;
    with.push_back(g);
    if (ConcreteGroup::close(std::move(with), n, total + 1).size() != total) return false;
  }
  return true;
}

} // namespace sigma0
