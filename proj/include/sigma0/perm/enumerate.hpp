#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sigma0/combinat/partition.hpp"
#include "sigma0/errors.hpp"
#include "sigma0/perm/perm.hpp"

namespace sigma0 {

inline constexpr std::uint64_t kDefaultClassBudget = 200'000'000;

namespace detail {

// Each permutation is produced once: the cycle through the smallest unused
// point is written starting at that point.
template <class F>
struct ClassWalker {
  unsigned n;
  std::vector<std::pair<unsigned, unsigned>> remaining; // (length, count)
  std::vector<unsigned> images;
  std::uint32_t used = 0;
  F& visit;

  void next_cycle() {
    if (used == (n == 32 ? ~0u : ((1u << n) - 1u))) {
      visit(Perm::from_images(images));
      return;
    }
    const unsigned start = static_cast<unsigned>(__builtin_ctz(~used));
    for (auto& [len, cnt] : remaining) {
      if (cnt == 0) continue;
      --cnt;
      used |= 1u << start;
      std::vector<unsigned> cycle{start};
      extend(cycle, len);
      used &= ~(1u << start);
      ++cnt;
    }
  }

  void extend(std::vector<unsigned>& cycle, unsigned len) {
    if (cycle.size() == len) {
      for (std::size_t k = 0; k < len; ++k) images[cycle[k]] = cycle[(k + 1) % len];
      next_cycle();
      return;
    }
    for (unsigned p = cycle.front() + 1; p < n; ++p) {
      if (used >> p & 1u) continue;
      used |= 1u << p;
      cycle.push_back(p);
      extend(cycle, len);
      cycle.pop_back();
      used &= ~(1u << p);
    }
  }
};

} // namespace detail

/// Calls visit(const Perm&) once for each permutation of S_n with cycle type
/// lambda (fixed points may be omitted; they are padded). Throws cap_exceeded
/// when the class is larger than `budget`.
template <class F>
void for_each_in_class(unsigned n, const Partition& lambda, F&& visit, std::uint64_t budget = kDefaultClassBudget) {
  if (n > Perm::kMaxDegree) throw precondition_error("for_each_in_class: degree too large");
  const Partition full = lambda.n() == n ? lambda : lambda.padded_to(n);
  if (class_size(full) > budget)
    throw cap_exceeded("for_each_in_class: class " + full.str() + " exceeds budget " + std::to_string(budget));
  detail::ClassWalker<F> w{n, {}, std::vector<unsigned>(n), 0u, visit};
  for (auto [part, mult] : full.multiplicities()) w.remaining.emplace_back(part, mult);
  w.next_cycle();
}

/// Materialized form of for_each_in_class.
inline std::vector<Perm> enumerate_class(unsigned n, const Partition& lambda,
                                         std::uint64_t budget = kDefaultClassBudget) {
  std::vector<Perm> out;
  for_each_in_class(n, lambda, [&](const Perm& p) { out.push_back(p); }, budget);
  return out;
}

/// A representative of the class: cycles on consecutive points, longest first.
inline Perm class_representative(unsigned n, const Partition& lambda) {
  const Partition full = lambda.n() == n ? lambda : lambda.padded_to(n);
  std::vector<unsigned> images(n);
  unsigned at = 0;
  for (unsigned len : full.parts()) {
    for (unsigned k = 0; k < len; ++k) images[at + k] = at + (k + 1) % len;
    at += len;
  }
  return Perm::from_images(images);
}

} // namespace sigma0
