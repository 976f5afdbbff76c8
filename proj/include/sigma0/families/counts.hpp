#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/combinat/partition.hpp"
#include "sigma0/combinat/subsum.hpp"
#include "sigma0/combinat/two_adic.hpp"

namespace sigma0 {

/// |S_d wr S_{n/d}| for block size d.
inline Nat block_stab_order(unsigned n, unsigned d) {
  if (d == 0 || n % d != 0) throw precondition_error("block_stab_order: block size must divide n");
  return pow_nat(factorial(d), n / d) * factorial(n / d);
}

/// Number of permutations of type lambda that stabilize a fixed m-set.
inline Nat intersect_setstab(const Partition& lambda, unsigned m) {
  const unsigned n = lambda.n();
  if (m < 1 || m >= n) throw precondition_error("intersect_setstab: need 1 <= m < n");
  const auto mult = lambda.multiplicities();
  Nat total = 0;
  std::vector<unsigned> take(mult.size(), 0);
  // walk every sub-multiset mu of lambda, keep those of size m
  auto rec = [&](auto&& self, std::size_t i, unsigned sum) -> void {
    if (sum > m) return;
    if (i == mult.size()) {
      if (sum != m) return;
      std::vector<unsigned> inside, outside;
      for (std::size_t j = 0; j < mult.size(); ++j) {
        inside.insert(inside.end(), take[j], mult[j].first);
        outside.insert(outside.end(), mult[j].second - take[j], mult[j].first);
      }
      total += class_size(Partition(inside)) * class_size(Partition(outside));
      return;
    }
    for (unsigned c = 0; c <= mult[i].second; ++c) {
      take[i] = c;
      self(self, i + 1, sum + c * mult[i].first);
    }
    take[i] = 0;
  };
  rec(rec, 0, 0);
  return total;
}

/// Why the half-block formula does not apply to lambda, or empty when it does.
inline std::string blockstab_half_violation(const Partition& lambda) {
  const unsigned n = lambda.n();
  if (n % 2 != 0) return "n = " + std::to_string(n) + " is odd";
  for (unsigned p : lambda.parts()) {
    if (!is_power_of_two(p)) return "part " + std::to_string(p) + " is not a power of two";
    if (p == 1) return "fixed points present";
  }
  if (const auto w = subsum_witness(lambda.parts(), n / 2)) {
    std::string s;
    for (auto i : *w) s += (s.empty() ? "" : "+") + std::to_string(lambda[i]);
    return "parts " + s + " sum to n/2 = " + std::to_string(n / 2);
  }
  return {};
}

/// |W cap lambda| for W stabilizing a partition into two halves, when lambda
/// has power-of-two parts >= 2 and no parts summing to n/2:
/// |lambda| * 2^{k-1} / |S_n : W|.
inline Nat intersect_blockstab_half(const Partition& lambda) {
  if (const auto why = blockstab_half_violation(lambda); !why.empty())
    throw precondition_error("intersect_blockstab_half: hypothesis fails: " + why);
  const unsigned n = lambda.n();
  const Nat index = factorial(n) / block_stab_order(n, n / 2);
  const Nat num = class_size(lambda) * pow2(static_cast<unsigned>(lambda.length()) - 1);
  if (num % index != 0) throw precondition_error("intersect_blockstab_half: non-integral count");
  return num / index;
}

/// Elements of type lambda inside A_n.
inline Nat intersect_alt(const Partition& lambda) {
  return sign_of_type(lambda) == Parity::even ? class_size(lambda) : Nat(0);
}

struct ImprimitiveMax {
  Nat order;
  unsigned blocks = 0; // number of blocks at the maximum
};

/// Largest |S_{n/d} wr S_d| over 1 < d < n, d | n.
inline ImprimitiveMax imprimitive_order_max(unsigned n) {
  if (n < 4 || is_prime(n)) throw precondition_error("imprimitive_order_max: n must be composite");
  ImprimitiveMax best;
  for (auto d : proper_divisors(n)) {
    const Nat o = block_stab_order(n, n / static_cast<unsigned>(d));
    if (o > best.order) {
      best.order = o;
      best.blocks = static_cast<unsigned>(d);
    }
  }
  return best;
}

/// External order bound for primitive subgroups of S_n not containing A_n:
/// 3^n, and 2^n once n > 24. Not machine-checked here.
inline Nat primitive_order_bound(unsigned n) {
  if (n < 2) throw precondition_error("primitive_order_bound: n must be >= 2");
  return n <= 24 ? pow_nat(3, n) : pow2(n);
}

/// n-cycles of PGL(2, q) on the projective line, n = 2^a, q = 2^a - 1 prime.
inline Nat pgl2_fullcycle_count(unsigned a) {
  if (a < 2 || a > 62 || !is_prime((std::uint64_t{1} << a) - 1))
    throw precondition_error("pgl2_fullcycle_count: 2^" + std::to_string(a) + " - 1 is not prime");
  const Nat n = pow2(a);
  return pow2(a - 2) * (n - 1) * (n - 2);
}

/// 1 + C(n,n/2)/2 for n a power of two, else 1 + C(n, n_2).
inline Nat trivial_upper_bound(unsigned n) {
  if (n < 3) throw precondition_error("trivial_upper_bound: n must be >= 3");
  if (is_power_of_two(n)) return 1 + binomial(n, n / 2) / 2;
  return 1 + binomial(n, two_part(n));
}

struct Bounds32a {
  Nat c1;
  Nat c2;
  unsigned n = 0;
};

/// Interval for n = 3 * 2^a. For a = 2 the lower end counts the class
/// (4,4,4) against its largest intersection, 10800 in a half-block stabilizer,
/// plus A_12.
inline Bounds32a bounds_3_2a(unsigned a) {
  if (a < 2 || a > 25) throw precondition_error("bounds_3_2a: need 2 <= a <= 25");
  Bounds32a b;
  const unsigned p = 1u << a;
  b.n = 3 * p;
  const Nat main = binomial(b.n - 1, p - 1);
  if (a == 2) {
    const Partition cube{4, 4, 4};
    b.c1 = 1 + ceil_div(class_size(cube), intersect_blockstab_half(cube));
  } else {
    b.c1 = 1 + main;
  }
  b.c2 = 2 + main;
  for (unsigned i = 2; i <= 2 * p; ++i) b.c2 += binomial(b.n - i, p / 2 - 1);
  return b;
}

} // namespace sigma0
