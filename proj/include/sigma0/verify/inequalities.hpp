#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sigma0/combinat.hpp"
#include "sigma0/families/counts.hpp"
#include "sigma0/verify/report.hpp"

namespace sigma0 {

namespace detail {

inline std::string range_str(unsigned lo, unsigned hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

/// b!^a a! for the wreath product S_b wr S_a.
inline Nat wreath_order(unsigned b, unsigned a) { return pow_nat(factorial(b), a) * factorial(a); }

} // namespace detail

/// For 1 <= b < a <= limit: a!^b b! >= b!^a a!, equality only at b = 1.
inline CheckReport check_lemma_swap(unsigned limit = 40) {
  if (limit < 2) throw precondition_error("check_lemma_swap: limit must be >= 2");
  CheckReport r("lemma-swap", "1<=b<a<=" + std::to_string(limit));
  std::size_t pairs = 0;
  for (unsigned a = 2; a <= limit; ++a)
    for (unsigned b = 1; b < a; ++b) {
      ++pairs;
      const Nat lhs = detail::wreath_order(a, b), rhs = detail::wreath_order(b, a);
      const std::string at = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
      r.expect(lhs >= rhs, at + ": a!^b b! < b!^a a!");
      r.expect((lhs == rhs) == (b == 1), at + ": equality pattern broken");
    }
  r.note("pairs", pairs);
  r.note("a=3,b=2", detail::wreath_order(3, 2).str() + " > " + detail::wreath_order(2, 3).str());
  return r;
}

/// For composite m <= limit: among factorizations m = ab with 2 <= a <= b the
/// wreath order b!^a a! strictly decreases as a grows; and the smallest prime
/// p of m maximizes (m/d)!^d d! over divisors 1 < d < m, uniquely.
inline CheckReport check_lemma_ab(unsigned limit = 60) {
  if (limit < 4) throw precondition_error("check_lemma_ab: limit must be >= 4");
  CheckReport r("lemma-ab", detail::range_str(4, limit));
  std::size_t composites = 0, comparisons = 0;
  for (unsigned m = 4; m <= limit; ++m) {
    if (is_prime(m)) continue;
    ++composites;
    std::vector<std::pair<unsigned, unsigned>> fac; // (a, b), a ascending
    for (unsigned a = 2; a * a <= m; ++a)
      if (m % a == 0) fac.emplace_back(a, m / a);
    for (std::size_t i = 0; i < fac.size(); ++i)
      for (std::size_t j = i; j < fac.size(); ++j) {
        ++comparisons;
        const auto [a1, b1] = fac[i];
        const auto [a2, b2] = fac[j];
        const Nat x = detail::wreath_order(b1, a1), y = detail::wreath_order(b2, a2);
        const std::string at = "m=" + std::to_string(m) + " a1=" + std::to_string(a1) + " a2=" + std::to_string(a2);
        r.expect(x >= y, at + ": order increased");
        r.expect((x == y) == (i == j), at + ": equality pattern broken");
      }
    const auto p = static_cast<unsigned>(smallest_prime_divisor(m));
    const Nat top = detail::wreath_order(m / p, p);
    for (unsigned d = 2; d < m; ++d) {
      if (m % d) continue;
      ++comparisons;
      const Nat v = detail::wreath_order(m / d, d);
      const std::string at = "m=" + std::to_string(m) + " d=" + std::to_string(d);
      r.expect(top >= v, at + ": beats the smallest prime divisor");
      r.expect((top == v) == (d == p), at + ": equality pattern broken");
    }
  }
  r.note("composites", composites);
  r.note("comparisons", comparisons);
  r.note("m=15,d=3", detail::wreath_order(5, 3));
  r.note("m=15,d=5", detail::wreath_order(3, 5));
  return r;
}

/// For lo <= n <= hi: every imprimitive and primitive proper subgroup order
/// (other than A_n) is at most 2 floor(n/2)! ceil(n/2)!, with equality only for
/// the half-block stabilizer at even n.
inline CheckReport check_order_dominance(unsigned lo = 12, unsigned hi = 60) {
  if (lo < 5 || hi < lo) throw precondition_error("check_order_dominance: need 5 <= lo <= hi");
  CheckReport r("order-dominance", detail::range_str(lo, hi));
  for (unsigned n = lo; n <= hi; ++n) {
    const Nat cap = 2 * factorial(n / 2) * factorial(n - n / 2);
    const std::string at = "n=" + std::to_string(n);
    for (unsigned d = 2; d < n; ++d) {
      if (n % d) continue;
      const Nat w = block_stab_order(n, d);
      r.expect(w <= cap, at + " W" + std::to_string(d) + " exceeds the bound");
      r.expect((w == cap) == (2 * d == n), at + " W" + std::to_string(d) + ": equality pattern broken");
    }
    if (!is_prime(n)) {
      const auto imp = imprimitive_order_max(n);
      r.expect(imp.order <= cap, at + ": imprimitive maximum exceeds the bound");
    }
    // |P| < primitive_order_bound(n) <= cap
    r.expect(primitive_order_bound(n) <= cap, at + ": primitive bound exceeds the cap");
  }
  r.note("n=12 cap", 2 * factorial(6) * factorial(6));
  r.note("n=12 primitive bound", primitive_order_bound(12));
  r.assume("primitive order bound (3^n for n <= 24, 2^n beyond)");
  return r;
}

/// f(n) < 1 exactly for odd n >= 15 and even n >= 22 other than 40, over the
/// degrees in the Pi domain up to n_max.
inline CheckReport check_f_characterization(unsigned n_max = 200) {
  if (n_max < 41) throw precondition_error("check_f_characterization: n_max must be >= 41");
  CheckReport r("f-char", detail::range_str(5, n_max));
  const ExactRatio one(1);
  std::size_t degrees = 0;
  std::string at_least_one;
  for (unsigned n = 5; n <= n_max; ++n) {
    if (!in_pi_domain(n)) continue;
    ++degrees;
    const auto f = f_ratio(n);
    const bool predicted = (n % 2 == 1 && n >= 15) || (n % 2 == 0 && n >= 22 && n != 40);
    r.expect((f < one) == predicted, "n=" + std::to_string(n) + ": f(n)=" + to_string(f));
    r.expect(f != one, "n=" + std::to_string(n) + ": f(n)=1");
    if (!(f < one)) at_least_one += (at_least_one.empty() ? "" : ",") + std::to_string(n);
  }
  r.note("degrees", degrees);
  r.note("f>=1 at", at_least_one);
  r.note("f(13)", f_ratio(13));
  r.note("f(15)", f_ratio(15));
  r.note("f(40)", f_ratio(40));
  return r;
}

/// k! > e (k/e)^k for 2 <= k <= k_max with e replaced by the lower bound
/// 2.718281; that makes the tested inequality slightly stronger.
inline CheckReport check_stirling(unsigned k_max = 200) {
  if (k_max < 2) throw precondition_error("check_stirling: k_max must be >= 2");
  CheckReport r("stirling", detail::range_str(2, k_max));
  const Nat num = 2718281, den = 1000000;
  for (unsigned k = 2; k <= k_max; ++k) {
    // k! * e^(k-1) > k^k, cleared of denominators
    const Nat lhs = factorial(k) * pow_nat(num, k - 1);
    const Nat rhs = pow_nat(Nat(k), k) * pow_nat(den, k - 1);
    r.expect(lhs > rhs, "k=" + std::to_string(k));
  }
  r.note("role", "sanity only; the bounds elsewhere use exact factorials");
  return r;
}

} // namespace sigma0
