#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sigma0/errors.hpp"

namespace sigma0 {

/// Arbitrary-precision integer. Used for every count, order and index.
using Nat = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms by the backend.
using ExactRatio = boost::multiprecision::cpp_rational;

namespace detail {

inline constexpr unsigned kFactorialTable = 512;

inline const std::vector<Nat>& factorial_table() {
  static const std::vector<Nat> table = [] {
    std::vector<Nat> t(kFactorialTable + 1);
    t[0] = 1;
    for (unsigned i = 1; i <= kFactorialTable; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

} // namespace detail

inline Nat factorial(unsigned n) {
  if (n <= detail::kFactorialTable) return detail::factorial_table()[n];
  Nat r = detail::factorial_table().back();
  for (unsigned i = detail::kFactorialTable + 1; i <= n; ++i) r *= i;
  return r;
}

/// C(n, k); zero when k > n.
inline Nat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Nat r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Nat pow_nat(const Nat& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Nat pow2(unsigned exp) { return Nat(1) << exp; }

inline ExactRatio ratio(const Nat& num, const Nat& den) {
  if (den == 0) throw precondition_error("ratio: zero denominator");
  return ExactRatio(num, den);
}

inline Nat ceil_div(const Nat& a, const Nat& b) { return (a + b - 1) / b; }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t smallest_prime_divisor(std::uint64_t n) {
  if (n < 2) throw precondition_error("smallest_prime_divisor: n < 2");
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

/// Largest power of the prime p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw precondition_error("p_part: " + std::to_string(p) + " is not prime");
  if (n == 0) throw precondition_error("p_part: n must be positive");
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// If n = p^k with p prime and k >= 1 returns p, else 0. n = 1 returns 1.
inline std::uint64_t prime_power_base(std::uint64_t n) {
  if (n == 1) return 1;
  if (n == 0) return 0;
  const std::uint64_t p = smallest_prime_divisor(n);
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

/// Same as prime_power_base for an arbitrary-precision argument (small primes only).
inline std::uint64_t prime_power_base(const Nat& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return prime_power_base(static_cast<std::uint64_t>(n));
  Nat m = n;
  std::uint64_t p = 2;
  while (m % p != 0) ++p;
  while (m % p == 0) m /= p;
  return m == 1 ? p : 0;
}

inline std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::string to_string(const Nat& v) { return v.str(); }

inline std::string to_string(const ExactRatio& r) {
  const Nat num = boost::multiprecision::numerator(r);
  const Nat den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Decimal string with ',' thousands separators, for human-facing tables only.
inline std::string with_separators(const std::string& digits) {
  std::string body = digits;
  std::string sign;
  if (!body.empty() && body[0] == '-') {
    sign = "-";
    body.erase(0, 1);
  }
  std::string out;
  const auto len = body.size();
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(body[i]);
    const auto rest = len - i - 1;
    if (rest > 0 && rest % 3 == 0) out.push_back(',');
  }
  return sign + out;
}

} // namespace sigma0
