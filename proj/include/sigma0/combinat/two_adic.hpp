#pragma once

#include <string>
#include <vector>

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/combinat/partition.hpp"

namespace sigma0 {

/// n = sum 2^{exponents[i]}, exponents strictly decreasing.
struct TwoAdicExpansion {
  std::vector<unsigned> exponents;
  unsigned n = 0;

  std::size_t terms() const { return exponents.size(); }
  unsigned leading() const { return exponents.front(); }
};

inline TwoAdicExpansion two_adic(unsigned n) {
  if (n == 0) throw precondition_error("two_adic: n must be positive");
  TwoAdicExpansion e;
  e.n = n;
  for (int bit = 31; bit >= 0; --bit)
    if (n & (1u << bit)) e.exponents.push_back(static_cast<unsigned>(bit));
  return e;
}

/// Degrees of the form 2^a or 3 * 2^a.
inline bool is_excluded_degree(unsigned n) {
  if (n == 0) return true;
  while (n % 2 == 0) n /= 2;
  return n == 1 || n == 3;
}

/// Degrees for which the odd 2-power class and the ratio f(n) are defined:
/// n >= 5 and n not of the form 2^a, 3 * 2^a.
inline bool in_pi_domain(unsigned n) { return n >= 5 && !is_excluded_degree(n); }

inline void require_pi_domain(unsigned n, const char* op) {
  if (!in_pi_domain(n))
    throw precondition_error(std::string(op) + ": degree " + std::to_string(n) +
                             " is outside the domain (need n >= 5, n != 2^a, 3*2^a)");
}

/// 2-part of n.
inline unsigned two_part(unsigned n) { return static_cast<unsigned>(p_part(n, 2)); }

namespace detail {
inline bool parity_matches_terms(const TwoAdicExpansion& e) { return (e.n % 2) == (e.terms() % 2); }
} // namespace detail

/// The odd conjugacy class of 2-elements used to bound sigma_0(S_n) from below:
/// the binary digits of n as cycle lengths, with the leading cycle split in two
/// when n and the number of binary digits have the same parity.
inline Partition pi_class(unsigned n) {
  require_pi_domain(n, "pi_class");
  const auto e = two_adic(n);
  std::vector<unsigned> parts;
  if (detail::parity_matches_terms(e)) {
    parts.push_back(1u << (e.leading() - 1));
    parts.push_back(1u << (e.leading() - 1));
    for (std::size_t i = 1; i < e.terms(); ++i) parts.push_back(1u << e.exponents[i]);
  } else {
    for (unsigned a : e.exponents) parts.push_back(1u << a);
  }
  return Partition(std::move(parts));
}

/// Exponent s with |X_{n_2} cap Pi| = n_2! (n - n_2)! / 2^s.
inline unsigned s_exponent(unsigned n) {
  require_pi_domain(n, "s_exponent");
  const auto e = two_adic(n);
  unsigned s = 0;
  for (unsigned a : e.exponents) s += a;
  if (detail::parity_matches_terms(e)) s += e.leading() - 1;
  return s;
}

/// f(n) = 2^{s+1} C(n, n_2) / C(n, floor(n/2)), exact.
inline ExactRatio f_ratio(unsigned n) {
  require_pi_domain(n, "f_ratio");
  const unsigned s = s_exponent(n);
  return ratio(pow2(s + 1) * binomial(n, two_part(n)), binomial(n, n / 2));
}

} // namespace sigma0
