#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigma0/combinat/numbers.hpp"

namespace sigma0 {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// A partition of n, parts stored non-increasing. Doubles as the label of a
/// conjugacy class of S_n (the cycle type).
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_)
      if (p == 0) throw precondition_error("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
  }

  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  /// Parses "4,4,2", "(4,4,2)" or "4 4 2".
  static Partition parse(std::string_view text) {
    std::vector<unsigned> parts;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c >= '0' && c <= '9') {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc()) throw parse_error("Partition: bad number in '" + std::string(text) + "'");
        parts.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
      } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
        ++i;
      } else {
        throw parse_error("Partition: unexpected character in '" + std::string(text) + "'");
      }
    }
    if (parts.empty()) throw parse_error("Partition: empty partition text");
    return Partition(std::move(parts));
  }

  unsigned n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned operator[](std::size_t i) const { return parts_[i]; }

  /// (part, multiplicity) pairs, parts decreasing.
  std::vector<std::pair<unsigned, unsigned>> multiplicities() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p : parts_) {
      if (!out.empty() && out.back().first == p)
        ++out.back().second;
      else
        out.emplace_back(p, 1u);
    }
    return out;
  }

  /// Parts padded with trailing 1s up to degree n.
  Partition padded_to(unsigned n) const {
    if (n < n_) throw precondition_error("Partition::padded_to: degree too small");
    std::vector<unsigned> p = parts_;
    p.insert(p.end(), n - n_, 1u);
    return Partition(std::move(p));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// Number of permutations of S_n with the given cycle type: n! / prod i^{m_i} m_i!.
inline Nat class_size(const Partition& lambda) {
  Nat den = 1;
  for (auto [part, mult] : lambda.multiplicities()) den *= pow_nat(part, mult) * factorial(mult);
  return factorial(lambda.n()) / den;
}

/// Parity of any permutation of this cycle type.
inline Parity sign_of_type(const Partition& lambda) {
  return ((lambda.n() - lambda.length()) % 2 == 0) ? Parity::even : Parity::odd;
}

inline bool is_power_of_two(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

/// Visits every partition of n (parts non-increasing), largest-first order.
template <class F>
void for_each_partition(unsigned n, F&& visit) {
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
    if (rest == 0) {
      visit(Partition(parts));
      return;
    }
    for (unsigned p = std::min(rest, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  if (n == 0) {
    visit(Partition());
    return;
  }
  rec(n, n);
}

/// Visits every partition of n whose parts come from `allowed` (any order).
template <class F>
void for_each_partition_with_parts(unsigned n, std::vector<unsigned> allowed, F&& visit) {
  std::sort(allowed.begin(), allowed.end(), std::greater<>());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  std::vector<unsigned> parts;
  std::function<void(unsigned, std::size_t)> rec = [&](unsigned rest, std::size_t from) {
    if (rest == 0) {
      visit(Partition(parts));
      return;
    }
    for (std::size_t i = from; i < allowed.size(); ++i) {
      if (allowed[i] > rest) continue;
      parts.push_back(allowed[i]);
      rec(rest - allowed[i], i);
      parts.pop_back();
    }
  };
  rec(n, 0);
}

/// Visits the partitions of n into powers of two.
template <class F>
void for_each_binary_partition(unsigned n, F&& visit) {
  std::vector<unsigned> allowed;
  for (unsigned p = 1; p <= n; p <<= 1) allowed.push_back(p);
  for_each_partition_with_parts(n, std::move(allowed), std::forward<F>(visit));
}

} // namespace sigma0
