#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/combinat/partition.hpp"
#include "sigma0/errors.hpp"

namespace sigma0 {

/// Permutation of {0, ..., n-1} for n <= Perm::kMaxDegree. Printed and parsed
/// with 1-based points. Products act left to right: (p * q)(x) = q(p(x)).
class Perm {
public:
  static constexpr unsigned kMaxDegree = 32;
  static constexpr unsigned kMaxRankDegree = 20;

  Perm() = default;

  static Perm identity(unsigned n) {
    check_degree(n);
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (unsigned i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  /// From a 0-based image list; must be a bijection.
  static Perm from_images(const std::vector<unsigned>& images) {
    const auto n = static_cast<unsigned>(images.size());
    check_degree(n);
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    std::uint64_t seen = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (images[i] >= n) throw precondition_error("Perm: image out of range");
      if (seen >> images[i] & 1u) throw precondition_error("Perm: images are not a bijection");
      seen |= std::uint64_t{1} << images[i];
      p.img_[i] = static_cast<std::uint8_t>(images[i]);
    }
    return p;
  }

  /// Disjoint-cycle notation, 1-based: "(1,2,3)(4,5)", "()" for the identity.
  /// A cycle written without commas, e.g. "(3465)", reads one digit per point.
  static Perm parse_cycles(std::string_view text, unsigned n) {
    check_degree(n);
    Perm p = identity(n);
    std::uint64_t used = 0;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
      throw parse_error("parse_cycles: " + why + " in '" + std::string(text) + "'");
    };
    while (i < text.size()) {
      const char c = text[i];
      if (c == ' ') {
        ++i;
        continue;
      }
      if (c != '(') fail("expected '('");
      const auto close = text.find(')', i);
      if (close == std::string_view::npos) fail("unterminated cycle");
      const auto body = text.substr(i + 1, close - i - 1);
      std::vector<unsigned> points;
      const bool compact = body.find(',') == std::string_view::npos && body.find(' ') == std::string_view::npos;
      if (compact) {
        for (char d : body) {
          if (d < '1' || d > '9') fail("bad point");
          points.push_back(static_cast<unsigned>(d - '0'));
        }
      } else {
        unsigned v = 0;
        bool have = false;
        for (char d : body) {
          if (d >= '0' && d <= '9') {
            v = v * 10 + static_cast<unsigned>(d - '0');
            have = true;
          } else if (d == ',' || d == ' ') {
            if (have) points.push_back(v);
            v = 0;
            have = false;
          } else {
            fail("bad character");
          }
        }
        if (have) points.push_back(v);
      }
      for (unsigned pt : points) {
        if (pt < 1 || pt > n) fail("point " + std::to_string(pt) + " out of range 1.." + std::to_string(n));
        if (used >> (pt - 1) & 1u) fail("repeated point " + std::to_string(pt));
        used |= std::uint64_t{1} << (pt - 1);
      }
      for (std::size_t k = 0; k < points.size(); ++k)
        p.img_[points[k] - 1] = static_cast<std::uint8_t>(points[(k + 1) % points.size()] - 1);
      i = close + 1;
    }
    return p;
  }

  unsigned degree() const { return n_; }
  unsigned operator()(unsigned x) const { return img_[x]; }
  unsigned image(unsigned x) const { return img_[x]; }

  bool is_identity() const {
    for (unsigned i = 0; i < n_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Apply *this first, then q.
  Perm operator*(const Perm& q) const {
    require_same_degree(q);
    Perm r;
    r.n_ = n_;
    for (unsigned i = 0; i < n_; ++i) r.img_[i] = q.img_[img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.n_ = n_;
    for (unsigned i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  /// h^{-1} * this * h.
  Perm conjugate_by(const Perm& h) const {
    require_same_degree(h);
    Perm r;
    r.n_ = n_;
    for (unsigned i = 0; i < n_; ++i) r.img_[h.img_[i]] = h.img_[img_[i]];
    return r;
  }

  /// Cycle lengths including fixed points.
  std::vector<unsigned> cycle_lengths() const {
    std::vector<unsigned> out;
    std::uint64_t seen = 0;
    for (unsigned i = 0; i < n_; ++i) {
      if (seen >> i & 1u) continue;
      unsigned len = 0;
      unsigned j = i;
      do {
        seen |= std::uint64_t{1} << j;
        j = img_[j];
        ++len;
      } while (j != i);
      out.push_back(len);
    }
    return out;
  }

  std::vector<std::vector<unsigned>> cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::uint64_t seen = 0;
    for (unsigned i = 0; i < n_; ++i) {
      if (seen >> i & 1u) continue;
      std::vector<unsigned> c;
      unsigned j = i;
      do {
        seen |= std::uint64_t{1} << j;
        c.push_back(j);
        j = img_[j];
      } while (j != i);
      out.push_back(std::move(c));
    }
    return out;
  }

  Partition cycle_type() const { return Partition(cycle_lengths()); }

  Parity sign() const {
    const auto lens = cycle_lengths();
    return ((n_ - lens.size()) % 2 == 0) ? Parity::even : Parity::odd;
  }

  std::uint64_t order() const {
    std::uint64_t l = 1;
    for (unsigned len : cycle_lengths()) l = std::lcm(l, static_cast<std::uint64_t>(len));
    return l;
  }

  /// Image of a point set given as a bit mask.
  std::uint32_t image_of_mask(std::uint32_t mask) const {
    std::uint32_t out = 0;
    while (mask) {
      const unsigned i = static_cast<unsigned>(__builtin_ctz(mask));
      out |= 1u << img_[i];
      mask &= mask - 1;
    }
    return out;
  }

  /// Lexicographic rank in S_n (factorial number system), n <= 20.
  std::uint64_t rank() const {
    if (n_ > kMaxRankDegree) throw precondition_error("Perm::rank: degree exceeds 20");
    std::uint64_t r = 0;
    std::uint32_t used = 0;
    for (unsigned i = 0; i < n_; ++i) {
      const std::uint32_t below = (1u << img_[i]) - 1u;
      const auto smaller_unused = static_cast<unsigned>(__builtin_popcount(below & ~used));
      r = r * (n_ - i) + smaller_unused;
      used |= 1u << img_[i];
    }
    return r;
  }

  static Perm unrank(std::uint64_t r, unsigned n) {
    if (n > kMaxRankDegree) throw precondition_error("Perm::unrank: degree exceeds 20");
    std::vector<unsigned> digits(n);
    for (unsigned i = n; i-- > 0;) {
      digits[i] = static_cast<unsigned>(r % (n - i));
      r /= (n - i);
    }
    std::vector<unsigned> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<unsigned> images(n);
    for (unsigned i = 0; i < n; ++i) {
      images[i] = pool[digits[i]];
      pool.erase(pool.begin() + digits[i]);
    }
    return from_images(images);
  }

  std::string str() const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      s += "(";
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(c[k] + 1);
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

  bool operator==(const Perm& o) const {
    if (n_ != o.n_) return false;
    for (unsigned i = 0; i < n_; ++i)
      if (img_[i] != o.img_[i]) return false;
    return true;
  }

  bool operator<(const Perm& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (unsigned i = 0; i < n_; ++i)
      if (img_[i] != o.img_[i]) return img_[i] < o.img_[i];
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ n_;
    for (unsigned i = 0; i < n_; ++i) h = (h ^ img_[i]) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }

private:
  static void check_degree(unsigned n) {
    if (n > kMaxDegree) throw precondition_error("Perm: degree exceeds " + std::to_string(kMaxDegree));
  }
  void require_same_degree(const Perm& q) const {
    if (q.n_ != n_) throw precondition_error("Perm: degree mismatch");
  }

  std::array<std::uint8_t, kMaxDegree> img_{};
  std::uint8_t n_ = 0;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

/// Order is a prime power (the identity counts: order 1 = p^0).
inline bool is_primary(const Perm& p) { return prime_power_base(p.order()) != 0; }

/// Whether a cycle type labels primary elements: every part a power of one prime (or all 1).
inline bool is_primary_type(const Partition& lambda) {
  std::uint64_t base = 1;
  for (unsigned part : lambda.parts()) {
    if (part == 1) continue;
    const auto b = prime_power_base(static_cast<std::uint64_t>(part));
    if (b == 0) return false;
    if (base != 1 && b != base) return false;
    base = b;
  }
  return true;
}

} // namespace sigma0
