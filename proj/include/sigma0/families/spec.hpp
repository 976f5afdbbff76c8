#pragma once

#include <memory>
#include <optional>
#include <string>

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/errors.hpp"
#include "sigma0/families/catalog.hpp"
#include "sigma0/families/counts.hpp"

namespace sigma0 {

enum class FamilyKind { alternating, set_stab, block_stab, primitive };

/// A conjugacy family of maximal subgroups of S_n.
///   alternating           A_n
///   set_stab(m)           X_m, stabilizers of m-sets (1 <= m < n/2)
///   set_stab(m, anchor)   the X_m members whose m-set contains `anchor`
///   block_stab(d)         W_d, stabilizers of a partition into n/d blocks of size d
///   primitive(entry)      conjugates of a catalogued primitive group
struct FamilySpec {
  FamilyKind kind = FamilyKind::alternating;
  unsigned n = 0;
  unsigned size = 0;                // m for set_stab, d for block_stab
  std::optional<unsigned> anchor;   // 0-based point
  std::shared_ptr<const PrimitiveCatalogEntry> entry;

  static FamilySpec alternating(unsigned n) {
    FamilySpec s;
    s.kind = FamilyKind::alternating;
    s.n = n;
    return s.validated();
  }

  static FamilySpec set_stab(unsigned n, unsigned m) {
    FamilySpec s;
    s.kind = FamilyKind::set_stab;
    s.n = n;
    s.size = m;
    return s.validated();
  }

  static FamilySpec anchored_set_stab(unsigned n, unsigned m, unsigned anchor) {
    FamilySpec s;
    s.kind = FamilyKind::set_stab;
    s.n = n;
    s.size = m;
    s.anchor = anchor;
    return s.validated();
  }

  static FamilySpec block_stab(unsigned n, unsigned d) {
    FamilySpec s;
    s.kind = FamilyKind::block_stab;
    s.n = n;
    s.size = d;
    return s.validated();
  }

  static FamilySpec primitive(std::shared_ptr<const PrimitiveCatalogEntry> e) {
    if (!e) throw precondition_error("FamilySpec::primitive: missing catalog entry");
    FamilySpec s;
    s.kind = FamilyKind::primitive;
    s.n = e->n;
    s.entry = std::move(e);
    return s.validated();
  }

  /// "A10", "X2", "X4@1" (anchored at point 1), "W5", or the catalog name.
  std::string label() const {
    switch (kind) {
    case FamilyKind::alternating: return "A" + std::to_string(n);
    case FamilyKind::set_stab:
      return "X" + std::to_string(size) + (anchor ? "@" + std::to_string(*anchor + 1) : std::string());
    case FamilyKind::block_stab: return "W" + std::to_string(size);
    case FamilyKind::primitive: return entry->name;
    }
    return {};
  }

  Nat order() const {
    switch (kind) {
    case FamilyKind::alternating: return factorial(n) / 2;
    case FamilyKind::set_stab: return factorial(size) * factorial(n - size);
    case FamilyKind::block_stab: return block_stab_order(n, size);
    case FamilyKind::primitive: return entry->order;
    }
    return 0;
  }

private:
  FamilySpec validated() const {
    const auto bad = [&](const std::string& why) {
      throw precondition_error("FamilySpec " + label_unchecked() + " for n = " + std::to_string(n) + ": " + why);
    };
    if (n < 2) bad("degree out of range");
    switch (kind) {
    case FamilyKind::alternating: break;
    case FamilyKind::set_stab:
      if (anchor) {
        if (size < 1 || size >= n) bad("need 1 <= m < n");
        if (*anchor >= n) bad("anchor point out of range");
      } else if (size < 1 || 2 * size >= n) {
        bad("need 1 <= m < n/2");
      }
      break;
    case FamilyKind::block_stab:
      if (size <= 1 || size >= n || n % size != 0) bad("block size must be a proper nontrivial divisor of n");
      break;
    case FamilyKind::primitive: break;
    }
    return *this;
  }

  std::string label_unchecked() const {
    return kind == FamilyKind::primitive && entry ? entry->name : (kind == FamilyKind::alternating ? "A" : kind == FamilyKind::set_stab ? "X" : "W") + std::to_string(size);
  }
};

/// Order, index and number of members of a family.
struct FamilyStats {
  Nat order;
  Nat index;
  Nat conjugates;
};

inline FamilyStats family_stats(const FamilySpec& s) {
  FamilyStats st;
  st.order = s.order();
  st.index = factorial(s.n) / st.order;
  switch (s.kind) {
  case FamilyKind::alternating: st.conjugates = 1; break;
  case FamilyKind::set_stab:
    st.conjugates = s.anchor ? binomial(s.n - 1, s.size - 1) : binomial(s.n, s.size);
    break;
  case FamilyKind::block_stab: st.conjugates = st.index; break;
  case FamilyKind::primitive: st.conjugates = s.entry->conjugates; break;
  }
  return st;
}

/// Parses a family label for degree n: "A", "An", "X<m>", "W<d>", or a catalog name.
inline FamilySpec parse_family(const std::string& text, unsigned n, const PrimitiveCatalog* catalog) {
  const auto digits = [&](std::size_t from) {
    return text.size() > from && text.find_first_not_of("0123456789", from) == std::string::npos;
  };
  if (text == "A" || (text[0] == 'A' && digits(1) && std::stoul(text.substr(1)) == n)) return FamilySpec::alternating(n);
  if (text[0] == 'X' && digits(1)) return FamilySpec::set_stab(n, static_cast<unsigned>(std::stoul(text.substr(1))));
  if (text[0] == 'W' && digits(1)) return FamilySpec::block_stab(n, static_cast<unsigned>(std::stoul(text.substr(1))));
  if (catalog) return FamilySpec::primitive(catalog->find(n, text));
  throw precondition_error("unknown family '" + text + "'");
}

} // namespace sigma0
