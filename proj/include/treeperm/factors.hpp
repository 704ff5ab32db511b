#pragma once

#include <cstddef>
#include <vector>

#include "treeperm/perm.hpp"

namespace treeperm {

// Inclusive 1-based range of positions in a host permutation.
struct FactorSpan {
  std::size_t start = 1;
  std::size_t end = 1;

  std::size_t length() const noexcept { return end - start + 1; }
  auto operator<=>(const FactorSpan&) const = default;
};

// Throws Error(OutOfRange) unless 1 <= start <= end <= p.size().
void check_span(const Permutation& p, FactorSpan s);

// The letters covered by `s`.
Word factor_word(const Permutation& p, FactorSpan s);

// Values of the factor form an integer interval.
bool is_compact(const Permutation& p, FactorSpan s);

// Compact, and no nonempty factor g right after it makes fg compact with the
// same maximum.
bool is_complete(const Permutation& p, FactorSpan s);

// Every compact factor, ordered by start then length.
std::vector<FactorSpan> compact_factors(const Permutation& p);

// Every complete factor, ordered by start then length. These are exactly the
// subtrees of decode(p). Throws Error(NotStackSortable).
std::vector<FactorSpan> complete_factors(const Permutation& p);

enum class CompactKind { Subtree, InternalPath };

struct CompactClass {
  CompactKind kind = CompactKind::Subtree;
  // For InternalPath: the path's edges, top to bottom. They are consecutive
  // positions starting at the span's start.
  std::vector<std::size_t> path;

  bool operator==(const CompactClass&) const = default;
};

// Subtree when the span's edges form a subtree of decode(p); otherwise the
// downward path of edges starting at the span's first edge, where every
// inner vertex has a single child and the last vertex is not a leaf.
// Throws Error(InvalidArgument) if the span is not compact.
CompactClass classify_compact(const Permutation& p, FactorSpan s);

}  // namespace treeperm
