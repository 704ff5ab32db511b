#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "treeperm/edit_ops.hpp"
#include "treeperm/perm.hpp"
#include "treeperm/tree.hpp"

namespace treeperm {

struct DistanceResult {
  std::size_t distance = 0;
  // A largest common pattern u, so distance == |a| + |b| - 2|u|.
  Permutation common;
  // Increasing 1-based positions realizing `common` in each input. They are
  // the edges matched by the optimal mapping.
  std::vector<std::size_t> witness_a;
  std::vector<std::size_t> witness_b;
};

// Unit-cost edge insertion/deletion distance between ordered trees, by the
// keyroot dynamic program over vertices. Roots always match, so non-root
// vertices stand for their parent edges. The backtrace prefers a match, then
// a deletion from `t1`, then an insertion.
DistanceResult tree_edit_distance(const OrderedTree& t1, const OrderedTree& t2);

// Distance only; skips the backtrace.
std::size_t tree_distance(const OrderedTree& t1, const OrderedTree& t2);

// Same answer as tree_edit_distance on the decoded trees.
// Throws Error(NotStackSortable).
DistanceResult perm_distance(const Permutation& a, const Permutation& b);

struct EditStep {
  EditOp op;
  Permutation result;
};

// A shortest edit sequence from a to b: the deletions that reduce a to the
// common pattern, then the insertions that grow it into b.
// Throws Error(NotStackSortable).
std::vector<EditStep> edit_script(const Permutation& a, const Permutation& b);

// Inputs larger than this are refused by bfs_oracle_distance.
inline constexpr std::size_t kBfsSizeLimit = 9;

// Shortest path from a to b when one step is any element of neighbors().
// Bidirectional breadth-first search; nullopt when the distance exceeds
// `cap`. Throws Error(SizeLimit) or Error(NotStackSortable).
std::optional<std::size_t> bfs_oracle_distance(const Permutation& a, const Permutation& b,
                                               std::size_t cap);

// Whether `b` occurs as a pattern in `a`, in polynomial time through the
// common-pattern dynamic program. Throws Error(NotStackSortable).
bool pattern_contains(const Permutation& a, const Permutation& b);

}  // namespace treeperm
