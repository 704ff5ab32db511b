#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "treeperm/factors.hpp"
#include "treeperm/perm.hpp"

namespace treeperm {

enum class InsertKind { Inner, Left, Right };

enum class OpKind { DeleteAt, InsertInner, InsertLeft, InsertRight, InsertEmpty };

// One edit step. `pos` is used by DeleteAt, `span` by the three factor
// insertions; InsertEmpty uses neither.
struct EditOp {
  OpKind kind = OpKind::InsertEmpty;
  std::size_t pos = 0;
  FactorSpan span{};

  static EditOp delete_at(std::size_t pos) { return {OpKind::DeleteAt, pos, {}}; }
  static EditOp insert(InsertKind kind, FactorSpan span);
  static EditOp insert_empty() { return {}; }

  bool operator==(const EditOp&) const = default;
};

std::string describe(const EditOp& op);

// Values >= a move up by one.
Word shift_bar(std::span<const int> w, int a);

// Removes the letter at `pos` and renormalizes. Throws Error(OutOfRange).
Permutation delete_at(const Permutation& p, std::size_t pos);

// With p = u f v and f a complete factor:
//   inner: bar(u) a f bar(v),       a = max f + 1
//   right: bar(u) f a bar(v),       a = max f + 1
//   left:  bar(u) a bar(f) bar(v),  a = min f
// Throws Error(NotComplete) when f is not a complete factor.
Permutation insert_inner(const Permutation& p, FactorSpan f);
Permutation insert_right(const Permutation& p, FactorSpan f);
Permutation insert_left(const Permutation& p, FactorSpan f);
Permutation insert_at(const Permutation& p, InsertKind kind, FactorSpan f);

// The empty permutation becomes (1).
Permutation insert_empty();

// Throws Error(InvalidArgument) for InsertEmpty on a nonempty permutation.
Permutation apply(const Permutation& p, const EditOp& op);

// Every distinct result of one deletion or insertion, sorted.
std::vector<Permutation> neighbors(const Permutation& p);

// Distinct results of one deletion / one insertion, counted separately.
struct NeighborCounts {
  std::size_t deletions = 0;
  std::size_t insertions = 0;
};
NeighborCounts count_neighbors(const Permutation& p);

}  // namespace treeperm
