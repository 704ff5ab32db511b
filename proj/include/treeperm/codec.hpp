#pragma once

#include "treeperm/perm.hpp"
#include "treeperm/tree.hpp"

namespace treeperm {

// Labels the edges 1..n in postorder and reads the labels back in preorder.
// Letter k of the result is the label of edge k of `t`.
Permutation encode(const OrderedTree& t);

// Inverse of encode. Splits p = I n J around its maximum: the edge labelled n
// becomes the rightmost root edge, tree(I) hangs on the root to its left and
// tree(J) hangs below it. Throws Error(NotStackSortable) naming a 231 triple.
OrderedTree decode(const Permutation& p);

}  // namespace treeperm
