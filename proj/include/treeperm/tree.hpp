#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace treeperm {

// Edge addressed as (parent vertex, index among the parent's children).
struct EdgeRef {
  std::size_t parent = 0;
  std::size_t child_index = 0;

  bool operator==(const EdgeRef&) const = default;
};

// Sorted edge identifiers.
using EdgeSet = std::vector<std::size_t>;

// Rooted ordered tree. Vertices are numbered in preorder with the root at 0,
// so vertex v >= 1 also names the edge (parent(v), v), and that number is the
// edge's position in a prefix traversal. Two trees are equal iff they have
// the same shape.
class OrderedTree {
 public:
  // The root-only tree.
  OrderedTree();

  // Builds from arbitrary child lists and renumbers vertices in preorder.
  static OrderedTree from_children(const std::vector<std::vector<std::size_t>>& children,
                                   std::size_t root = 0);

  std::size_t edge_count() const noexcept { return parent_.size() - 1; }
  std::size_t vertex_count() const noexcept { return parent_.size(); }
  bool empty() const noexcept { return parent_.size() == 1; }

  std::size_t parent(std::size_t v) const { return parent_.at(v); }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_.at(v); }
  bool is_leaf(std::size_t v) const { return children_.at(v).empty(); }
  // Last vertex (in preorder) of the subtree hanging at v.
  std::size_t subtree_last(std::size_t v) const { return last_.at(v); }
  std::size_t depth(std::size_t v) const { return depth_.at(v); }

  EdgeRef edge_ref(std::size_t edge) const;
  std::size_t edge_id(const EdgeRef& ref) const;

  bool operator==(const OrderedTree& other) const { return parent_ == other.parent_; }

 private:
  explicit OrderedTree(std::vector<std::size_t> parent_in_preorder);
  void index();

  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> last_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> child_index_;

  friend OrderedTree parse_tree(std::string_view text);
};

// Balanced-parenthesis text, one "()" pair per edge, the root's subtrees
// listed left to right. Whitespace is ignored. Throws ParseError.
OrderedTree parse_tree(std::string_view text);
std::string serialize_tree(const OrderedTree& t);

OrderedTree star_tree(std::size_t edges);
OrderedTree chain_tree(std::size_t edges);

std::size_t leaf_count(const OrderedTree& t);
std::size_t height(const OrderedTree& t);

// Every nonempty edge set whose removal leaves the root's component
// connected: the hanging subtrees of a contiguous run of one vertex's
// children. Ordered by first edge, then by size.
std::vector<EdgeSet> enumerate_subtrees(const OrderedTree& t);

}  // namespace treeperm
