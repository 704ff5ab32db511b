#include "treeperm/tree.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "treeperm/error.hpp"

namespace treeperm {

namespace {
constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
}

OrderedTree::OrderedTree() : OrderedTree(std::vector<std::size_t>{kNoParent}) {}

OrderedTree::OrderedTree(std::vector<std::size_t> parent_in_preorder)
    : parent_(std::move(parent_in_preorder)) {
  index();
}

void OrderedTree::index() {
  const auto n = parent_.size();
  children_.assign(n, {});
  child_index_.assign(n, 0);
  depth_.assign(n, 0);
  for (std::size_t v = 1; v < n; ++v) {
    child_index_[v] = children_[parent_[v]].size();
    children_[parent_[v]].push_back(v);
    depth_[v] = depth_[parent_[v]] + 1;
  }
  // Preorder numbering: a subtree ends where the next vertex leaves it.
  last_.resize(n);
  std::iota(last_.begin(), last_.end(), 0);
  for (std::size_t v = n; v-- > 1;) {
    last_[parent_[v]] = std::max(last_[parent_[v]], last_[v]);
  }
}

OrderedTree OrderedTree::from_children(const std::vector<std::vector<std::size_t>>& children,
                                       std::size_t root) {
  if (root >= children.size()) throw Error(ErrorKind::InvalidArgument, "root out of range");
  std::vector<std::size_t> parent;
  std::vector<bool> seen(children.size(), false);
  seen[root] = true;
  // (original vertex, new id of its parent)
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root, kNoParent}};
  while (!stack.empty()) {
    const auto [v, parent_id] = stack.back();
    stack.pop_back();
    const std::size_t id = parent.size();
    parent.push_back(parent_id);
    const auto& kids = children[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (*it >= children.size() || seen[*it]) {
        throw Error(ErrorKind::InvalidArgument, "child lists do not form a tree");
      }
      seen[*it] = true;
      stack.emplace_back(*it, id);
    }
  }
  return OrderedTree(std::move(parent));
}

EdgeRef OrderedTree::edge_ref(std::size_t edge) const {
  if (edge < 1 || edge >= parent_.size()) {
    throw Error(ErrorKind::OutOfRange, "edge " + std::to_string(edge) + " outside 1.." +
                                           std::to_string(edge_count()));
  }
  return EdgeRef{parent_[edge], child_index_[edge]};
}

std::size_t OrderedTree::edge_id(const EdgeRef& ref) const {
  const auto& kids = children_.at(ref.parent);
  if (ref.child_index >= kids.size()) throw Error(ErrorKind::OutOfRange, "no such edge");
  return kids[ref.child_index];
}

OrderedTree parse_tree(std::string_view text) {
  std::vector<std::size_t> parent{kNoParent};
  std::size_t current = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') {
      parent.push_back(current);
      current = parent.size() - 1;
    } else if (c == ')') {
      if (current == 0) throw ParseError(i, "unmatched ')'");
      current = parent[current];
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  if (current != 0) throw ParseError(text.size(), "unclosed '('");
  return OrderedTree(std::move(parent));
}

std::string serialize_tree(const OrderedTree& t) {
  std::string out;
  out.reserve(2 * t.edge_count());
  for (std::size_t v = 1; v < t.vertex_count(); ++v) {
    // Close every subtree that ended before v.
    const std::size_t prev = v - 1;
    if (prev != 0) {
      std::size_t u = prev;
      // prev is closed, then its ancestors up to (excluding) v's parent.
      while (u != t.parent(v)) {
        out += ')';
        u = t.parent(u);
      }
    }
    out += '(';
  }
  if (!t.empty()) {
    for (std::size_t u = t.vertex_count() - 1; u != 0; u = t.parent(u)) out += ')';
  }
  return out;
}

OrderedTree star_tree(std::size_t edges) {
  std::string s;
  for (std::size_t i = 0; i < edges; ++i) s += "()";
  return parse_tree(s);
}

OrderedTree chain_tree(std::size_t edges) {
  return parse_tree(std::string(edges, '(') + std::string(edges, ')'));
}

std::size_t leaf_count(const OrderedTree& t) {
  std::size_t leaves = 0;
  for (std::size_t v = 1; v < t.vertex_count(); ++v) leaves += t.is_leaf(v) ? 1 : 0;
  return leaves;
}

std::size_t height(const OrderedTree& t) {
  std::size_t h = 0;
  for (std::size_t v = 1; v < t.vertex_count(); ++v) h = std::max(h, t.depth(v));
  return h;
}

std::vector<EdgeSet> enumerate_subtrees(const OrderedTree& t) {
  std::vector<EdgeSet> out;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    const auto& kids = t.children(v);
    for (std::size_t a = 0; a < kids.size(); ++a) {
      for (std::size_t b = a; b < kids.size(); ++b) {
        EdgeSet edges(t.subtree_last(kids[b]) - kids[a] + 1);
        std::iota(edges.begin(), edges.end(), kids[a]);
        out.push_back(std::move(edges));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const EdgeSet& x, const EdgeSet& y) {
    return x.front() != y.front() ? x.front() < y.front() : x.size() < y.size();
  });
  return out;
}

}  // namespace treeperm
