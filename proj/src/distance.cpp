#include "treeperm/distance.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "treeperm/codec.hpp"
#include "treeperm/edit_ops.hpp"
#include "treeperm/error.hpp"

namespace treeperm {

namespace {

// Postorder view of a tree, 1-based as in the classic formulation.
struct PostorderTree {
  std::size_t size = 0;
  std::vector<std::size_t> leftmost;   // leftmost[i]: leftmost leaf under i
  std::vector<std::size_t> keyroots;   // increasing
  std::vector<std::size_t> preorder;   // preorder vertex of postorder node i

  explicit PostorderTree(const OrderedTree& t) {
    size = t.vertex_count();
    leftmost.assign(size + 1, 0);
    preorder.assign(size + 1, 0);
    std::vector<std::size_t> post_of(size, 0);
    std::size_t next = 1;
    std::vector<std::pair<std::size_t, bool>> stack{{0, false}};
    while (!stack.empty()) {
      auto [v, expanded] = stack.back();
      if (expanded) {
        stack.pop_back();
        post_of[v] = next;
        preorder[next] = v;
        const auto& kids = t.children(v);
        leftmost[next] = kids.empty() ? next : leftmost[post_of[kids.front()]];
        ++next;
        continue;
      }
      stack.back().second = true;
      const auto& kids = t.children(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, false);
    }
    // A keyroot is the highest node with a given leftmost leaf.
    std::vector<bool> taken(size + 1, false);
    for (std::size_t i = size; i >= 1; --i) {
      if (!taken[leftmost[i]]) {
        taken[leftmost[i]] = true;
        keyroots.push_back(i);
      }
    }
    std::reverse(keyroots.begin(), keyroots.end());
  }
};

class ZhangShasha {
 public:
  ZhangShasha(const OrderedTree& t1, const OrderedTree& t2)
      : a_(t1), b_(t2), tree_dist_((a_.size + 1) * (b_.size + 1), 0) {
    for (const auto i : a_.keyroots) {
      for (const auto j : b_.keyroots) forest(i, j);
    }
  }

  std::size_t distance() const { return td(a_.size, b_.size); }

  // Matched (postorder) node pairs of one optimal mapping.
  std::vector<std::pair<std::size_t, std::size_t>> mapping() {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::pair<std::size_t, std::size_t>> todo{{a_.size, b_.size}};
    while (!todo.empty()) {
      const auto [i, j] = todo.back();
      todo.pop_back();
      forest(i, j);
      const auto li = a_.leftmost[i];
      const auto lj = b_.leftmost[j];
      std::size_t x = i;
      std::size_t y = j;
      while (x + 1 > li || y + 1 > lj) {
        if (x + 1 == li) {
          --y;
        } else if (y + 1 == lj) {
          --x;
        } else if (a_.leftmost[x] == li && b_.leftmost[y] == lj) {
          if (fd(x, y) == fd(x - 1, y - 1)) {
            pairs.emplace_back(x, y);
            --x;
            --y;
          } else if (fd(x, y) == fd(x - 1, y) + 1) {
            --x;
          } else {
            --y;
          }
        } else {
          const auto lx = a_.leftmost[x];
          const auto ly = b_.leftmost[y];
          if (fd(x, y) == fd(lx - 1, ly - 1) + td(x, y)) {
            todo.emplace_back(x, y);
            x = lx - 1;
            y = ly - 1;
          } else if (fd(x, y) == fd(x - 1, y) + 1) {
            --x;
          } else {
            --y;
          }
        }
      }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
  }

  const PostorderTree& first() const { return a_; }
  const PostorderTree& second() const { return b_; }

 private:
  std::size_t& td(std::size_t i, std::size_t j) { return tree_dist_[i * (b_.size + 1) + j]; }
  std::size_t td(std::size_t i, std::size_t j) const { return tree_dist_[i * (b_.size + 1) + j]; }

  // Forest table for the current subproblem, indexed by absolute node ids
  // x in [li - 1, i], y in [lj - 1, j].
  std::size_t& fd(std::size_t x, std::size_t y) {
    return forest_[(x + 1 - fd_li_) * fd_cols_ + (y + 1 - fd_lj_)];
  }

  void forest(std::size_t i, std::size_t j) {
    fd_li_ = a_.leftmost[i];
    fd_lj_ = b_.leftmost[j];
    fd_cols_ = j - fd_lj_ + 2;
    forest_.assign((i - fd_li_ + 2) * fd_cols_, 0);
    for (std::size_t x = fd_li_; x <= i; ++x) fd(x, fd_lj_ - 1) = fd(x - 1, fd_lj_ - 1) + 1;
    for (std::size_t y = fd_lj_; y <= j; ++y) fd(fd_li_ - 1, y) = fd(fd_li_ - 1, y - 1) + 1;
    for (std::size_t x = fd_li_; x <= i; ++x) {
      for (std::size_t y = fd_lj_; y <= j; ++y) {
        const auto indel = std::min(fd(x - 1, y), fd(x, y - 1)) + 1;
        if (a_.leftmost[x] == fd_li_ && b_.leftmost[y] == fd_lj_) {
          fd(x, y) = std::min(indel, fd(x - 1, y - 1));
          td(x, y) = fd(x, y);
        } else {
          fd(x, y) = std::min(indel, fd(a_.leftmost[x] - 1, b_.leftmost[y] - 1) + td(x, y));
        }
      }
    }
  }

  PostorderTree a_;
  PostorderTree b_;
  std::vector<std::size_t> tree_dist_;
  std::vector<std::size_t> forest_;
  std::size_t fd_li_ = 0;
  std::size_t fd_lj_ = 0;
  std::size_t fd_cols_ = 0;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (const int v : p.values()) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};

}  // namespace

DistanceResult tree_edit_distance(const OrderedTree& t1, const OrderedTree& t2) {
  ZhangShasha zs(t1, t2);
  DistanceResult out;
  out.distance = zs.distance();
  const auto root1 = zs.first().size;
  const auto root2 = zs.second().size;
  for (const auto& [x, y] : zs.mapping()) {
    if (x == root1 && y == root2) continue;
    if (x == root1 || y == root2) {
      throw Error(ErrorKind::Internal, "mapping matched a root with a non-root vertex");
    }
    out.witness_a.push_back(zs.first().preorder[x]);
    out.witness_b.push_back(zs.second().preorder[y]);
  }
  std::sort(out.witness_a.begin(), out.witness_a.end());
  std::sort(out.witness_b.begin(), out.witness_b.end());
  const auto labels = encode(t1);
  Word sub;
  for (const auto pos : out.witness_a) sub.push_back(labels.at(pos));
  out.common = normalize(sub);
  return out;
}

std::size_t tree_distance(const OrderedTree& t1, const OrderedTree& t2) {
  return ZhangShasha(t1, t2).distance();
}

DistanceResult perm_distance(const Permutation& a, const Permutation& b) {
  return tree_edit_distance(decode(a), decode(b));
}

std::optional<std::size_t> bfs_oracle_distance(const Permutation& a, const Permutation& b,
                                               std::size_t cap) {
  if (a.size() > kBfsSizeLimit || b.size() > kBfsSizeLimit) {
    throw Error(ErrorKind::SizeLimit,
                "breadth-first oracle limited to " + std::to_string(kBfsSizeLimit) + " letters");
  }
  for (const auto* p : {&a, &b}) {
    if (!is_stack_sortable(*p)) {
      throw Error(ErrorKind::NotStackSortable, to_string(*p) + " is not stack-sortable");
    }
  }
  if (a == b) return 0;

  using Visited = std::unordered_map<Permutation, std::size_t, PermHash>;
  Visited seen_a{{a, 0}};
  Visited seen_b{{b, 0}};
  std::vector<Permutation> frontier_a{a};
  std::vector<Permutation> frontier_b{b};
  std::size_t depth_a = 0;
  std::size_t depth_b = 0;

  while (depth_a + depth_b < cap) {
    // Grow the smaller side by one full level; neighbors() is symmetric
    // because insertions and deletions invert each other.
    const bool grow_a = frontier_a.size() <= frontier_b.size();
    auto& frontier = grow_a ? frontier_a : frontier_b;
    auto& seen = grow_a ? seen_a : seen_b;
    const auto& other = grow_a ? seen_b : seen_a;
    auto& depth = grow_a ? depth_a : depth_b;

    std::optional<std::size_t> best;
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (auto& q : neighbors(p)) {
        if (seen.contains(q)) continue;
        if (const auto hit = other.find(q); hit != other.end()) {
          const auto total = depth + 1 + hit->second;
          if (!best || total < *best) best = total;
        }
        seen.emplace(q, depth + 1);
        next.push_back(std::move(q));
      }
    }
    ++depth;
    if (best) return *best <= cap ? best : std::nullopt;
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<EditStep> edit_script(const Permutation& a, const Permutation& b) {
  const auto r = perm_distance(a, b);

  // Deleting right to left keeps the remaining positions valid.
  const auto reduce = [](const Permutation& p, const std::vector<std::size_t>& keep) {
    std::vector<EditStep> steps;
    Permutation current = p;
    for (std::size_t pos = p.size(); pos >= 1; --pos) {
      if (std::binary_search(keep.begin(), keep.end(), pos)) continue;
      current = delete_at(current, pos);
      steps.push_back({EditOp::delete_at(pos), current});
    }
    return steps;
  };

  auto script = reduce(a, r.witness_a);
  const auto down = reduce(b, r.witness_b);
  // Walk b's reduction backwards, replacing each deletion by an insertion.
  for (std::size_t i = down.size(); i-- > 0;) {
    const Permutation& from = down[i].result;
    const Permutation& to = i == 0 ? b : down[i - 1].result;
    std::optional<EditOp> found;
    if (from.empty()) {
      found = EditOp::insert_empty();
    } else {
      for (const auto f : complete_factors(from)) {
        for (const auto kind : {InsertKind::Inner, InsertKind::Left, InsertKind::Right}) {
          if (!found && insert_at(from, kind, f) == to) found = EditOp::insert(kind, f);
        }
      }
    }
    if (!found) throw Error(ErrorKind::Internal, "no insertion inverts a deletion");
    script.push_back({*found, to});
  }
  return script;
}

bool pattern_contains(const Permutation& a, const Permutation& b) {
  return perm_distance(a, b).common.size() == b.size();
}

}  // namespace treeperm
