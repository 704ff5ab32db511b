#pragma once

// Slow reference implementations written straight from the definitions.
// They only use the library's value types, never its algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "treeperm/perm.hpp"
#include "treeperm/tree.hpp"

namespace oracle {

using treeperm::Permutation;
using treeperm::Word;

// All balanced words with n pairs, '(' before ')'.
inline std::vector<std::string> dyck_words(std::size_t n) {
  std::vector<std::string> out;
  std::string cur;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t open, std::size_t close) {
    if (open == n && close == n) {
      out.push_back(cur);
      return;
    }
    if (open < n) {
      cur.push_back('(');
      go(open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back(')');
      go(open, close + 1);
      cur.pop_back();
    }
  };
  go(0, 0);
  return out;
}

// Splits a forest word into its top-level trees, each given by its inner word.
inline std::vector<std::string> top_level(const std::string& forest) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < forest.size(); ++i) {
    depth += forest[i] == '(' ? 1 : -1;
    if (depth == 0) {
      out.push_back(forest.substr(start + 1, i - start - 1));
      start = i + 1;
    }
  }
  return out;
}

// Label edges 1..n in postorder, list labels by preorder.
inline Word encode(const std::string& forest) {
  // Each '(' opens an edge in preorder; its matching ')' closes it in postorder.
  Word label_of_open(forest.size() / 2, 0);
  std::vector<std::size_t> stack;
  std::size_t opens = 0;
  int post = 0;
  for (std::size_t i = 0; i < forest.size(); ++i) {
    if (forest[i] == '(') {
      stack.push_back(opens++);
    } else {
      label_of_open[stack.back()] = ++post;
      stack.pop_back();
    }
  }
  return label_of_open;
}

// sigma = I n J: the edge for n hangs rightmost at the root, I stays with the
// root, J goes below the new edge.
inline std::string decode(const Word& w) {
  if (w.empty()) return "";
  const auto top = std::max_element(w.begin(), w.end());
  const Word left(w.begin(), top);
  const Word right(top + 1, w.end());
  // Relabel J onto 1..|J| so the recursion sees a permutation.
  Word j = right;
  const int shift = static_cast<int>(left.size());
  for (auto& x : j) x -= shift;
  return decode(left) + "(" + decode(j) + ")";
}

inline bool has_231(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      for (std::size_t k = j + 1; k < w.size(); ++k)
        if (w[k] < w[i] && w[i] < w[j]) return true;
  return false;
}

inline Word normalize(const Word& w) {
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  Word out;
  for (const int x : w) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                                   sorted.begin()) + 1);
  }
  return out;
}

// Every subsequence, by bitmask; fine for n <= 12.
inline std::size_t longest_monotone(const Word& w, bool increasing) {
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
    int last = increasing ? 0 : 1 << 20;
    bool good = true;
    std::size_t len = 0;
    for (std::size_t i = 0; i < w.size() && good; ++i) {
      if (!(mask >> i & 1u)) continue;
      good = increasing ? w[i] > last : w[i] < last;
      last = w[i];
      ++len;
    }
    if (good) best = std::max(best, len);
  }
  return best;
}

inline std::size_t leaves(const std::string& forest) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < forest.size(); ++i) n += forest[i] == '(' && forest[i + 1] == ')';
  return n;
}

inline std::size_t height(const std::string& forest) {
  int depth = 0;
  int best = 0;
  for (const char c : forest) {
    depth += c == '(' ? 1 : -1;
    best = std::max(best, depth);
  }
  return static_cast<std::size_t>(best);
}

// Largest common pattern length by trying every subsequence of `a`.
inline std::size_t common_pattern_length(const Word& a, const Word& b) {
  auto occurs = [](const Word& pat, const Word& w) {
    if (pat.size() > w.size()) return false;
    for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != pat.size()) continue;
      Word sub;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (mask >> i & 1u) sub.push_back(w[i]);
      if (normalize(sub) == pat) return true;
    }
    return false;
  };
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k <= best) continue;
    Word sub;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mask >> i & 1u) sub.push_back(a[i]);
    if (occurs(normalize(sub), b)) best = k;
  }
  return best;
}

// Unit-cost insert/delete distance between ordered forests, straight
// recursion on the rightmost tree with memoization.
class ForestDistance {
 public:
  std::size_t operator()(const std::string& f, const std::string& g) {
    if (f.empty()) return g.size() / 2;
    if (g.empty()) return f.size() / 2;
    const auto key = f + "|" + g;
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto [f_rest, f_kids] = split_last(f);
    const auto [g_rest, g_kids] = split_last(g);
    auto best = (*this)(f_rest + f_kids, g) + 1;
    best = std::min(best, (*this)(f, g_rest + g_kids) + 1);
    best = std::min(best, (*this)(f_rest, g_rest) + (*this)(f_kids, g_kids));
    memo_[key] = best;
    return best;
  }

 private:
  // f = rest (kids)
  static std::pair<std::string, std::string> split_last(const std::string& f) {
    int depth = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
      depth += f[i] == ')' ? 1 : -1;
      if (depth == 0) return {f.substr(0, i), f.substr(i + 1, f.size() - i - 2)};
    }
    return {"", ""};
  }
  std::map<std::string, std::size_t> memo_;
};

// Random tree as a parenthesis word: each new edge hangs on a random vertex
// of the current rightmost path.
inline std::string random_tree(std::size_t n, std::mt19937& rng) {
  std::string out;
  std::size_t depth = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto up = std::uniform_int_distribution<std::size_t>(0, depth)(rng);
    out.append(up, ')');
    depth -= up;
    out.push_back('(');
    ++depth;
  }
  out.append(depth, ')');
  return out;
}

// Subtrees (downward-closed runs of siblings), by brute force over edge subsets: nonempty,
// closed under descendants, and the topmost edges are consecutive siblings.
inline std::size_t subtree_count(const treeperm::OrderedTree& t) {
  const std::size_t n = t.edge_count();
  std::size_t count = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    auto in = [&](std::size_t e) { return (mask >> (e - 1)) & 1u; };
    bool closed = true;
    std::vector<std::size_t> tops;
    for (std::size_t e = 1; e <= n && closed; ++e) {
      if (!in(e)) continue;
      for (const auto c : t.children(e)) closed = closed && in(c);
      if (t.parent(e) == 0 || !in(t.parent(e))) tops.push_back(e);
    }
    if (!closed) continue;
    const auto p = t.parent(tops.front());
    bool run = true;
    for (const auto e : tops) run = run && t.parent(e) == p;
    if (!run) continue;
    const auto& kids = t.children(p);
    const auto first = std::find(kids.begin(), kids.end(), tops.front());
    run = static_cast<std::size_t>(kids.end() - first) >= tops.size() &&
          std::equal(tops.begin(), tops.end(), first);
    count += run;
  }
  return count;
}

}  // namespace oracle
