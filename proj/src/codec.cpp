#include "treeperm/codec.hpp"

#include <tuple>

#include "treeperm/error.hpp"

namespace treeperm {

Permutation encode(const OrderedTree& t) {
  Word labels(t.edge_count());
  int next = 1;
  // Iterative postorder: (vertex, children already pushed).
  std::vector<std::pair<std::size_t, bool>> stack{{0, false}};
  while (!stack.empty()) {
    auto& [v, expanded] = stack.back();
    if (expanded) {
      if (v != 0) labels[v - 1] = next++;
      stack.pop_back();
      continue;
    }
    expanded = true;
    const std::size_t u = v;
    const auto& kids = t.children(u);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, false);
  }
  return Permutation(std::move(labels));
}

OrderedTree decode(const Permutation& p) {
  if (const auto bad = find_231(p)) {
    const auto [i, j, k] = *bad;
    throw Error(ErrorKind::NotStackSortable,
                "not stack-sortable: positions " + std::to_string(i) + "," + std::to_string(j) +
                    "," + std::to_string(k) + " (values " + std::to_string(p.at(i)) + "," +
                    std::to_string(p.at(j)) + "," + std::to_string(p.at(k)) +
                    ") form the pattern 231");
  }
  const auto& w = p.word();
  // Vertex 0 is the root; vertex q+1 is the lower end of the edge at
  // position q (0-based).
  std::vector<std::vector<std::size_t>> children(w.size() + 1);
  // Segment [lo, hi) whose tree hangs on `vertex`. Unrolling the I n J split
  // on I repeatedly shows the vertex's children are the segment's
  // left-to-right maxima, and each maximum's own subtree is the J that
  // follows it up to the next maximum.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> work{{0, w.size(), 0}};
  while (!work.empty()) {
    const auto [lo, hi, vertex] = work.back();
    work.pop_back();
    std::size_t record = lo;
    for (std::size_t q = lo; q <= hi; ++q) {
      if (q == hi || (q > record && w[q] > w[record])) {
        if (record < hi) {
          children[vertex].push_back(record + 1);
          work.emplace_back(record + 1, q, record + 1);
        }
        record = q;
      }
    }
  }
  return OrderedTree::from_children(children);
}

}  // namespace treeperm
