#include "treeperm/factors.hpp"

#include <algorithm>

#include "treeperm/codec.hpp"
#include "treeperm/error.hpp"

namespace treeperm {

void check_span(const Permutation& p, FactorSpan s) {
  if (s.start < 1 || s.start > s.end || s.end > p.size()) {
    throw Error(ErrorKind::OutOfRange, "span " + std::to_string(s.start) + ":" +
                                           std::to_string(s.end) + " outside 1.." +
                                           std::to_string(p.size()));
  }
}

Word factor_word(const Permutation& p, FactorSpan s) {
  check_span(p, s);
  const auto& w = p.word();
  return Word(w.begin() + static_cast<std::ptrdiff_t>(s.start - 1),
              w.begin() + static_cast<std::ptrdiff_t>(s.end));
}

bool is_compact(const Permutation& p, FactorSpan s) {
  const auto f = factor_word(p, s);
  const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
  return static_cast<std::size_t>(*hi - *lo) + 1 == f.size();
}

bool is_complete(const Permutation& p, FactorSpan s) {
  if (!is_compact(p, s)) return false;
  const auto& w = p.word();
  const auto f = factor_word(p, s);
  const int top = *std::max_element(f.begin(), f.end());
  int lo = *std::min_element(f.begin(), f.end());
  for (std::size_t q = s.end; q < w.size(); ++q) {
    // Once a larger value joins, fg can no longer keep f's maximum.
    if (w[q] > top) return true;
    lo = std::min(lo, w[q]);
    const auto len = q + 1 - (s.start - 1);
    if (static_cast<std::size_t>(top - lo) + 1 == len) return false;
  }
  return true;
}

namespace {

// For each start, walk the ends keeping min and max. A compact [s, e] is
// complete iff the next compact [s, e'] (if any) has a larger maximum: the
// maximum never decreases as e grows.
template <typename Emit>
void scan_factors(const Permutation& p, Emit&& emit) {
  const auto& w = p.word();
  const auto n = w.size();
  for (std::size_t s = 0; s < n; ++s) {
    int lo = w[s];
    int hi = w[s];
    std::optional<std::pair<std::size_t, int>> pending;  // (end, max)
    for (std::size_t e = s; e < n; ++e) {
      lo = std::min(lo, w[e]);
      hi = std::max(hi, w[e]);
      if (static_cast<std::size_t>(hi - lo) != e - s) continue;
      if (pending) emit(FactorSpan{s + 1, pending->first + 1}, pending->second < hi);
      pending = std::make_pair(e, hi);
    }
    if (pending) emit(FactorSpan{s + 1, pending->first + 1}, true);
  }
}

}  // namespace

std::vector<FactorSpan> compact_factors(const Permutation& p) {
  std::vector<FactorSpan> out;
  scan_factors(p, [&](FactorSpan s, bool) { out.push_back(s); });
  return out;
}

std::vector<FactorSpan> complete_factors(const Permutation& p) {
  if (!is_stack_sortable(p)) {
    throw Error(ErrorKind::NotStackSortable, "complete factors need a stack-sortable input");
  }
  std::vector<FactorSpan> out;
  scan_factors(p, [&](FactorSpan s, bool complete) {
    if (complete) out.push_back(s);
  });
  return out;
}

CompactClass classify_compact(const Permutation& p, FactorSpan s) {
  if (!is_compact(p, s)) {
    throw Error(ErrorKind::InvalidArgument, "span " + std::to_string(s.start) + ":" +
                                                std::to_string(s.end) + " is not compact");
  }
  const auto t = decode(p);
  // Edge k of the tree is vertex k, and a run of sibling subtrees occupies
  // consecutive preorder positions.
  const auto& siblings = t.children(t.parent(s.start));
  const auto first = std::find(siblings.begin(), siblings.end(), s.start);
  for (auto it = first; it != siblings.end(); ++it) {
    if (t.subtree_last(*it) == s.end) return CompactClass{CompactKind::Subtree, {}};
  }
  CompactClass out{CompactKind::InternalPath, {s.start}};
  for (std::size_t v = s.start; v < s.end && t.children(v).size() == 1 && t.children(v)[0] == v + 1;
       ++v) {
    out.path.push_back(v + 1);
  }
  if (t.is_leaf(out.path.back())) {
    throw Error(ErrorKind::Internal, "compact factor ends at a leaf but is not a subtree");
  }
  return out;
}

}  // namespace treeperm
