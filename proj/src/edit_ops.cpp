#include "treeperm/edit_ops.hpp"

#include <algorithm>
#include <set>

#include "treeperm/error.hpp"

namespace treeperm {

EditOp EditOp::insert(InsertKind kind, FactorSpan span) {
  switch (kind) {
    case InsertKind::Inner:
      return {OpKind::InsertInner, 0, span};
    case InsertKind::Left:
      return {OpKind::InsertLeft, 0, span};
    case InsertKind::Right:
      return {OpKind::InsertRight, 0, span};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown insertion kind");
}

std::string describe(const EditOp& op) {
  const auto span = std::to_string(op.span.start) + ":" + std::to_string(op.span.end);
  switch (op.kind) {
    case OpKind::DeleteAt:
      return "delete " + std::to_string(op.pos);
    case OpKind::InsertInner:
      return "insert inner " + span;
    case OpKind::InsertLeft:
      return "insert left " + span;
    case OpKind::InsertRight:
      return "insert right " + span;
    case OpKind::InsertEmpty:
      return "insert empty";
  }
  return "?";
}

Word shift_bar(std::span<const int> w, int a) {
  Word out(w.begin(), w.end());
  for (auto& v : out) {
    if (v >= a) ++v;
  }
  return out;
}

Permutation delete_at(const Permutation& p, std::size_t pos) {
  const int removed = p.at(pos);
  Word out;
  out.reserve(p.size() - 1);
  for (std::size_t q = 1; q <= p.size(); ++q) {
    if (q == pos) continue;
    const int v = p.at(q);
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(out));
}

Permutation insert_at(const Permutation& p, InsertKind kind, FactorSpan f) {
  if (!is_complete(p, f)) {
    throw Error(ErrorKind::NotComplete, "span " + std::to_string(f.start) + ":" +
                                            std::to_string(f.end) + " is not a complete factor");
  }
  const auto& w = p.word();
  const std::span<const int> all(w);
  const auto u = all.subspan(0, f.start - 1);
  const auto fac = all.subspan(f.start - 1, f.length());
  const auto v = all.subspan(f.end);
  const int a = kind == InsertKind::Left ? *std::min_element(fac.begin(), fac.end())
                                         : *std::max_element(fac.begin(), fac.end()) + 1;
  Word out = shift_bar(u, a);
  out.reserve(w.size() + 1);
  const Word shifted_f = kind == InsertKind::Left ? shift_bar(fac, a) : Word(fac.begin(), fac.end());
  if (kind != InsertKind::Right) out.push_back(a);
  out.insert(out.end(), shifted_f.begin(), shifted_f.end());
  if (kind == InsertKind::Right) out.push_back(a);
  const Word tail = shift_bar(v, a);
  out.insert(out.end(), tail.begin(), tail.end());
  return Permutation(std::move(out));
}

Permutation insert_inner(const Permutation& p, FactorSpan f) {
  return insert_at(p, InsertKind::Inner, f);
}
Permutation insert_right(const Permutation& p, FactorSpan f) {
  return insert_at(p, InsertKind::Right, f);
}
Permutation insert_left(const Permutation& p, FactorSpan f) {
  return insert_at(p, InsertKind::Left, f);
}

Permutation insert_empty() { return Permutation{1}; }

Permutation apply(const Permutation& p, const EditOp& op) {
  switch (op.kind) {
    case OpKind::DeleteAt:
      return delete_at(p, op.pos);
    case OpKind::InsertInner:
      return insert_inner(p, op.span);
    case OpKind::InsertLeft:
      return insert_left(p, op.span);
    case OpKind::InsertRight:
      return insert_right(p, op.span);
    case OpKind::InsertEmpty:
      if (!p.empty()) {
        throw Error(ErrorKind::InvalidArgument, "insert-empty applies only to ()");
      }
      return insert_empty();
  }
  throw Error(ErrorKind::InvalidArgument, "unknown edit operation");
}

namespace {

std::set<Permutation> deletion_results(const Permutation& p) {
  std::set<Permutation> out;
  for (std::size_t pos = 1; pos <= p.size(); ++pos) out.insert(delete_at(p, pos));
  return out;
}

std::set<Permutation> insertion_results(const Permutation& p) {
  std::set<Permutation> out;
  if (p.empty()) {
    out.insert(insert_empty());
    return out;
  }
  for (const auto f : complete_factors(p)) {
    for (const auto kind : {InsertKind::Inner, InsertKind::Left, InsertKind::Right}) {
      out.insert(insert_at(p, kind, f));
    }
  }
  return out;
}

}  // namespace

std::vector<Permutation> neighbors(const Permutation& p) {
  auto all = deletion_results(p);
  all.merge(insertion_results(p));
  return {all.begin(), all.end()};
}

NeighborCounts count_neighbors(const Permutation& p) {
  return {deletion_results(p).size(), insertion_results(p).size()};
}

}  // namespace treeperm
