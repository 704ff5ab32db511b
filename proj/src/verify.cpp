#include "treeperm/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "treeperm/codec.hpp"
#include "treeperm/distance.hpp"
#include "treeperm/edit_ops.hpp"
#include "treeperm/enumeration.hpp"
#include "treeperm/error.hpp"
#include "treeperm/factors.hpp"

namespace treeperm {

namespace {

// A check returns an empty string on success, otherwise the first failure.
using CheckFn = std::function<std::string(std::size_t)>;

struct Check {
  const char* suite;
  const char* name;
  CheckFn run;
};

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool has_231_naive(const Permutation& p) {
  const auto& w = p.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      for (std::size_t k = j + 1; k < w.size(); ++k) {
        if (w[k] < w[i] && w[i] < w[j]) return true;
      }
    }
  }
  return false;
}

std::vector<Permutation> sortable_of_size(std::size_t n) {
  std::vector<Permutation> out;
  for_each_tree(n, [&](const OrderedTree& t) { out.push_back(encode(t)); });
  return out;
}

std::string fail(const std::string& what, const Permutation& p) {
  return what + " for " + (p.empty() ? std::string("()") : to_string(p));
}

// The tree-level meaning of the three insertions at complete factor f.
OrderedTree tree_insert(const OrderedTree& t, FactorSpan f, InsertKind kind) {
  std::vector<std::vector<std::size_t>> kids(t.vertex_count() + 1);
  for (std::size_t v = 0; v < t.vertex_count(); ++v) kids[v] = t.children(v);
  const std::size_t fresh = t.vertex_count();
  auto& run = kids[t.parent(f.start)];
  const auto a = static_cast<std::size_t>(std::find(run.begin(), run.end(), f.start) - run.begin());
  std::size_t b = a;
  while (t.subtree_last(run[b]) != f.end) ++b;
  switch (kind) {
    case InsertKind::Inner:
      kids[fresh].assign(run.begin() + a, run.begin() + b + 1);
      run.erase(run.begin() + a, run.begin() + b + 1);
      run.insert(run.begin() + a, fresh);
      break;
    case InsertKind::Left:
      run.insert(run.begin() + a, fresh);
      break;
    case InsertKind::Right:
      run.insert(run.begin() + b + 1, fresh);
      break;
  }
  return OrderedTree::from_children(kids);
}

std::size_t inserted_position(FactorSpan f, InsertKind kind) {
  return kind == InsertKind::Right ? f.end + 1 : f.start;
}

constexpr InsertKind kKinds[] = {InsertKind::Inner, InsertKind::Left, InsertKind::Right};

std::vector<Check> checks() {
  return {
      {"perm", "stack_sortable_matches_naive_scan",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 9); ++n) {
           for (const auto& p : all_permutations(n)) {
             if (is_stack_sortable(p) == has_231_naive(p)) return fail("mismatch", p);
             if (find_231(p).has_value() != has_231_naive(p)) return fail("bad witness", p);
           }
         }
         return {};
       }},
      {"perm", "normalize_idempotent",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 7); ++n) {
           for (const auto& p : all_permutations(n)) {
             if (normalize(p.values()) != p) return fail("normalize changed", p);
             if (lis_length(p) > n || lds_length(p) > n) return fail("lis/lds above n", p);
           }
         }
         return {};
       }},
      {"perm", "lis_is_leaves_lds_is_height",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 8); ++n) {
           for (const auto& p : sortable_of_size(n)) {
             const auto t = decode(p);
             if (lis_length(p) != leaf_count(t)) return fail("lis != leaves", p);
             if (lds_length(p) != height(t)) return fail("lds != height", p);
           }
         }
         return {};
       }},
      {"perm", "common_pattern_occurs_in_both",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 4); ++n) {
           const auto ps = sortable_of_size(n);
           for (const auto& a : ps) {
             for (const auto& b : ps) {
               const auto u = largest_common_pattern_bruteforce(a, b);
               if (!pattern_occurs(u, a) || !pattern_occurs(u, b)) return fail("missing", a);
             }
           }
         }
         return {};
       }},
      {"tree", "parse_serialize_round_trip",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 10); ++n) {
           std::string bad;
           for_each_tree(n, [&](const OrderedTree& t) {
             if (bad.empty() && parse_tree(serialize_tree(t)) != t) bad = serialize_tree(t);
             if (bad.empty() && n > 0 && leaf_count(t) < 1) bad = serialize_tree(t);
           });
           if (!bad.empty()) return "round trip failed for " + bad;
         }
         return {};
       }},
      {"tree", "subtrees_match_complete_factor_count",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 8); ++n) {
           for (const auto& p : sortable_of_size(n)) {
             if (enumerate_subtrees(decode(p)).size() != complete_factors(p).size()) {
               return fail("count mismatch", p);
             }
           }
         }
         return {};
       }},
      {"codec", "decode_encode_round_trip",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 10); ++n) {
           std::string bad;
           for_each_tree(n, [&](const OrderedTree& t) {
             const auto p = encode(t);
             if (bad.empty() && (!is_stack_sortable(p) || decode(p) != t)) bad = serialize_tree(t);
           });
           if (!bad.empty()) return "round trip failed for " + bad;
         }
         return {};
       }},
      {"codec", "encode_decode_round_trip",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 8); ++n) {
           std::size_t sortable = 0;
           for (const auto& p : all_permutations(n)) {
             if (has_231_naive(p)) continue;
             ++sortable;
             if (encode(decode(p)) != p) return fail("round trip failed", p);
           }
           if (BigInt(sortable) != catalan(n)) return "sortable count is not Catalan";
         }
         return {};
       }},
      {"factors", "complete_implies_compact",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 9); ++n) {
           for (const auto& p : sortable_of_size(n)) {
             for (std::size_t s = 1; s <= n; ++s) {
               for (std::size_t e = s; e <= n; ++e) {
                 if (is_complete(p, {s, e}) && !is_compact(p, {s, e})) return fail("broken", p);
               }
             }
             const auto c = complete_factors(p);
             const auto all = compact_factors(p);
             for (const auto& f : c) {
               if (!std::binary_search(all.begin(), all.end(), f)) return fail("not compact", p);
               if (!is_stack_sortable(normalize(factor_word(p, f)))) {
                 return fail("factor not sortable", p);
               }
             }
           }
         }
         return {};
       }},
      {"factors", "complete_factors_are_subtrees",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 8); ++n) {
           for (const auto& p : sortable_of_size(n)) {
             std::vector<EdgeSet> from_factors;
             for (const auto& f : complete_factors(p)) {
               EdgeSet edges(f.length());
               std::iota(edges.begin(), edges.end(), f.start);
               from_factors.push_back(std::move(edges));
             }
             if (from_factors != enumerate_subtrees(decode(p))) return fail("mismatch", p);
           }
         }
         return {};
       }},
      {"factors", "children_from_shortest_complete_factor",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 8); ++n) {
           for (const auto& p : sortable_of_size(n)) {
             const auto t = decode(p);
             const auto fs = complete_factors(p);
             for (std::size_t k = 1; k <= n; ++k) {
               const auto f = *std::find_if(fs.begin(), fs.end(),
                                            [&](const FactorSpan& s) { return s.start == k; });
               std::vector<std::size_t> kids;
               int best = 0;
               for (std::size_t q = k + 1; q <= f.end; ++q) {
                 if (p.at(q) < p.at(k) && p.at(q) > best) kids.push_back(q);
                 best = std::max(best, p.at(q));
               }
               if (kids != t.children(k)) return fail("children differ", p);
             }
           }
         }
         return {};
       }},
      {"factors", "compact_classification",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 8); ++n) {
           for (const auto& p : sortable_of_size(n)) {
             for (const auto& f : compact_factors(p)) {
               const auto cls = classify_compact(p, f);
               if ((cls.kind == CompactKind::Subtree) != is_complete(p, f)) {
                 return fail("subtree class disagrees with completeness", p);
               }
             }
           }
         }
         return {};
       }},
      {"edit_ops", "closure_and_inverse",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 7); ++n) {
           for (const auto& p : sortable_of_size(n)) {
             for (std::size_t k = 1; k <= n; ++k) {
               const auto q = delete_at(p, k);
               if (!is_stack_sortable(q)) return fail("deletion left the class", p);
               const auto back = q.empty() ? std::vector<Permutation>{insert_empty()} : neighbors(q);
               if (std::find(back.begin(), back.end(), p) == back.end()) {
                 return fail("deletion has no inverse insertion", p);
               }
             }
             if (n == 0) continue;
             for (const auto& f : complete_factors(p)) {
               for (const auto kind : kKinds) {
                 const auto q = insert_at(p, kind, f);
                 if (!is_stack_sortable(q)) return fail("insertion left the class", p);
                 if (delete_at(q, inserted_position(f, kind)) != p) {
                   return fail("insertion not undone by deletion", p);
                 }
               }
             }
           }
         }
         return {};
       }},
      {"edit_ops", "insertions_match_tree_edits",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 7); ++n) {
           for (const auto& p : sortable_of_size(n)) {
             const auto t = decode(p);
             for (const auto& f : complete_factors(p)) {
               for (const auto kind : kKinds) {
                 if (decode(insert_at(p, kind, f)) != tree_insert(t, f, kind)) {
                   return fail("tree edit differs", p);
                 }
               }
             }
           }
         }
         return {};
       }},
      {"edit_ops", "neighborhood_bounds",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 8); ++n) {
           for (const auto& p : sortable_of_size(n)) {
             const auto c = count_neighbors(p);
             if (c.deletions > n || c.insertions > 3 * (n + 1) * (n + 1) * (n + 1)) {
               return fail("bound exceeded", p);
             }
           }
         }
         return {};
       }},
      {"distance", "metric_axioms",
       [](std::size_t max_n) -> std::string {
         std::vector<Permutation> ps;
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 4); ++n) {
           const auto more = sortable_of_size(n);
           ps.insert(ps.end(), more.begin(), more.end());
         }
         std::map<std::pair<std::size_t, std::size_t>, std::size_t> d;
         for (std::size_t i = 0; i < ps.size(); ++i) {
           for (std::size_t j = 0; j < ps.size(); ++j) {
             d[{i, j}] = perm_distance(ps[i], ps[j]).distance;
           }
         }
         for (std::size_t i = 0; i < ps.size(); ++i) {
           for (std::size_t j = 0; j < ps.size(); ++j) {
             if (d[{i, j}] != d[{j, i}]) return fail("asymmetric", ps[i]);
             if ((d[{i, j}] == 0) != (i == j)) return fail("identity of indiscernibles", ps[i]);
             if (d[{i, j}] % 2 != (ps[i].size() + ps[j].size()) % 2) return fail("parity", ps[i]);
             for (std::size_t k = 0; k < ps.size(); ++k) {
               if (d[{i, k}] > d[{i, j}] + d[{j, k}]) return fail("triangle", ps[i]);
             }
           }
         }
         // Random triples at larger sizes.
         std::mt19937 rng(12345);
         const auto top = std::min<std::size_t>(max_n, 7);
         std::vector<Permutation> big;
         for (std::size_t n = 0; n <= top; ++n) {
           const auto more = sortable_of_size(n);
           big.insert(big.end(), more.begin(), more.end());
         }
         std::uniform_int_distribution<std::size_t> pick(0, big.size() - 1);
         for (int trial = 0; trial < 300; ++trial) {
           const auto& a = big[pick(rng)];
           const auto& b = big[pick(rng)];
           const auto& c = big[pick(rng)];
           if (perm_distance(a, c).distance >
               perm_distance(a, b).distance + perm_distance(b, c).distance) {
             return fail("triangle", a);
           }
         }
         return {};
       }},
      {"distance", "dp_bfs_pattern_agree",
       [](std::size_t max_n) -> std::string {
         std::vector<Permutation> ps;
         for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 5); ++n) {
           const auto more = sortable_of_size(n);
           ps.insert(ps.end(), more.begin(), more.end());
         }
         for (const auto& a : ps) {
           for (const auto& b : ps) {
             const auto dp = perm_distance(a, b);
             const auto bfs = bfs_oracle_distance(a, b, a.size() + b.size());
             const auto u = largest_common_pattern_bruteforce(a, b);
             if (!bfs || *bfs != dp.distance) return fail("bfs disagrees", a);
             if (a.size() + b.size() - 2 * u.size() != dp.distance) return fail("formula", a);
             if (dp.common.size() != u.size()) return fail("common size", a);
             if (!is_stack_sortable(dp.common) || !pattern_occurs(dp.common, a) ||
                 !pattern_occurs(dp.common, b)) {
               return fail("common pattern invalid", a);
             }
           }
         }
         return {};
       }},
      {"enumeration", "catalan_and_narayana_counts",
       [](std::size_t max_n) -> std::string {
         for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 10); ++n) {
           std::map<std::size_t, BigInt> by_leaves;
           std::size_t total = 0;
           for_each_tree(n, [&](const OrderedTree& t) {
             ++total;
             by_leaves[leaf_count(t)] += 1;
           });
           if (BigInt(total) != catalan(n)) return "catalan mismatch at n=" + std::to_string(n);
           for (std::size_t k = 1; k <= n; ++k) {
             if (by_leaves[k] != narayana(n, k) || narayana(n, k) != narayana(n, n + 1 - k)) {
               return "narayana mismatch at n=" + std::to_string(n);
             }
           }
         }
         return {};
       }},
      {"enumeration", "series_I_closed_form",
       [](std::size_t) -> std::string {
         // series_I verifies itself against the closed form.
         const auto table = series_I(30);
         if (table.at({2, 1}) != 1 || table.at({2, 2}) != 1) return "[t^2] is not p + p^2";
         return {};
       }},
      {"enumeration", "series_S1_matches_enumeration",
       [](std::size_t max_n) -> std::string {
         const auto top = std::min<std::size_t>(max_n, 10);
         const auto s1 = series_S1(top);
         for (std::size_t n = 0; n <= top; ++n) {
           std::map<std::size_t, BigInt> hist;
           for_each_tree(n, [&](const OrderedTree& t) { hist[2 * (n - lis_length(encode(t)))] += 1; });
           for (std::size_t d = 0; d <= 2 * n; ++d) {
             if (s1.at({n, d}) != hist[d]) return "S1 mismatch at n=" + std::to_string(n);
           }
           if (n >= 1 && avg_distance_to_id(n) != Rational(n - 1)) {
             return "mean distance to Id is not n-1 at n=" + std::to_string(n);
           }
         }
         return {};
       }},
      {"enumeration", "heights_two_routes",
       [](std::size_t max_n) -> std::string {
         if (!(heights_via_recurrence(30) == heights_via_continued_fraction(30))) {
           return "height tables differ";
         }
         const auto top = std::min<std::size_t>(max_n, 10);
         const auto d = table_D(top);
         for (std::size_t n = 1; n <= top; ++n) {
           std::map<std::pair<std::size_t, std::size_t>, BigInt> hist;
           for_each_tree(n, [&](const OrderedTree& t) {
             std::size_t deepest = 0;
             for (std::size_t v = 1; v < t.vertex_count(); ++v) deepest += t.depth(v) == height(t);
             hist[{height(t), deepest}] += 1;
           });
           for (std::size_t j = 1; j <= n; ++j) {
             for (std::size_t k = 1; k <= n; ++k) {
               if (d.at({n, j, k}) != hist[{j, k}]) return "D mismatch at n=" + std::to_string(n);
             }
           }
         }
         return {};
       }},
      {"enumeration", "series_S2_matches_enumeration",
       [](std::size_t max_n) -> std::string {
         const auto top = std::min<std::size_t>(max_n, 10);
         const auto s2 = series_S2(std::max<std::size_t>(top, 4));
         if (s2.at({4, 4}) != 7 || s2.at({4, 2}) != 5 || s2.at({4, 6}) != 1 || s2.at({4, 0}) != 1) {
           return "x^4 row differs from the printed polynomial";
         }
         for (std::size_t n = 1; n <= top; ++n) {
           std::map<std::size_t, BigInt> hist;
           for_each_tree(n, [&](const OrderedTree& t) { hist[2 * (n - height(t))] += 1; });
           for (std::size_t d = 0; d <= 2 * n; ++d) {
             if (s2.at({n, d}) != hist[d]) return "S2 mismatch at n=" + std::to_string(n);
           }
         }
         return {};
       }},
      {"enumeration", "coefficients_nonnegative",
       [](std::size_t) -> std::string {
         for (const auto& table : {series_I(30), series_S1(30), series_S2(30), table_D(30),
                                   heights_via_continued_fraction(30)}) {
           for (const auto& [exps, c] : table.terms()) {
             if (c < 0) return "negative coefficient in " + table.name();
           }
         }
         for (const auto& [exps, c] : series_S1(30).terms()) {
           if (exps[1] % 2 != 0) return "odd power of q in S1";
         }
         return {};
       }},
  };
}

}  // namespace

std::vector<std::string> verify_suites() {
  return {"perm", "tree", "codec", "factors", "edit_ops", "distance", "enumeration"};
}

std::vector<CheckResult> run_verify(std::string_view suite, std::size_t max_n,
                                    const std::function<void(const CheckResult&)>& report) {
  const auto names = verify_suites();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  }
  std::vector<CheckResult> out;
  for (const auto& check : checks()) {
    if (suite != "all" && suite != check.suite) continue;
    CheckResult r{check.suite, check.name, false, {}};
    try {
      r.detail = check.run(max_n);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace treeperm
