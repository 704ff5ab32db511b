#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "treeperm/series.hpp"
#include "treeperm/tree.hpp"

namespace treeperm {

BigInt binomial(std::size_t n, std::size_t k);
BigInt catalan(std::size_t n);
// (1/n) C(n,k) C(n,k-1): trees with n edges and k leaves. Needs 1 <= k <= n.
BigInt narayana(std::size_t n, std::size_t k);

inline constexpr std::size_t kTreeGenerationCap = 12;
inline constexpr std::size_t kSeriesCap = 64;
// Height statistics are also needed well past the general series cap.
inline constexpr std::size_t kHeightCap = 256;
// Averages above this size come from the series instead of a sweep.
inline constexpr std::size_t kExhaustiveAverageLimit = 10;
inline constexpr std::size_t kNeighborhoodCap = 7;

// Visits the trees with n edges in lexicographic order of their parenthesis
// words ('(' before ')'). Throws Error(SizeLimit) above `cap`.
void for_each_tree(std::size_t n, const std::function<void(const OrderedTree&)>& fn,
                   std::size_t cap = kTreeGenerationCap);
std::vector<OrderedTree> trees_of_size(std::size_t n, std::size_t cap = kTreeGenerationCap);

// [t^n p^k] I: trees with n edges and longest increasing subsequence k, from
// the recurrence I_n = p I_{n-1} + sum_{i=0}^{n-2} I_i I_{n-1-i}. Verifies
// against closed_form_I before returning.
SeriesTable series_I(std::size_t max_n);

// The same table from the closed form
//   (1 + (1-p)t - sqrt((p-1)^2 t^2 - 2(p+1)t + 1)) / 2t,
// with the square root taken by Newton iteration over exact rationals.
SeriesTable closed_form_I(std::size_t max_n);

// [t^n q^d] S1: stack-sortable permutations of size n at distance d from the
// identity, S1 = 1 + (I(t, q^2) - 1) / q^2.
SeriesTable series_S1(std::size_t max_n);

// [x^i y^j z^k] D: trees with i >= 1 edges, height j and k leaves at depth j.
SeriesTable table_D(std::size_t max_n);

// [x^n y^h]: trees with n edges and height h, as the marginal of the D
// recurrence over k. Allows max_n up to kHeightCap.
SeriesTable heights_via_recurrence(std::size_t max_n);

// [x^n y^h] from F_h - F_{h-1}, where F_0 = 1 and F_h = 1 / (1 - x F_{h-1})
// counts trees of height at most h.
SeriesTable heights_via_continued_fraction(std::size_t max_n);

// [x^n y^d] S2: trees with n >= 1 edges at distance d = 2(n - height) from
// the chain, i.e. D(x y^2, 1/y^2, 1).
SeriesTable series_S2(std::size_t max_n);

// [n k] Narayana numbers for 1 <= k <= n <= max_n.
SeriesTable narayana_table(std::size_t max_n);

// Exact mean distance to 12...n over all trees with n edges.
Rational avg_distance_to_id(std::size_t n);
// Exact mean height and mean distance to n...21.
Rational avg_height(std::size_t n);
Rational avg_distance_to_chain(std::size_t n);

// Mean height set against sqrt(pi n) - 1/2.
struct AsymptoticReport {
  std::size_t n = 0;
  double exact = 0;
  double predicted = 0;
  double relative_error = 0;
};
AsymptoticReport height_report(std::size_t n);

struct StatRecord {
  std::size_t n = 0;
  std::size_t leaves = 0;
  std::size_t height = 0;
  std::size_t lis = 0;
  std::size_t lds = 0;
  std::size_t distance_to_star = 0;
  std::size_t distance_to_chain = 0;
};
std::vector<StatRecord> tree_statistics(std::size_t n);

struct NeighborhoodReport {
  std::size_t n = 0;
  std::size_t trees = 0;
  std::size_t max_deletions = 0;
  std::size_t max_insertions = 0;
  // Vertex count minus one, and three times the cube of the vertex count.
  std::size_t deletion_bound = 0;
  std::size_t insertion_bound = 0;
  bool bounds_hold = false;
  // Over all ordered pairs of trees, identical pairs included.
  Rational mean_pairwise_distance;
  double n_over_ln_n = 0;
};
// Needs n <= kNeighborhoodCap.
NeighborhoodReport neighborhood_report(std::size_t n);

}  // namespace treeperm
