#include "treeperm/enumeration.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "treeperm/codec.hpp"
#include "treeperm/distance.hpp"
#include "treeperm/edit_ops.hpp"
#include "treeperm/error.hpp"

namespace treeperm {

namespace {

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorKind::SizeLimit,
                std::string(what) + " is limited to n <= " + std::to_string(cap));
  }
}

// Pascal's triangle rows 0..n.
std::vector<std::vector<BigInt>> pascal(std::size_t n) {
  std::vector<std::vector<BigInt>> rows(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    rows[r].assign(r + 1, BigInt(1));
    for (std::size_t k = 1; k < r; ++k) rows[r][k] = rows[r - 1][k - 1] + rows[r - 1][k];
  }
  return rows;
}

// Truncated power series in t whose coefficients are polynomials in p.
using RPoly = std::vector<Rational>;
using BiSeries = std::vector<RPoly>;

RPoly poly_mul(const RPoly& a, const RPoly& b, std::size_t max_deg) {
  if (a.empty() || b.empty()) return {};
  RPoly out(std::min(a.size() + b.size() - 1, max_deg + 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_add(RPoly& acc, const RPoly& x, const Rational& scale = 1) {
  if (acc.size() < x.size()) acc.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += scale * x[i];
}

BiSeries series_mul(const BiSeries& a, const BiSeries& b, std::size_t terms, std::size_t max_deg) {
  BiSeries out(terms);
  for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) {
      poly_add(out[i + j], poly_mul(a[i], b[j], max_deg));
    }
  }
  return out;
}

// Inverse of a series whose t^0 coefficient is the constant polynomial 1.
BiSeries series_inverse_unit(const BiSeries& s, std::size_t terms, std::size_t max_deg) {
  if (s.empty() || s[0].size() != 1 || s[0][0] != 1) {
    throw Error(ErrorKind::Internal, "series inverse needs constant term 1");
  }
  BiSeries inv(terms);
  inv[0] = RPoly{Rational(1)};
  for (std::size_t n = 1; n < terms; ++n) {
    RPoly acc;
    for (std::size_t i = 1; i <= n && i < s.size(); ++i) {
      poly_add(acc, poly_mul(s[i], inv[n - i], max_deg), Rational(-1));
    }
    inv[n] = std::move(acc);
  }
  return inv;
}

// Square root with constant term 1, by s <- (s + q / s) / 2 with the
// precision doubling each round.
BiSeries series_sqrt_newton(const BiSeries& q, std::size_t terms, std::size_t max_deg) {
  BiSeries s{RPoly{Rational(1)}};
  std::size_t precision = 1;
  while (precision < terms) {
    precision = std::min(2 * precision, terms);
    const auto inv = series_inverse_unit(s, precision, max_deg);
    auto next = series_mul(q, inv, precision, max_deg);
    s.resize(precision);
    for (std::size_t n = 0; n < precision; ++n) {
      poly_add(next[n], s[n]);
      for (auto& c : next[n]) c /= 2;
    }
    s = std::move(next);
  }
  return s;
}

BigInt exact_integer(const Rational& r) {
  if (denominator(r) != 1) {
    throw Error(ErrorKind::Internal, "closed-form coefficient is not an integer");
  }
  return numerator(r);
}

void generate_dyck(std::string& word, std::size_t open, std::size_t close, std::size_t n,
                   const std::function<void(const OrderedTree&)>& fn) {
  if (close == n) {
    fn(parse_tree(word));
    return;
  }
  if (open < n) {
    word.push_back('(');
    generate_dyck(word, open + 1, close, n, fn);
    word.pop_back();
  }
  if (close < open) {
    word.push_back(')');
    generate_dyck(word, open, close + 1, n, fn);
    word.pop_back();
  }
}

// One height layer of D: layer[i][k] for trees of exactly the current height
// with i edges and k leaves at maximal depth.
using Layer = std::vector<std::vector<BigInt>>;

// Walks the layers j = 1, 2, ... and hands each to `visit(j, layer)`.
template <typename Visit>
void walk_height_layers(std::size_t max_n, Visit&& visit) {
  const auto choose = pascal(max_n + 1);
  Layer layer(max_n + 1, std::vector<BigInt>(max_n + 1, BigInt(0)));
  for (std::size_t i = 1; i <= max_n; ++i) layer[i][i] = 1;
  for (std::size_t j = 1; j <= max_n; ++j) {
    visit(j, layer);
    if (j == max_n) break;
    Layer next(max_n + 1, std::vector<BigInt>(max_n + 1, BigInt(0)));
    // Add k >= 1 leaves below the l deepest leaves of a tree with i - k edges:
    // C(l + k - 1, k) ways.
    for (std::size_t i = j + 1; i <= max_n; ++i) {
      for (std::size_t k = 1; k + j <= i; ++k) {
        const auto base = i - k;
        BigInt sum = 0;
        for (std::size_t l = 1; l + j - 1 <= base; ++l) {
          const auto& prev = layer[base][l];
          if (prev != 0) sum += choose[l + k - 1][k] * prev;
        }
        next[i][k] = std::move(sum);
      }
    }
    layer = std::move(next);
  }
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt catalan(std::size_t n) { return binomial(2 * n, n) / (n + 1); }

BigInt narayana(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw Error(ErrorKind::OutOfRange, "narayana(" + std::to_string(n) + ", " +
                                           std::to_string(k) + ") needs 1 <= k <= n");
  }
  return binomial(n, k) * binomial(n, k - 1) / n;
}

void for_each_tree(std::size_t n, const std::function<void(const OrderedTree&)>& fn,
                   std::size_t cap) {
  require_cap(n, cap, "tree generation");
  std::string word;
  word.reserve(2 * n);
  generate_dyck(word, 0, 0, n, fn);
}

std::vector<OrderedTree> trees_of_size(std::size_t n, std::size_t cap) {
  std::vector<OrderedTree> out;
  for_each_tree(n, [&](const OrderedTree& t) { out.push_back(t); }, cap);
  return out;
}

SeriesTable series_I(std::size_t max_n) {
  require_cap(max_n, kSeriesCap, "series I");
  std::vector<std::vector<BigInt>> rows(max_n + 1, std::vector<BigInt>(max_n + 1, BigInt(0)));
  rows[0][0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    // p * I_{n-1}
    for (std::size_t k = 0; k + 1 <= max_n; ++k) rows[n][k + 1] += rows[n - 1][k];
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      const auto& a = rows[i];
      const auto& b = rows[n - 1 - i];
      for (std::size_t x = 0; x <= i; ++x) {
        if (a[x] == 0) continue;
        for (std::size_t y = 0; x + y <= max_n; ++y) {
          if (b[y] != 0) rows[n][x + y] += a[x] * b[y];
        }
      }
    }
  }
  SeriesTable table("I", {"t", "p"}, {max_n, max_n});
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t k = 0; k <= max_n; ++k) table.ref({n, k}) = rows[n][k];
  }
  if (!(table == closed_form_I(max_n))) {
    throw Error(ErrorKind::Internal, "series I recurrence disagrees with its closed form");
  }
  return table;
}

SeriesTable closed_form_I(std::size_t max_n) {
  require_cap(max_n, kSeriesCap, "closed form I");
  const std::size_t terms = max_n + 2;
  const std::size_t max_deg = max_n + 2;
  // (p-1)^2 t^2 - 2(p+1) t + 1
  BiSeries q(3);
  q[0] = RPoly{Rational(1)};
  q[1] = RPoly{Rational(-2), Rational(-2)};
  q[2] = RPoly{Rational(1), Rational(-2), Rational(1)};
  const auto root = series_sqrt_newton(q, terms, max_deg);

  SeriesTable table("I", {"t", "p"}, {max_n, max_n});
  for (std::size_t n = 0; n <= max_n; ++n) {
    // [t^n] I = [t^{n+1}] (1 + (1-p)t - root) / 2
    RPoly numer;
    poly_add(numer, root[n + 1], Rational(-1));
    if (n == 0) poly_add(numer, RPoly{Rational(1), Rational(-1)});
    for (std::size_t k = 0; k < numer.size(); ++k) {
      const auto c = exact_integer(numer[k] / 2);
      if (c == 0) continue;
      if (k > max_n) throw Error(ErrorKind::Internal, "closed form degree exceeds table");
      table.ref({n, k}) = c;
    }
  }
  return table;
}

SeriesTable series_S1(std::size_t max_n) {
  const auto i = series_I(max_n);
  SeriesTable table("S1", {"t", "q"}, {max_n, 2 * max_n});
  table.ref({0, 0}) = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) table.ref({n, 2 * (k - 1)}) = i.at({n, k});
  }
  return table;
}

SeriesTable table_D(std::size_t max_n) {
  require_cap(max_n, kSeriesCap, "table D");
  SeriesTable table("D", {"x", "y", "z"}, {max_n, max_n, max_n});
  walk_height_layers(max_n, [&](std::size_t j, const Layer& layer) {
    for (std::size_t i = 1; i <= max_n; ++i) {
      for (std::size_t k = 1; k <= max_n; ++k) {
        if (layer[i][k] != 0) table.ref({i, j, k}) = layer[i][k];
      }
    }
  });
  return table;
}

SeriesTable heights_via_recurrence(std::size_t max_n) {
  require_cap(max_n, kHeightCap, "height counts");
  SeriesTable table("H", {"x", "y"}, {max_n, max_n});
  table.ref({0, 0}) = 1;
  walk_height_layers(max_n, [&](std::size_t j, const Layer& layer) {
    for (std::size_t i = 1; i <= max_n; ++i) {
      BigInt sum = 0;
      for (const auto& c : layer[i]) sum += c;
      if (sum != 0) table.ref({i, j}) = sum;
    }
  });
  return table;
}

SeriesTable heights_via_continued_fraction(std::size_t max_n) {
  require_cap(max_n, kHeightCap, "height counts");
  SeriesTable table("H", {"x", "y"}, {max_n, max_n});
  std::vector<BigInt> previous(max_n + 1, BigInt(0));
  previous[0] = 1;  // F_0: the root alone
  table.ref({0, 0}) = 1;
  for (std::size_t h = 1; h <= max_n; ++h) {
    // F_h = 1 / (1 - x F_{h-1}); the inverse recurrence stays integral.
    std::vector<BigInt> current(max_n + 1, BigInt(0));
    current[0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
      BigInt acc = 0;
      for (std::size_t i = 1; i <= n; ++i) acc += previous[i - 1] * current[n - i];
      current[n] = std::move(acc);
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
      const BigInt exact = current[n] - previous[n];
      if (exact != 0) table.ref({n, h}) = exact;
    }
    previous = std::move(current);
  }
  return table;
}

SeriesTable series_S2(std::size_t max_n) {
  const auto d = table_D(max_n);
  SeriesTable table("S2", {"x", "y"}, {max_n, 2 * max_n});
  for (const auto& [e, c] : d.terms()) {
    const auto n = e[0];
    const auto h = e[1];
    table.ref({n, 2 * (n - h)}) += c;
  }
  return table;
}

SeriesTable narayana_table(std::size_t max_n) {
  require_cap(max_n, kSeriesCap, "narayana table");
  SeriesTable table("N", {"n", "k"}, {max_n, max_n});
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) table.ref({n, k}) = narayana(n, k);
  }
  return table;
}

Rational avg_distance_to_id(std::size_t n) {
  if (n <= kExhaustiveAverageLimit) {
    const auto star = star_tree(n);
    BigInt total = 0;
    for_each_tree(n, [&](const OrderedTree& t) { total += tree_distance(t, star); });
    return Rational(total, catalan(n));
  }
  const auto s1 = series_S1(n);
  BigInt total = 0;
  for (std::size_t d = 0; d <= 2 * n; ++d) total += s1.at({n, d}) * d;
  return Rational(total, catalan(n));
}

Rational avg_height(std::size_t n) {
  const auto heights = heights_via_recurrence(n);
  BigInt total = 0;
  for (std::size_t h = 0; h <= n; ++h) total += heights.at({n, h}) * h;
  return Rational(total, catalan(n));
}

Rational avg_distance_to_chain(std::size_t n) { return 2 * (Rational(n) - avg_height(n)); }

AsymptoticReport height_report(std::size_t n) {
  AsymptoticReport out;
  out.n = n;
  out.exact = static_cast<double>(avg_height(n));
  out.predicted = std::sqrt(std::numbers::pi * static_cast<double>(n)) - 0.5;
  out.relative_error = std::abs(out.exact - out.predicted) / out.predicted;
  return out;
}

std::vector<StatRecord> tree_statistics(std::size_t n) {
  const auto star = star_tree(n);
  const auto chain = chain_tree(n);
  std::vector<StatRecord> out;
  for_each_tree(n, [&](const OrderedTree& t) {
    const auto p = encode(t);
    out.push_back(StatRecord{n, leaf_count(t), height(t), lis_length(p), lds_length(p),
                             tree_distance(t, star), tree_distance(t, chain)});
  });
  return out;
}

NeighborhoodReport neighborhood_report(std::size_t n) {
  require_cap(n, kNeighborhoodCap, "neighborhood report");
  const auto trees = trees_of_size(n);
  NeighborhoodReport out;
  out.n = n;
  out.trees = trees.size();
  out.deletion_bound = n;
  out.insertion_bound = 3 * (n + 1) * (n + 1) * (n + 1);
  for (const auto& t : trees) {
    const auto counts = count_neighbors(encode(t));
    out.max_deletions = std::max(out.max_deletions, counts.deletions);
    out.max_insertions = std::max(out.max_insertions, counts.insertions);
  }
  out.bounds_hold =
      out.max_deletions <= out.deletion_bound && out.max_insertions <= out.insertion_bound;
  BigInt total = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) total += 2 * tree_distance(trees[i], trees[j]);
  }
  const BigInt pairs = BigInt(trees.size()) * trees.size();
  out.mean_pairwise_distance = Rational(total, pairs);
  out.n_over_ln_n = n > 1 ? static_cast<double>(n) / std::log(static_cast<double>(n)) : 0.0;
  return out;
}

}  // namespace treeperm
