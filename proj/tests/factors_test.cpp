#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "treeperm/codec.hpp"
#include "treeperm/error.hpp"
#include "treeperm/factors.hpp"

using namespace treeperm;

namespace {

const Permutation kSigma{1, 5, 2, 4, 3, 7, 6};

bool compact_oracle(const Word& w, std::size_t s, std::size_t e) {
  const auto [lo, hi] = std::minmax_element(w.begin() + s - 1, w.begin() + e);
  return static_cast<std::size_t>(*hi - *lo) == e - s;
}

// No nonempty g right after f with fg compact and max(fg) = max(f).
bool complete_oracle(const Word& w, std::size_t s, std::size_t e) {
  if (!compact_oracle(w, s, e)) return false;
  const int top = *std::max_element(w.begin() + s - 1, w.begin() + e);
  for (std::size_t g_end = e + 1; g_end <= w.size(); ++g_end) {
    const int grown = *std::max_element(w.begin() + s - 1, w.begin() + g_end);
    if (compact_oracle(w, s, g_end) && grown == top) return false;
  }
  return true;
}

std::vector<std::string> words_of(const Permutation& p, const std::vector<FactorSpan>& spans) {
  std::vector<std::string> out;
  for (const auto s : spans) out.push_back(to_string(factor_word(p, s)));
  return out;
}

}  // namespace

TEST_CASE("complete factors of 1524376") {
  const auto spans = complete_factors(kSigma);
  CHECK(spans.size() == 11);
  const std::vector<std::string> expected{"1",  "15243", "1524376", "5243", "524376", "2",
                                          "243", "43",   "3",       "76",   "6"};
  auto got = words_of(kSigma, spans);
  auto want = expected;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(std::is_sorted(spans.begin(), spans.end()));
}

TEST_CASE("small recognition cases") {
  CHECK(is_compact(kSigma, {4, 5}));
  CHECK_FALSE(is_compact(kSigma, {2, 3}));
  CHECK(is_compact(kSigma, {2, 2}));
  CHECK(is_complete(kSigma, {2, 5}));
  CHECK_FALSE(is_complete(kSigma, {2, 2}));
  CHECK(is_complete(kSigma, {1, 7}));
  CHECK(complete_factors(Permutation{1}) == std::vector<FactorSpan>{{1, 1}});
  CHECK(complete_factors(Permutation{1, 2}) == std::vector<FactorSpan>{{1, 1}, {1, 2}, {2, 2}});
  CHECK_THROWS_AS(is_compact(kSigma, {3, 8}), Error);
  CHECK_THROWS_AS(is_compact(kSigma, {0, 1}), Error);
  CHECK_THROWS_AS(complete_factors(Permutation{2, 3, 1}), Error);
}

TEST_CASE("recognition matches the definitions on every sortable n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& word : oracle::dyck_words(n)) {
      const Permutation p(oracle::encode(word));
      std::vector<FactorSpan> compact;
      std::vector<FactorSpan> complete;
      for (std::size_t s = 1; s <= n; ++s) {
        for (std::size_t e = s; e <= n; ++e) {
          const bool c = compact_oracle(p.word(), s, e);
          const bool k = complete_oracle(p.word(), s, e);
          REQUIRE(is_compact(p, {s, e}) == c);
          REQUIRE(is_complete(p, {s, e}) == k);
          if (c) compact.push_back({s, e});
          if (k) complete.push_back({s, e});
        }
      }
      REQUIRE(compact_factors(p) == compact);
      REQUIRE(complete_factors(p) == complete);
    }
  }
}

TEST_CASE("complete factors are exactly the subtrees") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& word : oracle::dyck_words(n)) {
      const auto t = parse_tree(word);
      const auto p = encode(t);
      std::set<std::pair<std::size_t, std::size_t>> from_factors;
      for (const auto s : complete_factors(p)) {
        REQUIRE(is_stack_sortable(normalize(factor_word(p, s))));
        from_factors.emplace(s.start, s.end);
      }
      std::set<std::pair<std::size_t, std::size_t>> from_tree;
      for (const auto& edges : enumerate_subtrees(t)) {
        REQUIRE(edges.back() - edges.front() + 1 == edges.size());
        from_tree.emplace(edges.front(), edges.back());
      }
      REQUIRE(from_factors == from_tree);
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify_compact(kSigma, {4, 5}).kind == CompactKind::Subtree);
  const auto five = classify_compact(kSigma, {2, 2});
  CHECK(five.kind == CompactKind::InternalPath);
  CHECK(five.path == std::vector<std::size_t>{2});
  CHECK(classify_compact(kSigma, {1, 7}).kind == CompactKind::Subtree);
  CHECK_THROWS_AS(classify_compact(kSigma, {2, 3}), Error);

  // chain 54321: prefixes are paths, suffixes are subtrees
  const auto chain = Permutation::decreasing(5);
  const auto top = classify_compact(chain, {1, 3});
  CHECK(top.kind == CompactKind::InternalPath);
  CHECK(top.path == std::vector<std::size_t>{1, 2, 3});
  CHECK(classify_compact(chain, {3, 5}).kind == CompactKind::Subtree);

  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& word : oracle::dyck_words(n)) {
      const auto t = parse_tree(word);
      const auto p = encode(t);
      for (const auto s : compact_factors(p)) {
        const auto cls = classify_compact(p, s);
        REQUIRE((cls.kind == CompactKind::Subtree) == is_complete(p, s));
        if (cls.kind == CompactKind::InternalPath) {
          // a downward path of non-leaf edges, each the only child of the last
          REQUIRE(cls.path.front() == s.start);
          for (std::size_t i = 1; i < cls.path.size(); ++i) {
            REQUIRE(t.parent(cls.path[i]) == cls.path[i - 1]);
          }
          REQUIRE_FALSE(t.is_leaf(cls.path.back()));
        }
      }
    }
  }
}
