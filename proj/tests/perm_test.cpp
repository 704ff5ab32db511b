#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "treeperm/codec.hpp"
#include "treeperm/error.hpp"
#include "treeperm/perm.hpp"

using namespace treeperm;

namespace {

std::vector<Word> all_words(std::size_t n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_CASE("construction rejects non-permutations") {
  CHECK_NOTHROW(Permutation({2, 1, 3}));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
  CHECK_THROWS_AS(Permutation({1, 3}), Error);
  CHECK(Permutation().empty());
  CHECK(Permutation::identity(4) == Permutation{1, 2, 3, 4});
  CHECK(Permutation::decreasing(3) == Permutation{3, 2, 1});
}

TEST_CASE("positions are 1-based") {
  const Permutation p{3, 1, 2};
  CHECK(p.at(1) == 3);
  CHECK(p.at(3) == 2);
  CHECK_THROWS_AS(p.at(0), Error);
  CHECK_THROWS_AS(p.at(4), Error);
  CHECK(p.position_of(1) == 2);
  CHECK(p.position_of(9) == 0);
}

TEST_CASE("stack-sortable iff no 231, all permutations up to 7") {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::size_t sortable = 0;
    for (const auto& w : all_words(n)) {
      const Permutation p(w);
      const bool expected = !oracle::has_231(w);
      REQUIRE(is_stack_sortable(p) == expected);
      const auto t = find_231(p);
      REQUIRE(t.has_value() == !expected);
      if (t) {
        const auto [i, j, k] = *t;
        REQUIRE(i < j);
        REQUIRE(j < k);
        REQUIRE(p.at(k) < p.at(i));
        REQUIRE(p.at(i) < p.at(j));
      }
      sortable += expected;
    }
    // Catalan numbers
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    CHECK(sortable == catalan[n]);
  }
}

TEST_CASE("normalize") {
  CHECK(normalize(std::vector<int>{5, 2, 9}) == Permutation{2, 1, 3});
  CHECK(normalize(std::vector<int>{}) == Permutation{});
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    Word w(8);
    for (auto& x : w) x = static_cast<int>(rng() % 1000);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    std::shuffle(w.begin(), w.end(), rng);
    const auto p = normalize(w);
    REQUIRE(p.word() == oracle::normalize(w));
    REQUIRE(normalize(p.values()) == p);
  }
}

TEST_CASE("lis and lds against subsequence search") {
  for (const auto& w : all_words(7)) {
    const Permutation p(w);
    REQUIRE(lis_length(p) == oracle::longest_monotone(w, true));
    REQUIRE(lds_length(p) == oracle::longest_monotone(w, false));
  }
  CHECK(lis_length(Permutation{}) == 0);
}

TEST_CASE("lis counts leaves and lds counts height") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& word : oracle::dyck_words(n)) {
      const Permutation p(oracle::encode(word));
      REQUIRE(lis_length(p) == oracle::leaves(word));
      REQUIRE(lds_length(p) == oracle::height(word));
    }
  }
}

TEST_CASE("pattern search") {
  CHECK(pattern_occurs(Permutation{1, 2}, Permutation{2, 1, 3}));
  CHECK_FALSE(pattern_occurs(Permutation{2, 3, 1}, Permutation{1, 2, 3}));
  CHECK(pattern_occurs(Permutation{}, Permutation{1}));
  CHECK_THROWS_AS(pattern_occurs(Permutation{1}, Permutation::identity(21)), Error);

  // worked example: |u| = 6
  const auto u = largest_common_pattern_bruteforce(Permutation{3, 1, 2, 6, 4, 5, 8, 7},
                                                   Permutation{1, 5, 2, 4, 3, 7, 6});
  CHECK(u.size() == 6);
  CHECK(pattern_occurs(u, Permutation{3, 1, 2, 6, 4, 5, 8, 7}));
  CHECK(pattern_occurs(u, Permutation{1, 5, 2, 4, 3, 7, 6}));

  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    Word a(6);
    Word b(5);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const auto common = largest_common_pattern_bruteforce(Permutation(a), Permutation(b));
    REQUIRE(common.size() == oracle::common_pattern_length(a, b));
  }
}

TEST_CASE("text round trip") {
  CHECK(parse_permutation("1524376") == Permutation{1, 5, 2, 4, 3, 7, 6});
  CHECK(parse_permutation("3,1,2") == Permutation{3, 1, 2});
  CHECK(parse_permutation(" 3 1 2 ") == Permutation{3, 1, 2});
  CHECK(parse_permutation("") == Permutation{});
  CHECK(to_string(Permutation{1, 5, 2, 4, 3, 7, 6}) == "1524376");
  CHECK(to_string(Permutation::identity(11)) == "1,2,3,4,5,6,7,8,9,10,11");
  CHECK(parse_permutation(to_string(Permutation::identity(11))) == Permutation::identity(11));

  try {
    parse_permutation("1,x,2");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
  CHECK_THROWS_AS(parse_permutation("1,1"), Error);
  CHECK_THROWS_AS(parse_permutation("1,,2"), Error);
}
