#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treeperm {

// Sequence of distinct positive integers, not necessarily {1..n}.
using Word = std::vector<int>;

// One-line permutation of {1..n}; n == 0 is allowed. Positions in the public
// interface are 1-based.
class Permutation {
 public:
  Permutation() = default;
  // Throws Error(InvalidArgument) unless `word` is a permutation of {1..n}.
  explicit Permutation(Word word);
  Permutation(std::initializer_list<int> values) : Permutation(Word(values)) {}

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }

  // 1-based access.
  int at(std::size_t pos) const;
  // Position (1-based) of `value`, or 0 when absent.
  std::size_t position_of(int value) const noexcept;

  const Word& word() const noexcept { return word_; }
  std::span<const int> values() const noexcept { return word_; }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  Word word_;
};

// Positions (1-based) i < j < k with p[k] < p[i] < p[j].
using Triple = std::array<std::size_t, 3>;

// O(n) stack scan.
bool is_stack_sortable(const Permutation& p);

// A witness of the 231 pattern, if any.
std::optional<Triple> find_231(const Permutation& p);

// Order-preserving relabelling onto {1..|w|}.
Permutation normalize(std::span<const int> w);

std::size_t lis_length(const Permutation& p);
std::size_t lds_length(const Permutation& p);

// Exhaustive searches. Both throw Error(SizeLimit) past the guards below.
inline constexpr std::size_t kPatternSearchLimit = 20;
inline constexpr std::size_t kCommonPatternLimit = 12;

bool pattern_occurs(const Permutation& needle, const Permutation& haystack);

// A longest pattern common to `a` and `b`; the lexicographically least one
// among those of maximum length.
Permutation largest_common_pattern_bruteforce(const Permutation& a, const Permutation& b);

// Text form: comma and/or whitespace separated decimals ("1,5,2", "1 5 2"),
// or a bare digit string ("152") where every value is a single digit.
// The empty string is the empty permutation.
Permutation parse_permutation(std::string_view text);
Word parse_word(std::string_view text);

// Bare digits when every value is < 10, comma separated otherwise.
std::string to_string(const Permutation& p);
std::string to_string(std::span<const int> w);

}  // namespace treeperm
