#include "treeperm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "treeperm/error.hpp"

namespace treeperm {

Permutation::Permutation(Word word) : word_(std::move(word)) {
  const auto n = word_.size();
  std::vector<bool> seen(n + 1, false);
  for (const int v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw Error(ErrorKind::InvalidArgument,
                  "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw Error(ErrorKind::InvalidArgument, "value " + std::to_string(v) + " repeated");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::decreasing(std::size_t n) {
  Word w(n);
  std::iota(w.rbegin(), w.rend(), 1);
  return Permutation(std::move(w));
}

int Permutation::at(std::size_t pos) const {
  if (pos < 1 || pos > word_.size()) {
    throw Error(ErrorKind::OutOfRange, "position " + std::to_string(pos) + " outside 1.." +
                                           std::to_string(word_.size()));
  }
  return word_[pos - 1];
}

std::size_t Permutation::position_of(int value) const noexcept {
  const auto it = std::find(word_.begin(), word_.end(), value);
  return it == word_.end() ? 0 : static_cast<std::size_t>(it - word_.begin()) + 1;
}

bool is_stack_sortable(const Permutation& p) {
  std::vector<int> stack;
  stack.reserve(p.size());
  int next = 1;
  for (const int x : p.values()) {
    while (!stack.empty() && stack.back() < x) {
      if (stack.back() != next) return false;
      stack.pop_back();
      ++next;
    }
    stack.push_back(x);
  }
  // Remaining stack is decreasing from bottom to top, so it drains in order.
  while (!stack.empty()) {
    if (stack.back() != next) return false;
    stack.pop_back();
    ++next;
  }
  return true;
}

std::optional<Triple> find_231(const Permutation& p) {
  const auto& w = p.word();
  const auto n = w.size();
  // For each middle j, the best "2" is the largest earlier value below w[j].
  for (std::size_t j = 1; j < n; ++j) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < j; ++i) {
      if (w[i] < w[j] && (!best || w[i] > w[*best])) best = i;
    }
    if (!best) continue;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (w[k] < w[*best]) return Triple{*best + 1, j + 1, k + 1};
    }
  }
  return std::nullopt;
}

Permutation normalize(std::span<const int> w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

namespace {

template <typename Less>
std::size_t longest_monotone(std::span<const int> w, Less less) {
  std::vector<int> tails;
  for (const int x : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x, less);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return tails.size();
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when fn returns true.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Word pick(const Word& w, const std::vector<std::size_t>& idx) {
  Word out;
  out.reserve(idx.size());
  for (const auto i : idx) out.push_back(w[i]);
  return out;
}

std::set<Word> patterns_of_size(const Permutation& p, std::size_t k) {
  std::set<Word> out;
  for_each_subset(p.size(), k, [&](const std::vector<std::size_t>& idx) {
    out.insert(normalize(pick(p.word(), idx)).word());
    return false;
  });
  return out;
}

}  // namespace

std::size_t lis_length(const Permutation& p) { return longest_monotone(p.values(), std::less<>{}); }

std::size_t lds_length(const Permutation& p) {
  return longest_monotone(p.values(), std::greater<>{});
}

bool pattern_occurs(const Permutation& needle, const Permutation& haystack) {
  if (haystack.size() > kPatternSearchLimit) {
    throw Error(ErrorKind::SizeLimit, "pattern search limited to " +
                                          std::to_string(kPatternSearchLimit) + " letters");
  }
  if (needle.size() > haystack.size()) return false;
  return for_each_subset(haystack.size(), needle.size(), [&](const std::vector<std::size_t>& idx) {
    return normalize(pick(haystack.word(), idx)) == needle;
  });
}

Permutation largest_common_pattern_bruteforce(const Permutation& a, const Permutation& b) {
  if (a.size() > kCommonPatternLimit || b.size() > kCommonPatternLimit) {
    throw Error(ErrorKind::SizeLimit, "brute-force common pattern limited to " +
                                          std::to_string(kCommonPatternLimit) + " letters");
  }
  for (std::size_t k = std::min(a.size(), b.size()); k > 0; --k) {
    const auto pa = patterns_of_size(a, k);
    const auto pb = patterns_of_size(b, k);
    // Both sets are ordered, so the first shared element is the least.
    for (const auto& w : pa) {
      if (pb.contains(w)) return Permutation(w);
    }
  }
  return Permutation{};
}

Word parse_word(std::string_view text) {
  Word out;
  const bool separated = std::any_of(text.begin(), text.end(), [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  });
  if (!separated) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError(i, std::string("unexpected character '") + text[i] + "'");
      }
      out.push_back(text[i] - '0');
    }
    return out;
  }
  std::size_t i = 0;
  bool expect_value = true;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ',') {
      if (expect_value) throw ParseError(i, "empty value");
      expect_value = true;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      const auto res = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (res.ec != std::errc{}) throw ParseError(i, "value out of range");
      out.push_back(value);
      i = static_cast<std::size_t>(res.ptr - text.data());
      expect_value = false;
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  if (expect_value && !out.empty()) throw ParseError(text.size(), "trailing comma");
  return out;
}

Permutation parse_permutation(std::string_view text) { return Permutation(parse_word(text)); }

std::string to_string(std::span<const int> w) {
  const bool compact = std::all_of(w.begin(), w.end(), [](int v) { return v >= 0 && v < 10; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string to_string(const Permutation& p) { return to_string(p.values()); }

}  // namespace treeperm
