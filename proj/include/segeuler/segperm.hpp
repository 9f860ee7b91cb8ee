#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segeuler/segcomp.hpp"

namespace segeuler {

/// A permutation word of {1,...,n} with bars between some adjacent positions
/// (bar at position i separates word[i-1] and word[i], 1-indexed),
/// e.g. "3|7,1,5,6|2,4". Immutable after construction.
class SegmentedPermutation {
public:
  SegmentedPermutation(std::vector<int> word, std::vector<int> bars);

  static SegmentedPermutation parse(std::string_view text);

  /// Standardizes an arbitrary word of positive integers (ties broken
  /// left to right) and keeps the bars in place.
  static SegmentedPermutation standardize(const std::vector<int>& word,
                                          const std::vector<int>& bars);

  const std::vector<int>& word() const { return word_; }
  const std::vector<int>& bars() const { return bars_; }
  const std::string& str() const { return text_; }

  int size() const { return static_cast<int>(word_.size()); }
  int des() const;
  int seg() const { return static_cast<int>(bars_.size()); }

  /// Positions i with word[i-1] > word[i] that are not bars, sorted.
  std::vector<int> descents() const;

  /// The segmented composition recording descents and bars.
  SegmentedComposition scdes() const;

  /// Word reversed, bar at i sent to n-i. An involution.
  SegmentedPermutation mirror() const;

  /// Convolution: all segmented permutations of size n+r whose first n letters
  /// standardize to *this (keeping their bars) and whose last r letters
  /// standardize to rhs; the bar at the boundary position n is free.
  /// Result is sorted, of size 2*binomial(n+r, n).
  std::vector<SegmentedPermutation> convolve(const SegmentedPermutation& rhs) const;

  struct Filter {
    std::optional<int> des;
    std::optional<int> seg;
  };

  static constexpr int kDefaultEnumerationCap = 9;

  /// Visits the 2^(n-1)*n! segmented permutations of size n, words in
  /// lexicographic order and bar sets in lexicographic order within a word.
  /// Throws std::domain_error when n exceeds `cap`.
  static void for_each(int n, const std::function<void(const SegmentedPermutation&)>& visit,
                       Filter filter = {}, int cap = kDefaultEnumerationCap);
  static std::vector<SegmentedPermutation> all(int n, Filter filter = {},
                                               int cap = kDefaultEnumerationCap);

  bool operator==(const SegmentedPermutation& o) const {
    return word_ == o.word_ && bars_ == o.bars_;
  }
  bool operator!=(const SegmentedPermutation& o) const { return !(*this == o); }

  /// Ordering for use as a basis index: by size, then canonical text.
  bool operator<(const SegmentedPermutation& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return text_ < o.text_;
  }

private:
  std::vector<int> word_;
  std::vector<int> bars_;  // sorted
  std::string text_;
};

/// Fast enumeration path for counting oracles: visits every permutation word
/// of {1..n} in lexicographic order with its descent bitmask
/// (bit p-1 set when word[p-1] > word[p]).
template <class F>
void for_each_word_descmask(int n, F&& visit) {
  if (n < 1) return;
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    std::uint32_t mask = 0;
    for (int p = 0; p + 1 < n; ++p)
      if (word[p] > word[p + 1]) mask |= 1u << p;
    visit(static_cast<const std::vector<int>&>(word), mask);
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace segeuler
