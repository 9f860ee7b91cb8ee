#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace segeuler {

enum class Sep : std::uint8_t { comma, bar };

enum class ConcatMode { comma, bar, join };

/// A composition of n whose adjacent parts are separated by commas or bars,
/// e.g. "2,1|2|3,1". Equivalently a pair of disjoint subsets (descent set,
/// bar set) of {1,...,n-1}. Immutable after construction.
class SegmentedComposition {
public:
  SegmentedComposition(std::vector<int> parts, std::vector<Sep> seps);

  static SegmentedComposition single(int n);

  /// Grammar: part (("," | "|") part)*, parts are nonzero decimals.
  /// ASCII spaces are accepted and stripped. Throws std::invalid_argument.
  static SegmentedComposition parse(std::string_view text);

  /// Rebuilds the composition of n with the given descent and bar sets
  /// (disjoint subsets of {1,...,n-1}). Throws std::invalid_argument.
  static SegmentedComposition from_sets(int n, const std::vector<int>& descents,
                                        const std::vector<int>& bars);

  const std::vector<int>& parts() const { return parts_; }
  const std::vector<Sep>& seps() const { return seps_; }

  /// Canonical text, e.g. "2,1|2|3,1".
  const std::string& str() const { return text_; }

  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int seg() const { return seg_; }
  int des() const { return length() - seg_; }

  /// (descent set, bar set), both sorted ascending.
  std::pair<std::vector<int>, std::vector<int>> descent_bar_sets() const;

  SegmentedComposition concat(const SegmentedComposition& rhs, ConcatMode mode) const;

  /// Reverse refinement: true iff this is finer than `coarser`, i.e. the two
  /// have equal n, Des(this) contains Des(coarser), and
  /// Bar(this) is contained in Bar(coarser) which is contained in Des(this) + Bar(this).
  /// Different n simply returns false.
  bool finer_than(const SegmentedComposition& coarser) const;

  /// All 3^(n-1) segmented compositions of n, ordered lexicographically by
  /// (descent set, bar set). n = 0 gives an empty vector.
  static std::vector<SegmentedComposition> all(int n);
  static void for_each(int n, const std::function<void(const SegmentedComposition&)>& visit);

  bool operator==(const SegmentedComposition& o) const {
    return n_ == o.n_ && text_ == o.text_;
  }
  bool operator!=(const SegmentedComposition& o) const { return !(*this == o); }

  /// Ordering for use as a basis index: by n, then canonical text.
  bool operator<(const SegmentedComposition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return text_ < o.text_;
  }

private:
  std::vector<int> parts_;
  std::vector<Sep> seps_;
  int n_ = 0;
  int seg_ = 0;
  std::string text_;
};

}  // namespace segeuler
