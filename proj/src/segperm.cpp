#include "segeuler/segperm.hpp"

#include <cctype>
#include <stdexcept>

#include "arith_impl.hpp"

namespace segeuler {

namespace {

std::string render(const std::vector<int>& word, const std::vector<int>& bars) {
  std::string out;
  std::size_t next_bar = 0;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (p > 0) {
      if (next_bar < bars.size() && bars[next_bar] == static_cast<int>(p)) {
        out += '|';
        ++next_bar;
      } else {
        out += ',';
      }
    }
    out += std::to_string(word[p]);
  }
  return out;
}

void check_permutation(const std::vector<int>& word) {
  if (word.empty()) throw std::invalid_argument("segmented permutation needs at least one value");
  std::vector<bool> seen(word.size(), false);
  for (int v : word) {
    if (v < 1 || v > static_cast<int>(word.size()) || seen[v - 1])
      throw std::invalid_argument("word is not a permutation of {1,...,n}");
    seen[v - 1] = true;
  }
}

}  // namespace

SegmentedPermutation::SegmentedPermutation(std::vector<int> word, std::vector<int> bars)
    : word_(std::move(word)), bars_(std::move(bars)) {
  check_permutation(word_);
  std::sort(bars_.begin(), bars_.end());
  for (std::size_t p = 0; p < bars_.size(); ++p) {
    if (bars_[p] < 1 || bars_[p] >= static_cast<int>(word_.size()))
      throw std::invalid_argument("bar position out of range");
    if (p > 0 && bars_[p] == bars_[p - 1]) throw std::invalid_argument("duplicate bar position");
  }
  text_ = render(word_, bars_);
}

SegmentedPermutation SegmentedPermutation::parse(std::string_view text) {
  std::vector<int> word;
  std::vector<int> bars;
  bool in_value = false;
  long current = 0;
  auto flush = [&] {
    if (!in_value) throw std::invalid_argument("malformed segmented permutation: '" + std::string(text) + "'");
    word.push_back(static_cast<int>(current));
    current = 0;
    in_value = false;
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current = current * 10 + (c - '0');
      if (current > 1'000'000'000L) throw std::invalid_argument("value out of range");
      in_value = true;
    } else if (c == ',' || c == '|') {
      flush();
      if (c == '|') bars.push_back(static_cast<int>(word.size()));
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in segmented permutation");
    }
  }
  flush();
  return SegmentedPermutation(std::move(word), std::move(bars));
}

SegmentedPermutation SegmentedPermutation::standardize(const std::vector<int>& word,
                                                       const std::vector<int>& bars) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> standard(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    standard[order[rank]] = static_cast<int>(rank + 1);
  return SegmentedPermutation(std::move(standard), bars);
}

int SegmentedPermutation::des() const { return static_cast<int>(descents().size()); }

std::vector<int> SegmentedPermutation::descents() const {
  std::vector<int> out;
  std::size_t next_bar = 0;
  for (int p = 1; p < size(); ++p) {
    if (next_bar < bars_.size() && bars_[next_bar] == p) {
      ++next_bar;
      continue;
    }
    if (word_[p - 1] > word_[p]) out.push_back(p);
  }
  return out;
}

SegmentedComposition SegmentedPermutation::scdes() const {
  return SegmentedComposition::from_sets(size(), descents(), bars_);
}

SegmentedPermutation SegmentedPermutation::mirror() const {
  std::vector<int> word(word_.rbegin(), word_.rend());
  std::vector<int> bars;
  bars.reserve(bars_.size());
  for (int b : bars_) bars.push_back(size() - b);
  return SegmentedPermutation(std::move(word), std::move(bars));
}

std::vector<SegmentedPermutation> SegmentedPermutation::convolve(
    const SegmentedPermutation& rhs) const {
  const int n = size();
  const int r = rhs.size();
  const int total = n + r;
  std::vector<SegmentedPermutation> out;

  // Choose which values land in the first n positions; each side is then
  // rearranged to match the standardization pattern of its factor.
  std::vector<int> take(n);
  std::iota(take.begin(), take.end(), 1);
  while (true) {
    std::vector<int> prefix_values = take;
    std::vector<int> suffix_values;
    suffix_values.reserve(r);
    {
      std::size_t at = 0;
      for (int v = 1; v <= total; ++v) {
        if (at < take.size() && take[at] == v) {
          ++at;
        } else {
          suffix_values.push_back(v);
        }
      }
    }
    std::vector<int> word(total);
    for (int p = 0; p < n; ++p) word[p] = prefix_values[word_[p] - 1];
    for (int p = 0; p < r; ++p) word[n + p] = suffix_values[rhs.word_[p] - 1];

    std::vector<int> bars = bars_;
    for (int b : rhs.bars_) bars.push_back(n + b);
    out.emplace_back(word, bars);
    bars.push_back(n);
    out.emplace_back(word, bars);

    // next n-combination of {1..total} in lexicographic order
    int p = n - 1;
    while (p >= 0 && take[p] == total - (n - 1 - p)) --p;
    if (p < 0) break;
    ++take[p];
    for (int q = p + 1; q < n; ++q) take[q] = take[q - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SegmentedPermutation::for_each(int n,
                                    const std::function<void(const SegmentedPermutation&)>& visit,
                                    Filter filter, int cap) {
  if (n < 1) return;
  if (n > cap)
    throw std::domain_error("segmented-permutation enumeration for n=" + std::to_string(n) +
                            " exceeds the oracle cap " + std::to_string(cap) +
                            " (raise --oracle-cap)");
  std::vector<int> universe(n - 1);
  for (int p = 1; p < n; ++p) universe[p - 1] = p;
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    std::vector<int> desc_all;
    for (int p = 1; p < n; ++p)
      if (word[p - 1] > word[p]) desc_all.push_back(p);
    detail::for_each_subset_lex(universe, [&](const std::vector<int>& bars) {
      if (filter.seg && static_cast<int>(bars.size()) != *filter.seg) return;
      if (filter.des) {
        int des_count = 0;
        for (int d : desc_all)
          if (!std::binary_search(bars.begin(), bars.end(), d)) ++des_count;
        if (des_count != *filter.des) return;
      }
      visit(SegmentedPermutation(word, bars));
    });
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<SegmentedPermutation> SegmentedPermutation::all(int n, Filter filter, int cap) {
  std::vector<SegmentedPermutation> out;
  for_each(n, [&](const SegmentedPermutation& s) { out.push_back(s); }, filter, cap);
  return out;
}

}  // namespace segeuler
