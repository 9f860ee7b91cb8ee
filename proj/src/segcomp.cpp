#include "segeuler/segcomp.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "arith_impl.hpp"

namespace segeuler {

namespace {

std::string render(const std::vector<int>& parts, const std::vector<Sep>& seps) {
  std::string out;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (p > 0) out += seps[p - 1] == Sep::bar ? '|' : ',';
    out += std::to_string(parts[p]);
  }
  return out;
}

}  // namespace

SegmentedComposition::SegmentedComposition(std::vector<int> parts, std::vector<Sep> seps)
    : parts_(std::move(parts)), seps_(std::move(seps)) {
  if (parts_.empty()) throw std::invalid_argument("segmented composition needs at least one part");
  if (seps_.size() + 1 != parts_.size())
    throw std::invalid_argument("segmented composition needs exactly length-1 separators");
  for (int part : parts_) {
    if (part < 1) throw std::invalid_argument("segmented composition parts must be positive");
    n_ += part;
  }
  seg_ = static_cast<int>(std::count(seps_.begin(), seps_.end(), Sep::bar));
  text_ = render(parts_, seps_);
}

SegmentedComposition SegmentedComposition::single(int n) {
  return SegmentedComposition({n}, {});
}

SegmentedComposition SegmentedComposition::parse(std::string_view text) {
  std::vector<int> parts;
  std::vector<Sep> seps;
  bool in_part = false;
  long current = 0;
  auto flush = [&] {
    if (!in_part) throw std::invalid_argument("malformed segmented composition: '" + std::string(text) + "'");
    if (current < 1) throw std::invalid_argument("segmented composition parts must be positive");
    parts.push_back(static_cast<int>(current));
    current = 0;
    in_part = false;
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current = current * 10 + (c - '0');
      if (current > 1'000'000'000L) throw std::invalid_argument("part out of range");
      in_part = true;
    } else if (c == ',' || c == '|') {
      flush();
      seps.push_back(c == '|' ? Sep::bar : Sep::comma);
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in segmented composition");
    }
  }
  flush();
  return SegmentedComposition(std::move(parts), std::move(seps));
}

SegmentedComposition SegmentedComposition::from_sets(int n, const std::vector<int>& descents,
                                                     const std::vector<int>& bars) {
  if (n < 1) throw std::invalid_argument("from_sets: n must be positive");
  std::vector<std::pair<int, Sep>> cuts;
  cuts.reserve(descents.size() + bars.size());
  for (int d : descents) cuts.emplace_back(d, Sep::comma);
  for (int b : bars) cuts.emplace_back(b, Sep::bar);
  std::sort(cuts.begin(), cuts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> parts;
  std::vector<Sep> seps;
  int previous = 0;
  for (const auto& [pos, sep] : cuts) {
    if (pos <= previous) {
      if (pos == previous)
        throw std::invalid_argument("from_sets: descent and bar sets must be disjoint");
      throw std::invalid_argument("from_sets: positions must be in {1,...,n-1}");
    }
    if (pos >= n) throw std::invalid_argument("from_sets: positions must be in {1,...,n-1}");
    parts.push_back(pos - previous);
    seps.push_back(sep);
    previous = pos;
  }
  parts.push_back(n - previous);
  return SegmentedComposition(std::move(parts), std::move(seps));
}

std::pair<std::vector<int>, std::vector<int>> SegmentedComposition::descent_bar_sets() const {
  std::vector<int> descents, bars;
  int prefix = 0;
  for (std::size_t p = 0; p + 1 < parts_.size(); ++p) {
    prefix += parts_[p];
    (seps_[p] == Sep::bar ? bars : descents).push_back(prefix);
  }
  return {std::move(descents), std::move(bars)};
}

SegmentedComposition SegmentedComposition::concat(const SegmentedComposition& rhs,
                                                  ConcatMode mode) const {
  std::vector<int> parts = parts_;
  std::vector<Sep> seps = seps_;
  if (mode == ConcatMode::join) {
    parts.back() += rhs.parts_.front();
    parts.insert(parts.end(), rhs.parts_.begin() + 1, rhs.parts_.end());
  } else {
    seps.push_back(mode == ConcatMode::bar ? Sep::bar : Sep::comma);
    parts.insert(parts.end(), rhs.parts_.begin(), rhs.parts_.end());
  }
  seps.insert(seps.end(), rhs.seps_.begin(), rhs.seps_.end());
  return SegmentedComposition(std::move(parts), std::move(seps));
}

bool SegmentedComposition::finer_than(const SegmentedComposition& coarser) const {
  if (n_ != coarser.n_) return false;
  auto [des_f, bar_f] = descent_bar_sets();
  auto [des_c, bar_c] = coarser.descent_bar_sets();
  if (!std::includes(des_f.begin(), des_f.end(), des_c.begin(), des_c.end())) return false;
  if (!std::includes(bar_c.begin(), bar_c.end(), bar_f.begin(), bar_f.end())) return false;
  std::vector<int> support = des_f;
  support.insert(support.end(), bar_f.begin(), bar_f.end());
  std::sort(support.begin(), support.end());
  return std::includes(support.begin(), support.end(), bar_c.begin(), bar_c.end());
}

void SegmentedComposition::for_each(int n,
                                    const std::function<void(const SegmentedComposition&)>& visit) {
  if (n < 1) return;
  std::vector<int> universe(n - 1);
  for (int p = 1; p < n; ++p) universe[p - 1] = p;
  detail::for_each_subset_lex(universe, [&](const std::vector<int>& descents) {
    std::vector<int> rest;
    std::set_difference(universe.begin(), universe.end(), descents.begin(), descents.end(),
                        std::back_inserter(rest));
    detail::for_each_subset_lex(rest, [&](const std::vector<int>& bars) {
      visit(from_sets(n, descents, bars));
    });
  });
}

std::vector<SegmentedComposition> SegmentedComposition::all(int n) {
  std::vector<SegmentedComposition> out;
  for_each(n, [&](const SegmentedComposition& c) { out.push_back(c); });
  return out;
}

}  // namespace segeuler
