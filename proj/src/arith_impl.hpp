#pragma once

// Shared internal helpers. Nothing here is part of the public surface.

#include <functional>
#include <vector>

namespace segeuler::detail {

/// Visits the subsets of `universe` (a sorted vector) in lexicographic order
/// as sorted sequences: {}, {u0}, {u0,u1}, ..., {u1}, ...
inline void for_each_subset_lex(const std::vector<int>& universe,
                                const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    visit(current);
    for (std::size_t p = start; p < universe.size(); ++p) {
      current.push_back(universe[p]);
      rec(p + 1);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace segeuler::detail
