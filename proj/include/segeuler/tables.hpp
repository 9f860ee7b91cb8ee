#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "segeuler/arith.hpp"

namespace segeuler {

/// Classical Eulerian number A(n,k); out-of-range k gives 0.
Int eulerian(int n, int k);
std::vector<Int> eulerian_row(int n);

/// Stirling number of the second kind S(n,k).
Int stirling2(int n, int k);

/// Ordered Bell number (number of ordered set partitions); equals T(n,0).
Int ordered_bell(int n);

enum class KMethod { enumerate, recurrence_n, recurrence_j, closed_form };
enum class TMethod { sum, recurrence };

std::string method_name(KMethod m);
std::string method_name(TMethod m);

/// One computed table: either the T(n,.) row (keys {k}) or the K(n,.,.) slice
/// (keys {i,j}). Entries outside the stored support are zero.
struct CountTable {
  int n = 0;
  std::string method;
  std::map<std::vector<int>, Int> entries;

  Int value(std::initializer_list<int> index) const;
};

/// K(n,i,j) = number of segmented permutations of size n with i descents and
/// j bars, for 0 <= i+j < n, by the requested method. The enumerate method is
/// capped (throws std::domain_error beyond `oracle_cap`); recurrence_j checks
/// that its division by j is exact and throws std::logic_error otherwise.
CountTable k_table(int n, KMethod method, int oracle_cap = 9);

/// K slices for n = 1..n_max in one bottom-up pass (recurrence methods).
std::vector<CountTable> k_tables_up_to(int n_max, KMethod method = KMethod::recurrence_n);

/// T(n,k) = number of segmented permutations of size n with k descents.
/// n = 0 is the single empty permutation.
CountTable t_table(int n, TMethod method);
std::vector<CountTable> t_tables_up_to(int n_max, TMethod method = TMethod::recurrence);

/// The K slices for n = 1..n_max, with support for injecting single-entry
/// perturbations (used by the mutation-sensitivity checks).
class KTables {
public:
  static KTables build(int n_max, KMethod method = KMethod::recurrence_n);

  int n_max() const { return static_cast<int>(slices_.size()); }
  const CountTable& at(int n) const;
  void perturb(int n, int i, int j, const Int& delta);

private:
  std::vector<CountTable> slices_;
};

// --- exports ------------------------------------------------------------

/// JSON object keyed "n,k" (T-style) or "n,i,j" (K-style); values are
/// decimal strings so arbitrary precision survives the round trip.
std::string tables_json(std::span<const CountTable> tables);

/// CSV with one row per entry: "n,k,value" or "n,i,j,value" (with header).
std::string tables_csv(std::span<const CountTable> tables);

/// LaTeX array of a T-style triangle, rows n, columns k.
std::string t_latex(std::span<const CountTable> rows);

/// LaTeX arrays of K slices, one per n, rows j and columns i.
std::string k_latex(std::span<const CountTable> slices);

/// OEIS b-file: "index value" per line.
std::string bfile(std::span<const std::pair<long long, Int>> rows);

}  // namespace segeuler
