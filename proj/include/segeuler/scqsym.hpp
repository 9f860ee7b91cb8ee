#pragma once

#include <map>
#include <string>
#include <variant>

#include "segeuler/bipoly.hpp"
#include "segeuler/segcomp.hpp"
#include "segeuler/segperm.hpp"

namespace segeuler {

enum class BasisTag { R, S, G };

std::string basis_name(BasisTag b);

using BasisIndex = std::variant<SegmentedComposition, SegmentedPermutation>;

struct BasisIndexLess {
  bool operator()(const BasisIndex& a, const BasisIndex& b) const;
};

/// An element of the free module over segmented compositions (bases R and S)
/// or segmented permutations (basis G), with BiPoly coefficients. Elements of
/// different degrees may coexist; the module is graded and degree filtering is
/// a query.
class ModuleElement {
public:
  using TermMap = std::map<BasisIndex, BiPoly, BasisIndexLess>;

  explicit ModuleElement(BasisTag basis) : basis_(basis) {}

  static ModuleElement ribbon(const SegmentedComposition& index, BiPoly coeff = BiPoly::constant(1));
  static ModuleElement complete(const SegmentedComposition& index, BiPoly coeff = BiPoly::constant(1));
  static ModuleElement g(const SegmentedPermutation& index, BiPoly coeff = BiPoly::constant(1));

  BasisTag basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add(const BasisIndex& index, const BiPoly& coeff);
  BiPoly coeff(const BasisIndex& index) const;

  /// Sub-element supported on indices of degree n.
  ModuleElement homogeneous(int n) const;

  ModuleElement& operator+=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  ModuleElement scaled(const BiPoly& factor) const;
  bool operator==(const ModuleElement& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
  }
  bool operator!=(const ModuleElement& o) const { return !(*this == o); }

  /// "coeff * B[index]" terms joined by " + " / " - ", indices ordered by
  /// (degree, canonical text); unit coefficients are dropped.
  std::string str() const;

  /// {"basis":"R","terms":[{"index":"...","coeff":{"i,j":"c"}},...]}
  std::string json() const;

private:
  BasisTag basis_;
  TermMap terms_;
};

/// Bilinear product in a shared basis:
///   R: R_I R_K = R_{I.K} + R_{I|K} + R_{I>K};
///   S: S^I S^K = S^{I.K};
///   G: G_sigma G_tau = sum of G_mu over the convolution.
/// Mixed bases throw std::invalid_argument.
ModuleElement product(const ModuleElement& a, const ModuleElement& b);

/// Supported directions: S->R, R->S (signed), R->G (expansion over segmented
/// permutations, capped at degree `g_cap`). Anything else throws
/// std::invalid_argument.
ModuleElement change_basis(const ModuleElement& element, BasisTag to, int g_cap = 7);

enum class EulerianForm { ribbon, complete };

/// The generalized noncommutative Eulerian element of degree n:
///   ribbon form   sum_I t^{des(I)} q^{seg(I)} R_I,
///   complete form sum_I t^{des(I)} (1-t)^{n-l(I)} (q-t)^{seg(I)} S^I.
/// The two are equal after change_basis.
ModuleElement nc_eulerian(int n, EulerianForm form);

/// Image of the degree-n component under the algebra morphism sending each
/// G index of size n to x^n/(2^{n-1} n!): `poly` collects the coefficient sum
/// and `scale` carries the rational 1/(2^{n-1} n!).
struct PhiComponent {
  BiPoly poly;
  Rat scale;
};

using PhiImage = std::map<int, PhiComponent>;

/// The morphism phi; R and S elements are accepted via basis conversion.
/// Degrees are capped at `degree_cap` (word sweep is factorial in n).
PhiImage phi(const ModuleElement& element, int degree_cap = 11);

/// Truncation of the complete-basis series Pi_{i,j}: the sum of S^I over all
/// segmented compositions I with des(I) = i and seg(I) = j of size <= N.
ModuleElement pi_truncated(int i, int j, int N);

}  // namespace segeuler
