#pragma once

#include <vector>

#include "segeuler/arith.hpp"

namespace segeuler {

/// Power series in x truncated at a fixed order, with exact rational
/// coefficients c_0..c_N for sum c_n x^n. The EGF convention (x^n/n!) is
/// applied by callers explicitly.
class TruncSeries {
public:
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<Rat> coeffs);
  static TruncSeries constant(const Rat& c, int order);
  static TruncSeries x(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& coeff(int degree) const { return coeffs_.at(degree); }
  void set_coeff(int degree, Rat value) { coeffs_.at(degree) = std::move(value); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
  TruncSeries scaled(const Rat& factor) const;
  bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

  /// exp of a series with zero constant term (throws std::domain_error
  /// otherwise).
  static TruncSeries exp(const TruncSeries& s);

  /// Multiplicative inverse; requires a nonzero constant term (throws
  /// std::domain_error otherwise). (s * s.reciprocal()) == 1 up to the order.
  TruncSeries reciprocal() const;

private:
  std::vector<Rat> coeffs_;
};

}  // namespace segeuler
