#pragma once

#include <string>
#include <vector>

#include "segeuler/arith.hpp"

namespace segeuler {

/// Univariate polynomial over exact rationals, coefficients indexed by degree.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly constant(Rat c);
  static RatPoly monomial(int degree, Rat c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rat coeff(int degree) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

  Rat eval(const Rat& x0) const;

  /// p(X+1) as a polynomial in X.
  RatPoly shifted_by_one() const;

  std::string str() const;

private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Discrete derivative: (delta p)(X) = p(X+1) - p(X).
RatPoly delta(const RatPoly& p);

/// delta applied r times; drops the degree by exactly r while r <= deg p.
RatPoly delta_power(const RatPoly& p, int r);

}  // namespace segeuler
