#pragma once

#include <map>
#include <string>
#include <utility>

#include "segeuler/arith.hpp"

namespace segeuler {

/// Exact bivariate polynomial in t and q with integer coefficients.
/// Zero coefficients are never stored. Immutable-friendly value type.
class BiPoly {
public:
  struct Mono {
    int t = 0;
    int q = 0;
    // printing/canonical order: ascending q-degree, then t-degree
    bool operator<(const Mono& o) const { return q != o.q ? q < o.q : t < o.t; }
    bool operator==(const Mono& o) const { return t == o.t && q == o.q; }
  };

  BiPoly() = default;
  static BiPoly constant(Int c);
  static BiPoly monomial(int t_deg, int q_deg, Int c = 1);
  static BiPoly var_t() { return monomial(1, 0); }
  static BiPoly var_q() { return monomial(0, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int deg_t() const;
  int deg_q() const;
  Int coeff(int t_deg, int q_deg) const;
  const std::map<Mono, Int>& terms() const { return coeffs_; }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  bool operator==(const BiPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly pow(unsigned e) const;
  BiPoly derivative_t() const;
  BiPoly derivative_q() const;

  Rat eval(const Rat& t0, const Rat& q0) const;

  /// True when the polynomial is a single term c (constant included).
  bool is_monomial() const { return coeffs_.size() == 1; }

  /// Canonical text, e.g. "1 + 4*t + t^2 + 6*q + 6*t*q + 6*q^2".
  std::string str() const;

  /// JSON object {"i,j": "coeff"} with i the t-degree and j the q-degree.
  std::string json() const;

private:
  void add_term(Mono m, const Int& c);
  std::map<Mono, Int> coeffs_;
};

}  // namespace segeuler
