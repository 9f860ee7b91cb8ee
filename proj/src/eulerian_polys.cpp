#include "segeuler/eulerian_polys.hpp"

#include <stdexcept>

#include "segeuler/series.hpp"

namespace segeuler {

BiPoly alpha_poly_from(const CountTable& k_slice) {
  BiPoly out;
  for (const auto& [index, v] : k_slice.entries)
    out += BiPoly::monomial(index.at(0), index.at(1), v);
  return out;
}

BiPoly alpha_poly(int n) {
  if (n < 0) throw std::invalid_argument("alpha_poly: n must be nonnegative");
  if (n == 0) return BiPoly::constant(1);
  return alpha_poly_from(k_table(n, KMethod::recurrence_n));
}

BiPoly named_poly(PolyFamily family, int n) {
  if (n < 0) throw std::invalid_argument("named_poly: n must be nonnegative");
  BiPoly out;
  switch (family) {
    case PolyFamily::A: {
      auto row = eulerian_row(n);
      for (int k = 0; k < static_cast<int>(row.size()); ++k)
        out += BiPoly::monomial(k, 0, row[k]);
      return out;
    }
    case PolyFamily::B: {
      if (n == 0) return BiPoly::constant(1);
      for (int r = 0; r < n; ++r)
        out += BiPoly::monomial(0, r, stirling2(n, r + 1) * factorial(r + 1));
      return out;
    }
    case PolyFamily::P: {
      CountTable t = t_table(n, TMethod::recurrence);
      for (const auto& [index, v] : t.entries) out += BiPoly::monomial(index.at(0), 0, v);
      return out;
    }
  }
  throw std::invalid_argument("named_poly: unknown family");
}

std::vector<Rat> gf_alpha(const Rat& t0, const Rat& q0, int N) {
  if (N < 0) throw std::invalid_argument("gf_alpha: N must be nonnegative");
  if (t0 == 1)
    throw std::domain_error("gf_alpha: t0 = 1 degenerates the series denominator");
  // E = e^{x(1-t0)} - 1
  TruncSeries exponent = TruncSeries::x(N).scaled(Rat(1) - t0);
  TruncSeries e = TruncSeries::exp(exponent) - TruncSeries::constant(1, N);
  // denominator 1 + q0 - (t0+q0)(E + 1) = (1 - t0) - (t0+q0) E
  TruncSeries denom = TruncSeries::constant(Rat(1) - t0, N) - e.scaled(t0 + q0);
  TruncSeries g = TruncSeries::constant(1, N) + e * denom.reciprocal();
  std::vector<Rat> out(N + 1);
  Int n_factorial = 1;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) n_factorial *= n;
    out[n] = g.coeff(n) * Rat(n_factorial);
  }
  return out;
}

}  // namespace segeuler
