#pragma once

#include <cstdint>
#include <string>

#include "segeuler/arith.hpp"
#include "segeuler/tables.hpp"

namespace segeuler {

/// Outcome of one identity verification. A failing report always carries a
/// counterexample; a passing one records the exact ranges that were checked.
struct VerificationReport {
  std::string name;
  std::string ranges;
  bool pass = true;
  std::string counterexample;
  double elapsed_seconds = 0;

  std::string text() const;
  std::string json() const;
};

/// Checks the closed-form exponential generating function of the alpha
/// polynomials against the K tables: for every sampled rational pair
/// (t0, q0) with t0 != 1, the series expansion must reproduce
/// alpha_n(t0, q0) exactly for n <= N. Samples form a grid with at least
/// ceil(sqrt(sample_count)) distinct values per coordinate, drawn
/// deterministically from the seed; sample_count must be >= (N+1)^2.
/// A non-null `tables` overrides the K source (mutation testing).
VerificationReport verify_gf(int N, int sample_count, std::uint64_t seed,
                             const KTables* tables = nullptr);

/// Same sampling scheme for the rescaled identity
///   1 + sum_{n>=1} t alpha_n(t,q)/(1-t)^n x^n/(2^{n-1} n!)
///     = [(1-t) - (q-t)(e^{x/2}-1)] / [(1-t) - (q+t)(e^{x/2}-1)].
VerificationReport verify_lemma_gf(int N, int sample_count, std::uint64_t seed,
                                   const KTables* tables = nullptr);

/// Denominator exponent in the Dobinski-type series: `printed` uses
/// 2^{k-1}, `corrected` 2^{k+1}. Only the corrected form holds.
enum class DobinskiVariant { printed, corrected };

/// Checks P_n(t0)/(1-t0)^{n+1} = sum_{k>=1} (1+t0)^{k-1} k^n / 2^{k+-1}
/// by an exact partial sum of `terms` terms plus a rigorous geometric tail
/// bound. Requires |1+t0| < 2 and t0 != 1 (throws std::domain_error).
VerificationReport verify_dobinski(int n, const Rat& t0, int terms,
                                   DobinskiVariant variant = DobinskiVariant::corrected);

/// Binomial shift in the generalized Worpitzky identity: `printed` uses
/// binom(n+k-i, n-1), `corrected` binom(n+k-i-2, n-1). Only the corrected
/// form holds.
enum class WorpitzkyVariant { printed, corrected };

/// Checks, for k = 1..k_max,
///   binom(k+r-1, r) Delta^{r+1}(X^n)|_{X=k-1}
///     = sum_{i=0}^{k-1} binom(n+k-i+shift, n-1) K(n,i,r),
/// plus (independently) the classical Worpitzky identity
///   k^n = sum_{i=0}^{k-1} binom(k+n-i-1, n) A(n,i)
/// and its discrete-derivative form
///   Delta^r(X^n)|_{X=k} = sum_i binom(k+n-i-1, n-r) A(n,i)
/// over the full support of A(n,.).
VerificationReport verify_worpitzky(int n, int r, int k_max,
                                    WorpitzkyVariant variant = WorpitzkyVariant::corrected,
                                    const KTables* tables = nullptr);

/// Exact specializations of alpha_n for n <= n_max:
///   alpha_n(t,0) = A_n(t), alpha_n(0,q) = B_n(q), alpha_n(t,1) = P_n(t),
///   [t^m] alpha_n(t,t) = T(n, n-1-m), alpha_n(-1,1) = 2^{n-1}.
/// A_n, B_n, P_n, T come from routes independent of the K tables.
VerificationReport verify_specializations(int n_max, const KTables* tables = nullptr);

/// The exact structural identities for n <= n_max: the differential
/// recurrence for alpha_n, the slice symmetry K(n,i,j) = K(n,n-1-i-j,j),
/// the mirror count T(n,n-m-1) = #{des+seg = m} against the enumeration
/// oracle (capped at n <= 8), the Stirling expansion of alpha_n,
/// K(n,0,j) = (j+1)! S(n,j+1), and the (j+1)! divisibility of K rows.
VerificationReport verify_recurrences_and_symmetries(int n_max, const KTables* tables = nullptr);

/// Checks that every row and column of the T triangle and of each K slice up
/// to n_max is unimodal (weakly rises then weakly falls).
VerificationReport unimodality_scan(int n_max);

}  // namespace segeuler
