#pragma once

#include <vector>

#include "segeuler/bipoly.hpp"
#include "segeuler/tables.hpp"

namespace segeuler {

/// alpha_n(t,q) = sum over segmented permutations of size n of
/// t^descents q^bars; built from the K slice. alpha_0 = 1.
BiPoly alpha_poly(int n);

/// Same, from an explicitly supplied K slice (for table injection).
BiPoly alpha_poly_from(const CountTable& k_slice);

enum class PolyFamily { A, B, P };

/// A_n(t): classical Eulerian polynomial; B_n(q): ordered Bell polynomial
/// sum S(n,r+1)(r+1)! q^r; P_n(t): sum T(n,k) t^k. All exact, n >= 0.
BiPoly named_poly(PolyFamily family, int n);

/// alpha_n(t0, q0) for n = 0..N, computed by expanding the closed-form
/// exponential generating function
///   G(t,q,x) = 1 + (e^{x(1-t)} - 1) / (1 + q - (t+q) e^{x(1-t)})
/// as an exact truncated series and scaling coefficient n by n!.
/// Requires t0 != 1 (throws std::domain_error).
std::vector<Rat> gf_alpha(const Rat& t0, const Rat& q0, int N);

}  // namespace segeuler
