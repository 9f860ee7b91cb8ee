#include "segeuler/identities.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "segeuler/bipoly.hpp"
#include "segeuler/eulerian_polys.hpp"
#include "segeuler/ratpoly.hpp"
#include "segeuler/segperm.hpp"
#include "segeuler/series.hpp"

namespace segeuler {

std::string VerificationReport::text() const {
  std::string out = pass ? "[PASS] " : "[FAIL] ";
  out += name + ": " + ranges;
  if (!pass) out += " | counterexample: " + counterexample;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, " [%.3fs]", elapsed_seconds);
  return out + buffer;
}

namespace {

std::string json_escape(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string VerificationReport::json() const {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.6f", elapsed_seconds);
  return std::string("{\"name\":\"") + json_escape(name) + "\",\"ranges\":\"" +
         json_escape(ranges) + "\",\"status\":\"" + (pass ? "pass" : "fail") +
         "\",\"counterexample\":\"" + json_escape(counterexample) +
         "\",\"elapsed_seconds\":" + elapsed + "}";
}

namespace {

class Timer {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

KTables resolve_tables(const KTables* tables, int n_max) {
  if (tables == nullptr) return KTables::build(n_max);
  if (tables->n_max() < n_max)
    throw std::invalid_argument("supplied K tables stop below the requested n range");
  return *tables;
}

/// `count` distinct small rationals, deterministic in the generator state.
std::vector<Rat> sample_values(std::mt19937_64& rng, int count, bool exclude_one) {
  std::set<Rat> seen;
  std::vector<Rat> out;
  int magnitude = 8;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts % 200 == 0) magnitude *= 2;
    std::uniform_int_distribution<int> num(-magnitude, magnitude), den(1, 8);
    Rat value(num(rng), den(rng));
    if (exclude_one && value == 1) continue;
    if (seen.insert(value).second) out.push_back(value);
  }
  return out;
}

std::string grid_ranges(int N, int g, std::uint64_t seed) {
  return "n <= " + std::to_string(N) + " at a " + std::to_string(g) + "x" + std::to_string(g) +
         " grid of rational (t,q) samples, seed " + std::to_string(seed);
}

int grid_side(int N, int sample_count) {
  if (N < 1) throw std::invalid_argument("order N must be at least 1");
  long long needed = static_cast<long long>(N + 1) * (N + 1);
  if (sample_count < needed)
    throw std::invalid_argument("sample_count must be at least (N+1)^2 = " + std::to_string(needed));
  int g = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(sample_count))));
  return std::max(g, N + 1);
}

std::vector<BiPoly> alpha_family(const KTables& tables, int n_max) {
  std::vector<BiPoly> alphas(n_max + 1);
  alphas[0] = BiPoly::constant(1);
  for (int n = 1; n <= n_max; ++n) alphas[n] = alpha_poly_from(tables.at(n));
  return alphas;
}

}  // namespace

VerificationReport verify_gf(int N, int sample_count, std::uint64_t seed, const KTables* tables) {
  Timer timer;
  VerificationReport report;
  report.name = "generating-function";
  int g = grid_side(N, sample_count);
  report.ranges = grid_ranges(N, g, seed);

  KTables kt = resolve_tables(tables, N);
  std::vector<BiPoly> alphas = alpha_family(kt, N);

  std::mt19937_64 rng(seed);
  std::vector<Rat> t_values = sample_values(rng, g, /*exclude_one=*/true);
  std::vector<Rat> q_values = sample_values(rng, g, /*exclude_one=*/false);

  for (const Rat& t0 : t_values) {
    for (const Rat& q0 : q_values) {
      std::vector<Rat> series = gf_alpha(t0, q0, N);
      for (int n = 0; n <= N; ++n) {
        Rat expected = alphas[n].eval(t0, q0);
        if (series[n] != expected) {
          report.pass = false;
          report.counterexample = "n=" + std::to_string(n) + " at (t,q)=(" + rat_str(t0) + "," +
                                  rat_str(q0) + "): table gives " + rat_str(expected) +
                                  ", series gives " + rat_str(series[n]);
          report.elapsed_seconds = timer.seconds();
          return report;
        }
      }
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_lemma_gf(int N, int sample_count, std::uint64_t seed,
                                   const KTables* tables) {
  Timer timer;
  VerificationReport report;
  report.name = "rescaled-generating-function";
  int g = grid_side(N, sample_count);
  report.ranges = grid_ranges(N, g, seed);

  KTables kt = resolve_tables(tables, N);
  std::vector<BiPoly> alphas = alpha_family(kt, N);

  std::mt19937_64 rng(seed);
  std::vector<Rat> t_values = sample_values(rng, g, /*exclude_one=*/true);
  std::vector<Rat> q_values = sample_values(rng, g, /*exclude_one=*/false);

  TruncSeries half_exp =
      TruncSeries::exp(TruncSeries::x(N).scaled(Rat(1, 2))) - TruncSeries::constant(1, N);

  for (const Rat& t0 : t_values) {
    for (const Rat& q0 : q_values) {
      Rat one_minus_t = Rat(1) - t0;
      TruncSeries numerator =
          TruncSeries::constant(one_minus_t, N) - half_exp.scaled(q0 - t0);
      TruncSeries denominator =
          TruncSeries::constant(one_minus_t, N) - half_exp.scaled(q0 + t0);
      TruncSeries rhs = numerator * denominator.reciprocal();
      Rat scale_power = 1;  // (1-t0)^n
      Int weight = 1;       // 2^{n-1} n!
      for (int n = 0; n <= N; ++n) {
        Rat lhs;
        if (n == 0) {
          lhs = 1;
        } else {
          scale_power *= one_minus_t;
          weight = int_pow(2, n - 1) * factorial(n);
          lhs = t0 * alphas[n].eval(t0, q0) / (scale_power * Rat(weight));
        }
        if (lhs != rhs.coeff(n)) {
          report.pass = false;
          report.counterexample = "n=" + std::to_string(n) + " at (t,q)=(" + rat_str(t0) + "," +
                                  rat_str(q0) + "): table side " + rat_str(lhs) +
                                  ", series side " + rat_str(rhs.coeff(n));
          report.elapsed_seconds = timer.seconds();
          return report;
        }
      }
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_dobinski(int n, const Rat& t0, int terms, DobinskiVariant variant) {
  Timer timer;
  if (n < 1) throw std::invalid_argument("verify_dobinski: n must be positive");
  if (terms < 1) throw std::invalid_argument("verify_dobinski: need at least one term");
  if (t0 == 1) throw std::domain_error("verify_dobinski: t0 = 1 is outside the domain");
  Rat ratio = rat_abs(Rat(1) + t0) / 2;
  if (ratio >= 1)
    throw std::domain_error("verify_dobinski: |1+t0| must be below 2 for convergence");

  const bool corrected = variant == DobinskiVariant::corrected;
  VerificationReport report;
  report.name = corrected ? "dobinski(corrected 2^{k+1})" : "dobinski(printed 2^{k-1})";
  report.ranges = "n=" + std::to_string(n) + ", t0=" + rat_str(t0) + ", " +
                  std::to_string(terms) + " exact terms plus geometric tail bound";

  Rat lhs = named_poly(PolyFamily::P, n).eval(t0, Rat(0)) / rat_pow(Rat(1) - t0, n + 1);

  // term_k = (1+t0)^{k-1} k^n / 2^{k+e}, e = +1 corrected, -1 printed
  Rat partial = 0;
  Rat base_power = 1;                                    // (1+t0)^{k-1}
  Rat half_power = corrected ? Rat(1, 4) : Rat(1);       // 1 / 2^{k+e}
  for (int k = 1; k <= terms; ++k) {
    partial += base_power * Rat(int_pow(Int(k), n)) * half_power;
    base_power *= Rat(1) + t0;
    half_power /= 2;
  }

  // For k > terms the term ratio is at most ((terms+2)/(terms+1))^n * rho < 1,
  // so the tail is dominated by a geometric series starting at term_{terms+1}.
  Rat ratio_bound = ratio * rat_pow(Rat(terms + 2, terms + 1), n);
  if (ratio_bound >= 1)
    throw std::domain_error("verify_dobinski: too few terms for a conclusive tail bound");
  Rat first_tail_term = rat_pow(rat_abs(Rat(1) + t0), terms) * Rat(int_pow(Int(terms + 1), n)) *
                        rat_pow(Rat(1, 2), terms + 1 + (corrected ? 1 : -1));
  Rat tail_bound = first_tail_term / (Rat(1) - ratio_bound);

  Rat error = rat_abs(lhs - partial);
  if (error > tail_bound) {
    report.pass = false;
    report.counterexample = "partial sum differs from P_n(t0)/(1-t0)^{n+1} by about " +
                            std::to_string(error.convert_to<double>()) +
                            ", beyond the rigorous tail bound " +
                            std::to_string(tail_bound.convert_to<double>());
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_worpitzky(int n, int r, int k_max, WorpitzkyVariant variant,
                                    const KTables* tables) {
  Timer timer;
  if (n < 1 || r < 0 || k_max < 1)
    throw std::invalid_argument("verify_worpitzky: need n >= 1, r >= 0, k_max >= 1");
  const bool corrected = variant == WorpitzkyVariant::corrected;
  const int shift = corrected ? -2 : 0;

  VerificationReport report;
  report.name = corrected ? "worpitzky(corrected shift -2)" : "worpitzky(printed shift 0)";
  report.ranges = "n=" + std::to_string(n) + ", r=" + std::to_string(r) + ", k=1.." +
                  std::to_string(k_max) + ", plus the classical identity and its delta^r form";

  KTables kt = resolve_tables(tables, n);
  const CountTable& slice = kt.at(n);
  auto a_row = eulerian_row(n);
  auto a_of = [&](int i) { return i < 0 || i >= static_cast<int>(a_row.size()) ? Int(0) : a_row[i]; };

  RatPoly generalized_delta = delta_power(RatPoly::monomial(n), r + 1);
  for (int k = 1; k <= k_max; ++k) {
    Rat lhs = Rat(binomial(k + r - 1, r)) * generalized_delta.eval(Rat(k - 1));
    Rat rhs = 0;
    for (int i = 0; i < k; ++i)
      rhs += Rat(binomial(n + k - i + shift, n - 1) * slice.value({i, r}));
    if (lhs != rhs) {
      report.pass = false;
      report.counterexample = "generalized identity at (n,r,k)=(" + std::to_string(n) + "," +
                              std::to_string(r) + "," + std::to_string(k) + "): left side " +
                              rat_str(lhs) + ", right side " + rat_str(rhs);
      report.elapsed_seconds = timer.seconds();
      return report;
    }
  }

  for (int k = 1; k <= k_max; ++k) {
    Int rhs = 0;
    for (int i = 0; i < k; ++i) rhs += binomial(k + n - i - 1, n) * a_of(i);
    if (int_pow(Int(k), n) != rhs) {
      report.pass = false;
      report.counterexample = "classical identity at (n,k)=(" + std::to_string(n) + "," +
                              std::to_string(k) + ")";
      report.elapsed_seconds = timer.seconds();
      return report;
    }
  }

  // delta^r of the classical identity: the sum runs over the full support of
  // A(n,.) because the shifted binomials no longer vanish above i = k-1.
  RatPoly classical_delta = delta_power(RatPoly::monomial(n), r);
  for (int k = 1; k <= k_max; ++k) {
    Rat rhs = 0;
    for (int i = 0; i < std::max(k, n); ++i)
      rhs += Rat(binomial(k + n - i - 1, n - r) * a_of(i));
    if (classical_delta.eval(Rat(k)) != rhs) {
      report.pass = false;
      report.counterexample = "delta^r classical identity at (n,r,k)=(" + std::to_string(n) + "," +
                              std::to_string(r) + "," + std::to_string(k) + ")";
      report.elapsed_seconds = timer.seconds();
      return report;
    }
  }

  report.elapsed_seconds = timer.seconds();
  return report;
}

namespace {

BiPoly restrict_to_q0(const BiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.q == 0) out += BiPoly::monomial(m.t, 0, c);
  return out;
}

BiPoly restrict_to_t0(const BiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.t == 0) out += BiPoly::monomial(0, m.q, c);
  return out;
}

BiPoly substitute_q_one(const BiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) out += BiPoly::monomial(m.t, 0, c);
  return out;
}

}  // namespace

VerificationReport verify_specializations(int n_max, const KTables* tables) {
  Timer timer;
  if (n_max < 1) throw std::invalid_argument("verify_specializations: n_max must be positive");
  VerificationReport report;
  report.name = "specializations";
  report.ranges = "items 1-5 as exact polynomial identities for n <= " + std::to_string(n_max);

  KTables kt = resolve_tables(tables, n_max);
  for (int n = 1; n <= n_max; ++n) {
    BiPoly alpha = alpha_poly_from(kt.at(n));
    auto fail = [&](const std::string& what) {
      report.pass = false;
      report.counterexample = what + " at n=" + std::to_string(n);
    };
    if (restrict_to_q0(alpha) != named_poly(PolyFamily::A, n)) {
      fail("alpha(t,0) != A_n(t)");
    } else if (restrict_to_t0(alpha) != named_poly(PolyFamily::B, n)) {
      fail("alpha(0,q) != B_n(q)");
    } else if (substitute_q_one(alpha) != named_poly(PolyFamily::P, n)) {
      fail("alpha(t,1) != P_n(t)");
    } else if (alpha.eval(Rat(-1), Rat(1)) != Rat(int_pow(2, n - 1))) {
      fail("alpha(-1,1) != 2^{n-1}");
    } else {
      CountTable t = t_table(n, TMethod::recurrence);
      for (int m = 0; m < n && report.pass; ++m) {
        Int diagonal = 0;
        for (int i = 0; i <= m; ++i) diagonal += kt.at(n).value({i, m - i});
        if (diagonal != t.value({n - 1 - m}))
          fail("[t^" + std::to_string(m) + "] alpha(t,t) != T(n,n-1-m)");
      }
    }
    if (!report.pass) break;
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_recurrences_and_symmetries(int n_max, const KTables* tables) {
  Timer timer;
  if (n_max < 2)
    throw std::invalid_argument("verify_recurrences_and_symmetries: n_max must be at least 2");
  VerificationReport report;
  report.name = "recurrences-and-symmetries";
  report.ranges = "differential recurrence, slice symmetry, mirror counts, Stirling expansion, "
                  "first column and divisibility for n <= " + std::to_string(n_max);

  KTables kt = resolve_tables(tables, n_max);
  auto fail = [&](const std::string& what) {
    report.pass = false;
    report.counterexample = what;
  };

  BiPoly t = BiPoly::var_t(), q = BiPoly::var_q(), one = BiPoly::constant(1);
  std::vector<BiPoly> alphas = alpha_family(kt, n_max);

  // alpha_n = ((n-2)tq + (n-1)t + 2q + 1) alpha_{n-1}
  //         + (t - t^2)(q+1) d/dt alpha_{n-1} + (1-t)(q^2+q) d/dq alpha_{n-1}
  for (int n = 2; n <= n_max && report.pass; ++n) {
    BiPoly factor = BiPoly::monomial(1, 1, n - 2) + BiPoly::monomial(1, 0, n - 1) +
                    BiPoly::monomial(0, 1, 2) + one;
    BiPoly rhs = factor * alphas[n - 1] +
                 (t - t * t) * (q + one) * alphas[n - 1].derivative_t() +
                 (one - t) * (q * q + q) * alphas[n - 1].derivative_q();
    if (rhs != alphas[n]) fail("differential recurrence fails at n=" + std::to_string(n));
  }

  for (int n = 1; n <= n_max && report.pass; ++n) {
    const CountTable& slice = kt.at(n);
    for (int i = 0; i < n && report.pass; ++i)
      for (int j = 0; i + j < n && report.pass; ++j) {
        if (slice.value({i, j}) != slice.value({n - 1 - i - j, j}))
          fail("slice symmetry fails at (n,i,j)=(" + std::to_string(n) + "," + std::to_string(i) +
               "," + std::to_string(j) + ")");
      }
  }

  for (int n = 1; n <= std::min(n_max, 8) && report.pass; ++n) {
    std::vector<long long> by_m(n, 0);
    const std::uint32_t bar_limit = 1u << (n - 1);
    for_each_word_descmask(n, [&](const std::vector<int>&, std::uint32_t descmask) {
      for (std::uint32_t bars = 0; bars < bar_limit; ++bars)
        ++by_m[std::popcount(descmask & ~bars) + std::popcount(bars)];
    });
    CountTable trow = t_table(n, TMethod::recurrence);
    for (int m = 0; m < n && report.pass; ++m)
      if (trow.value({n - m - 1}) != Int(by_m[m]))
        fail("mirror count fails at (n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")");
  }

  // alpha_n = sum_{i+j<=n-1} t^i (q-t)^j (1-t)^{n-i-j-1} 2^i (i+j+1)!
  //           binom(i+j,j) S(n,i+j+1)
  for (int n = 1; n <= n_max && report.pass; ++n) {
    BiPoly rhs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + j < n; ++j) {
        Int scalar = int_pow(2, i) * factorial(i + j + 1) * binomial(i + j, j) *
                     stirling2(n, i + j + 1);
        rhs += t.pow(i) * (q - t).pow(j) * (one - t).pow(n - i - j - 1) *
               BiPoly::constant(scalar);
      }
    if (rhs != alphas[n]) fail("Stirling expansion fails at n=" + std::to_string(n));
  }

  for (int n = 1; n <= n_max && report.pass; ++n) {
    const CountTable& slice = kt.at(n);
    for (int j = 0; j < n && report.pass; ++j) {
      if (slice.value({0, j}) != factorial(j + 1) * stirling2(n, j + 1))
        fail("first column fails at (n,j)=(" + std::to_string(n) + "," + std::to_string(j) + ")");
      for (int i = 0; i + j < n && report.pass; ++i) {
        if (slice.value({i, j}) % factorial(j + 1) != 0)
          fail("(j+1)! divisibility fails at (n,i,j)=(" + std::to_string(n) + "," +
               std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  report.elapsed_seconds = timer.seconds();
  return report;
}

namespace {

bool is_unimodal(const std::vector<Int>& values) {
  std::size_t p = 0;
  while (p + 1 < values.size() && values[p] <= values[p + 1]) ++p;
  while (p + 1 < values.size() && values[p] >= values[p + 1]) ++p;
  return p + 1 >= values.size();
}

}  // namespace

VerificationReport unimodality_scan(int n_max) {
  Timer timer;
  if (n_max < 1) throw std::invalid_argument("unimodality_scan: n_max must be positive");
  VerificationReport report;
  report.name = "unimodality";
  report.ranges = "rows and columns of the T triangle and of every K slice up to n=" +
                  std::to_string(n_max);

  auto fail = [&](const std::string& what) {
    report.pass = false;
    report.counterexample = what;
  };

  std::vector<CountTable> t_rows = t_tables_up_to(n_max, TMethod::recurrence);
  for (int n = 0; n <= n_max && report.pass; ++n) {
    std::vector<Int> row;
    for (int k = 0; k < std::max(n, 1); ++k) row.push_back(t_rows[n].value({k}));
    if (!is_unimodal(row)) fail("T row n=" + std::to_string(n) + " is not unimodal");
  }
  for (int k = 0; k <= n_max - 1 && report.pass; ++k) {
    std::vector<Int> column;
    for (int n = 0; n <= n_max; ++n)
      if ((n == 0 && k == 0) || k < n) column.push_back(t_rows[n].value({k}));
    if (!is_unimodal(column)) fail("T column k=" + std::to_string(k) + " is not unimodal");
  }

  std::vector<CountTable> slices = k_tables_up_to(n_max);
  for (const auto& slice : slices) {
    if (!report.pass) break;
    int n = slice.n;
    for (int j = 0; j < n && report.pass; ++j) {
      std::vector<Int> row;
      for (int i = 0; i + j < n; ++i) row.push_back(slice.value({i, j}));
      if (!is_unimodal(row))
        fail("K row (n,j)=(" + std::to_string(n) + "," + std::to_string(j) + ") is not unimodal");
    }
    for (int i = 0; i < n && report.pass; ++i) {
      std::vector<Int> column;
      for (int j = 0; i + j < n; ++j) column.push_back(slice.value({i, j}));
      if (!is_unimodal(column))
        fail("K column (n,i)=(" + std::to_string(n) + "," + std::to_string(i) +
             ") is not unimodal");
    }
  }

  report.elapsed_seconds = timer.seconds();
  return report;
}

}  // namespace segeuler
