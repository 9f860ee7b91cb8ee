#include <doctest.h>

#include <random>

#include "segeuler/bipoly.hpp"
#include "segeuler/eulerian_polys.hpp"
#include "segeuler/ratpoly.hpp"
#include "segeuler/series.hpp"

using namespace segeuler;

namespace {

BiPoly random_bipoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3), coeff(-5, 5), terms(1, 5);
  BiPoly p;
  for (int k = terms(rng); k > 0; --k) p += BiPoly::monomial(deg(rng), deg(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("BiPoly ring laws hold on random samples") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 50; ++round) {
    BiPoly a = random_bipoly(rng), b = random_bipoly(rng), c = random_bipoly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == BiPoly());
  }
}

TEST_CASE("BiPoly canonical text and JSON") {
  BiPoly alpha3 = BiPoly::constant(1) + BiPoly::monomial(1, 0, 4) + BiPoly::monomial(2, 0) +
                  BiPoly::monomial(0, 1, 6) + BiPoly::monomial(1, 1, 6) + BiPoly::monomial(0, 2, 6);
  CHECK(alpha3.str() == "1 + 4*t + t^2 + 6*q + 6*t*q + 6*q^2");
  CHECK(BiPoly().str() == "0");
  CHECK((BiPoly::monomial(1, 0) - BiPoly::monomial(2, 0)).str() == "t - t^2");
  CHECK((BiPoly::monomial(0, 1) - BiPoly::monomial(1, 0)).str() == "-t + q");
  CHECK(BiPoly::monomial(1, 1, -3).str() == "-3*t*q");
  CHECK(alpha3.json().find("\"1,1\":\"6\"") != std::string::npos);
  CHECK(alpha3 == alpha_poly(3));
}

TEST_CASE("BiPoly evaluation and derivatives") {
  BiPoly p = alpha_poly(3);
  CHECK(p.eval(Rat(1), Rat(1)) == 24);
  CHECK(p.eval(Rat(1, 2), Rat(1, 3)) == Rat(83, 12));
  CHECK(p.derivative_t() == BiPoly::constant(4) + BiPoly::monomial(1, 0, 2) + BiPoly::monomial(0, 1, 6));
  CHECK(p.derivative_q() == BiPoly::constant(6) + BiPoly::monomial(1, 0, 6) + BiPoly::monomial(0, 1, 12));
  CHECK(p.deg_t() == 2);
  CHECK(p.deg_q() == 2);
}

TEST_CASE("discrete derivative") {
  CHECK(delta(RatPoly::monomial(2)) == RatPoly({Rat(1), Rat(2)}));
  CHECK(delta_power(RatPoly::monomial(3), 2) == RatPoly({Rat(6), Rat(6)}));
  for (int n = 1; n <= 6; ++n) {
    RatPoly p = RatPoly::monomial(n);
    for (int r = 1; r <= n; ++r) {
      p = delta(p);
      CHECK(p.degree() == n - r);
    }
    CHECK(p == RatPoly::constant(Rat(factorial(n))));
  }
  CHECK(delta_power(RatPoly::monomial(2), 0) == RatPoly::monomial(2));
  CHECK(RatPoly({Rat(1), Rat(2)}).str() == "1 + 2*X");
}

TEST_CASE("truncated series basics") {
  TruncSeries e = TruncSeries::exp(TruncSeries::x(4));
  CHECK(e.coeff(0) == 1);
  CHECK(e.coeff(1) == 1);
  CHECK(e.coeff(2) == Rat(1, 2));
  CHECK(e.coeff(3) == Rat(1, 6));
  CHECK(e.coeff(4) == Rat(1, 24));

  TruncSeries geom = (TruncSeries::constant(1, 3) - TruncSeries::x(3)).reciprocal();
  for (int d = 0; d <= 3; ++d) CHECK(geom.coeff(d) == 1);

  CHECK_THROWS_AS(TruncSeries::exp(TruncSeries::constant(1, 3)), std::domain_error);
  CHECK_THROWS_AS(TruncSeries::x(3).reciprocal(), std::domain_error);
}

TEST_CASE("series times reciprocal is one") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  for (int round = 0; round < 20; ++round) {
    TruncSeries s(6);
    s.set_coeff(0, Rat(1 + (round % 3)));
    for (int d = 1; d <= 6; ++d) s.set_coeff(d, Rat(num(rng), den(rng)));
    TruncSeries product = s * s.reciprocal();
    CHECK(product == TruncSeries::constant(1, 6));
  }
}

TEST_CASE("powers of exp(x/2) - 1 follow the Stirling EGF") {
  const int order = 8;
  TruncSeries half_exp =
      TruncSeries::exp(TruncSeries::x(order).scaled(Rat(1, 2))) - TruncSeries::constant(1, order);
  TruncSeries squared = half_exp * half_exp;
  CHECK(squared.coeff(3) == Rat(1, 8));
  // [x^n] (e^{x/2}-1)^u = S(n,u) u! / (2^n n!)
  TruncSeries power = TruncSeries::constant(1, order);
  for (int u = 1; u <= 4; ++u) {
    power *= half_exp;
    for (int n = 0; n <= order; ++n)
      CHECK(power.coeff(n) ==
            Rat(stirling2(n, u) * factorial(u), int_pow(2, n) * factorial(n)));
  }
}

TEST_CASE("alpha polynomials") {
  CHECK(alpha_poly(0) == BiPoly::constant(1));
  CHECK(alpha_poly(1) == BiPoly::constant(1));
  CHECK(alpha_poly(2).str() == "1 + t + 2*q");
  CHECK(alpha_poly(3).str() == "1 + 4*t + t^2 + 6*q + 6*t*q + 6*q^2");
  for (int n = 1; n <= 6; ++n)
    CHECK(alpha_poly(n).eval(Rat(1), Rat(1)) == Rat(int_pow(2, n - 1) * factorial(n)));
}

TEST_CASE("named polynomials") {
  CHECK(named_poly(PolyFamily::P, 3).str() == "13 + 10*t + t^2");
  CHECK(named_poly(PolyFamily::B, 3).str() == "1 + 6*q + 6*q^2");
  CHECK(named_poly(PolyFamily::A, 3).str() == "1 + 4*t + t^2");
  CHECK(named_poly(PolyFamily::A, 0) == BiPoly::constant(1));
  CHECK(named_poly(PolyFamily::B, 0) == BiPoly::constant(1));
  CHECK(named_poly(PolyFamily::P, 0) == BiPoly::constant(1));
}

TEST_CASE("generating function expansion") {
  auto ones = gf_alpha(Rat(0), Rat(0), 5);
  for (const Rat& v : ones) CHECK(v == 1);

  CHECK(gf_alpha(Rat(1, 2), Rat(1, 3), 3)[3] == Rat(83, 12));
  CHECK(gf_alpha(Rat(2), Rat(0), 4)[4] == 75);
  CHECK(gf_alpha(Rat(2), Rat(0), 4)[4] == Rat(ordered_bell(4)));

  CHECK_THROWS_AS(gf_alpha(Rat(1), Rat(0), 3), std::domain_error);

  // series coefficients match the table polynomials on a small grid
  for (int tn = -2; tn <= 2; ++tn) {
    for (int qn = -2; qn <= 2; ++qn) {
      Rat t0(tn, 3), q0(qn, 2);
      auto values = gf_alpha(t0, q0, 6);
      for (int n = 0; n <= 6; ++n) CHECK(values[n] == alpha_poly(n).eval(t0, q0));
    }
  }
}
