#include <doctest.h>

#include <string>

#include "segeuler/identities.hpp"

using namespace segeuler;

TEST_CASE("generating-function verification passes and reports ranges") {
  auto report = verify_gf(2, 9, 1);
  CHECK(report.pass);
  CHECK(report.counterexample.empty());
  CHECK(report.ranges.find("n <= 2") != std::string::npos);

  CHECK(verify_gf(5, 36, 42).pass);
  CHECK_THROWS_AS(verify_gf(5, 10, 42), std::invalid_argument);
}

TEST_CASE("generating-function verification detects a perturbed table") {
  auto kt = KTables::build(5);
  kt.perturb(4, 1, 1, 1);  // 44 -> 45
  auto report = verify_gf(5, 36, 42, &kt);
  CHECK_FALSE(report.pass);
  CHECK(report.counterexample.find("n=4") != std::string::npos);
}

TEST_CASE("rescaled generating function") {
  CHECK(verify_lemma_gf(2, 9, 7).pass);
  CHECK(verify_lemma_gf(6, 49, 42).pass);

  auto kt = KTables::build(5);
  kt.perturb(3, 1, 1, -1);
  CHECK_FALSE(verify_lemma_gf(5, 36, 42, &kt).pass);
}

TEST_CASE("both generating-function verifiers agree sample for sample") {
  // the two reductions consume the same alpha table, so a shared seed must
  // give the same verdict
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    CHECK(verify_gf(4, 25, seed).pass == verify_lemma_gf(4, 25, seed).pass);
  }
}

TEST_CASE("Dobinski-type series, corrected denominator") {
  // n=2, t0=0: ordered Bell series sum k^2/2^{k+1} = 3
  auto report = verify_dobinski(2, Rat(0), 60);
  CHECK(report.pass);

  CHECK(verify_dobinski(3, Rat(-1, 2), 200).pass);
  CHECK(verify_dobinski(5, Rat(1, 2), 300).pass);
}

TEST_CASE("Dobinski-type series, printed denominator fails at n=1, t0=0") {
  // partial sums approach 4 while P_1(0)/(1-0)^2 = 1
  auto report = verify_dobinski(1, Rat(0), 300, DobinskiVariant::printed);
  CHECK_FALSE(report.pass);
  CHECK_FALSE(report.counterexample.empty());
}

TEST_CASE("Dobinski preconditions") {
  CHECK_THROWS_AS(verify_dobinski(2, Rat(1), 50), std::domain_error);
  CHECK_THROWS_AS(verify_dobinski(2, Rat(3), 50), std::domain_error);
  CHECK_THROWS_AS(verify_dobinski(0, Rat(0), 50), std::invalid_argument);
}

TEST_CASE("Worpitzky, corrected shift") {
  // (n,r,k)=(3,1,2): binom(2,1) delta^2(X^3)|_{X=1} = 2*12 = 24
  //                 = binom(3,2) K(3,0,1) + binom(2,2) K(3,1,1)
  CHECK(verify_worpitzky(3, 1, 2).pass);
  CHECK(verify_worpitzky(2, 0, 6).pass);
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= 3; ++r) CHECK(verify_worpitzky(n, r, 10).pass);
}

TEST_CASE("Worpitzky, printed shift fails at (2,0,1)") {
  auto report = verify_worpitzky(2, 0, 1, WorpitzkyVariant::printed);
  CHECK_FALSE(report.pass);
  CHECK(report.counterexample.find("(2,0,1)") != std::string::npos);
}

TEST_CASE("Worpitzky consumes the injected K tables") {
  auto kt = KTables::build(4);
  kt.perturb(3, 0, 1, 2);
  CHECK_FALSE(verify_worpitzky(3, 1, 4, WorpitzkyVariant::corrected, &kt).pass);
}

TEST_CASE("specializations") {
  CHECK(verify_specializations(10).pass);

  auto kt = KTables::build(4);
  kt.perturb(4, 2, 0, 1);
  auto report = verify_specializations(4, &kt);
  CHECK_FALSE(report.pass);
  CHECK(report.counterexample.find("n=4") != std::string::npos);
}

TEST_CASE("recurrences and symmetries") {
  CHECK(verify_recurrences_and_symmetries(10).pass);

  auto kt = KTables::build(5);
  kt.perturb(5, 0, 2, 6);  // keeps divisibility by (j+1)! but breaks the rest
  CHECK_FALSE(verify_recurrences_and_symmetries(5, &kt).pass);
}

TEST_CASE("unimodality scan") {
  auto report = unimodality_scan(12);
  CHECK(report.pass);
  CHECK(report.ranges.find("n=12") != std::string::npos);
}

TEST_CASE("reports serialize to text and JSON") {
  auto report = verify_gf(2, 9, 3);
  CHECK(report.text().rfind("[PASS]", 0) == 0);
  CHECK(report.json().find("\"status\":\"pass\"") != std::string::npos);
  CHECK(report.json().find("\"elapsed_seconds\":") != std::string::npos);

  auto kt = KTables::build(3);
  kt.perturb(3, 1, 0, 1);
  auto failing = verify_gf(3, 16, 3, &kt);
  CHECK(failing.text().rfind("[FAIL]", 0) == 0);
  CHECK(failing.text().find("counterexample") != std::string::npos);
  CHECK(failing.json().find("\"status\":\"fail\"") != std::string::npos);
}

TEST_CASE("every single-entry perturbation with n <= 5 is caught") {
  for (int n = 1; n <= 5; ++n) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) {
        auto kt = KTables::build(5);
        kt.perturb(n, i, j, 1);
        bool caught = !verify_gf(5, 36, 42, &kt).pass ||
                      !verify_specializations(5, &kt).pass ||
                      !verify_worpitzky(n, j, 8, WorpitzkyVariant::corrected, &kt).pass;
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(caught);
      }
    }
  }
}
