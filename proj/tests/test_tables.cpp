#include <doctest.h>

#include <vector>

#include "segeuler/segperm.hpp"
#include "segeuler/tables.hpp"

using namespace segeuler;

namespace {

// brute-force count of partitions of an n-set into exactly k blocks, via
// restricted-growth strings
long stirling2_brute(int n, int k) {
  std::vector<int> label(n, 0);
  long count = 0;
  while (true) {
    int blocks = 0;
    for (int v : label) blocks = std::max(blocks, v + 1);
    if (blocks == k) ++count;
    // next restricted-growth string
    int p = n - 1;
    for (; p >= 1; --p) {
      int maxprev = 0;
      for (int q = 0; q < p; ++q) maxprev = std::max(maxprev, label[q]);
      if (label[p] <= maxprev) {
        ++label[p];
        for (int q = p + 1; q < n; ++q) label[q] = 0;
        break;
      }
      label[p] = 0;
    }
    if (p <= 0) break;
  }
  return count;
}

Int two_pow_n_factorial(int n) { return int_pow(2, n - 1) * factorial(n); }

}  // namespace

TEST_CASE("classical Eulerian numbers") {
  CHECK(eulerian(4, 1) == 11);
  CHECK(eulerian(6, 2) == 302);
  for (int n = 1; n <= 9; ++n) CHECK(eulerian(n, 0) == 1);
  CHECK(eulerian(3, 3) == 0);
  CHECK(eulerian(3, -1) == 0);
  CHECK(eulerian_row(6) == std::vector<Int>{1, 57, 302, 302, 57, 1});
}

TEST_CASE("Stirling numbers of the second kind") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(Int(stirling2_brute(4, 2)) == stirling2(4, 2));
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_brute(n, k));
  for (int n = 0; n <= 8; ++n) CHECK(stirling2(n, n) == 1);
  CHECK(factorial(2) * stirling2(4, 2) == 14);
  CHECK(k_table(4, KMethod::recurrence_n).value({0, 1}) == 14);
}

TEST_CASE("ordered Bell numbers") {
  std::vector<Int> expected{1, 1, 3, 13, 75, 541, 4683};
  for (int n = 0; n <= 6; ++n) CHECK(ordered_bell(n) == expected[n]);
  CHECK(ordered_bell(7) == 47293);

  // A_2(2) = 1 + 2
  Int a2_at_2 = 0;
  auto row = eulerian_row(2);
  Int p = 1;
  for (const Int& c : row) {
    a2_at_2 += c * p;
    p *= 2;
  }
  CHECK(a2_at_2 == ordered_bell(2));

  // cross-check by enumeration: segmented permutations of size 7 without descents
  long long descfree = 0;
  for_each_word_descmask(7, [&](const std::vector<int>&, std::uint32_t descmask) {
    // a bar set avoiding no descent position: bars must cover descmask
    int free_positions = 6 - std::popcount(descmask);
    descfree += 1LL << free_positions;
  });
  CHECK(Int(descfree) == ordered_bell(7));
}

TEST_CASE("K slices match the n=2,3,4 reference values") {
  for (auto method :
       {KMethod::enumerate, KMethod::recurrence_n, KMethod::recurrence_j, KMethod::closed_form}) {
    CAPTURE(method_name(method));
    auto k2 = k_table(2, method);
    CHECK(k2.value({0, 0}) == 1);
    CHECK(k2.value({1, 0}) == 1);
    CHECK(k2.value({0, 1}) == 2);

    auto k3 = k_table(3, method);
    CHECK(k3.value({0, 0}) == 1);
    CHECK(k3.value({1, 0}) == 4);
    CHECK(k3.value({2, 0}) == 1);
    CHECK(k3.value({0, 1}) == 6);
    CHECK(k3.value({1, 1}) == 6);
    CHECK(k3.value({0, 2}) == 6);

    auto k4 = k_table(4, method);
    CHECK(k4.value({0, 0}) == 1);
    CHECK(k4.value({1, 0}) == 11);
    CHECK(k4.value({2, 0}) == 11);
    CHECK(k4.value({3, 0}) == 1);
    CHECK(k4.value({0, 1}) == 14);
    CHECK(k4.value({1, 1}) == 44);
    CHECK(k4.value({2, 1}) == 14);
    CHECK(k4.value({0, 2}) == 36);
    CHECK(k4.value({1, 2}) == 36);
    CHECK(k4.value({0, 3}) == 24);
    CHECK(k4.value({2, 2}) == 0);
  }
}

TEST_CASE("recurrence_j seed and closed form spot checks") {
  auto k3 = k_table(3, KMethod::recurrence_j);
  CHECK(1 * k3.value({0, 1}) == 2 * k3.value({0, 0}) + 1 * k3.value({1, 0}));
  CHECK(k3.value({0, 1}) == 6);
  CHECK(binomial(1, 1) * binomial(1, 1) * eulerian(3, 1) +
            binomial(2, 1) * binomial(0, 0) * eulerian(3, 2) ==
        k_table(3, KMethod::closed_form).value({1, 1}));
}

TEST_CASE("the four K methods agree for n <= 9; the three exact ones to 14") {
  for (int n = 1; n <= 9; ++n) {
    auto oracle = k_table(n, KMethod::enumerate);
    CHECK(k_table(n, KMethod::recurrence_n).entries == oracle.entries);
    CHECK(k_table(n, KMethod::recurrence_j).entries == oracle.entries);
    CHECK(k_table(n, KMethod::closed_form).entries == oracle.entries);
  }
  for (int n = 10; n <= 14; ++n) {
    auto base = k_table(n, KMethod::recurrence_n);
    CHECK(k_table(n, KMethod::recurrence_j).entries == base.entries);
    CHECK(k_table(n, KMethod::closed_form).entries == base.entries);
  }
}

TEST_CASE("K slice structure: sums, symmetry, divisibility, first column") {
  auto slices = k_tables_up_to(12);
  for (const auto& slice : slices) {
    int n = slice.n;
    Int sum = 0;
    for (const auto& [index, v] : slice.entries) {
      CHECK(v >= 0);
      sum += v;
    }
    CHECK(sum == two_pow_n_factorial(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) {
        CHECK(slice.value({i, j}) == slice.value({n - 1 - i - j, j}));
        Int q, r;
        boost::multiprecision::divide_qr(slice.value({i, j}), factorial(j + 1), q, r);
        CHECK(r == 0);
      }
    }
    for (int j = 0; j < n; ++j)
      CHECK(slice.value({0, j}) == factorial(j + 1) * stirling2(n, j + 1));
  }
}

TEST_CASE("T triangle values and recurrences") {
  auto t6 = t_table(6, TMethod::recurrence);
  CHECK(t6.value({0}) == 4683);
  CHECK(t6.value({1}) == 9829);
  CHECK(t6.value({2}) == 6734);
  CHECK(t6.value({3}) == 1674);
  CHECK(t6.value({4}) == 119);
  CHECK(t6.value({5}) == 1);

  auto t2 = t_table(2, TMethod::recurrence);
  auto t3 = t_table(3, TMethod::recurrence);
  CHECK(t3.value({1}) == 2 * t2.value({0}) + 4 * t2.value({1}) + 2 * t2.value({2}));
  CHECK(t3.value({1}) == 10);

  auto k4 = k_table(4, KMethod::recurrence_n);
  CHECK(t_table(4, TMethod::sum).value({1}) ==
        k4.value({1, 0}) + k4.value({1, 1}) + k4.value({1, 2}));
  CHECK(t_table(4, TMethod::sum).value({1}) == 91);

  CHECK(t_table(0, TMethod::recurrence).value({0}) == 1);

  for (int n = 0; n <= 10; ++n) {
    auto sum = t_table(n, TMethod::sum);
    auto rec = t_table(n, TMethod::recurrence);
    CHECK(sum.entries == rec.entries);
    Int total = 0;
    for (const auto& [index, v] : rec.entries) total += v;
    CHECK(total == (n == 0 ? Int(1) : two_pow_n_factorial(n)));
    CHECK(rec.value({0}) == ordered_bell(n));
  }
}

TEST_CASE("T rows read backwards count descents plus bars") {
  for (int n = 1; n <= 7; ++n) {
    auto t = t_table(n, TMethod::recurrence);
    std::vector<long long> by_m(n, 0);
    for_each_word_descmask(n, [&](const std::vector<int>&, std::uint32_t descmask) {
      for (std::uint32_t bars = 0; bars < (1u << (n - 1)); ++bars)
        ++by_m[std::popcount(descmask & ~bars) + std::popcount(bars)];
    });
    for (int m = 0; m < n; ++m) CHECK(t.value({n - m - 1}) == Int(by_m[m]));
  }
}

TEST_CASE("enumeration beyond the cap names the flag") {
  try {
    k_table(10, KMethod::enumerate, 9);
    FAIL("expected a domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("--oracle-cap") != std::string::npos);
  }
  CHECK(k_table(4, KMethod::enumerate, 4).value({1, 1}) == 44);
}

TEST_CASE("table exports") {
  auto rows = t_tables_up_to(3, TMethod::recurrence);
  auto json = tables_json(rows);
  CHECK(json.find("\"3,1\":\"10\"") != std::string::npos);
  CHECK(json.find("\"0,0\":\"1\"") != std::string::npos);

  auto slices = k_tables_up_to(3);
  CHECK(tables_json(slices).find("\"3,0,1\":\"6\"") != std::string::npos);
  CHECK(tables_csv(slices).find("3,1,1,6\n") != std::string::npos);
  CHECK(tables_csv(rows).rfind("n,k,value\n", 0) == 0);

  auto latex = t_latex(t_tables_up_to(6, TMethod::recurrence));
  CHECK(latex.find("6 & 4683 & 9829 & 6734 & 1674 & 119 & 1") != std::string::npos);
  CHECK(k_latex(slices).find("n=3:") != std::string::npos);

  std::vector<std::pair<long long, Int>> bell;
  for (int n = 0; n <= 3; ++n) bell.emplace_back(n, ordered_bell(n));
  CHECK(bfile(bell) == "0 1\n1 1\n2 3\n3 13\n");
}

TEST_CASE("KTables perturbation") {
  auto kt = KTables::build(5);
  CHECK(kt.at(4).value({1, 1}) == 44);
  kt.perturb(4, 1, 1, 1);
  CHECK(kt.at(4).value({1, 1}) == 45);
  CHECK(kt.at(4).method.find("perturbed") != std::string::npos);
}
