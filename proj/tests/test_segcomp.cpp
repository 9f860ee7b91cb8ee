#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "segeuler/segcomp.hpp"

using segeuler::ConcatMode;
using segeuler::SegmentedComposition;
using segeuler::Sep;

namespace {

long pow3(int e) {
  long r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

}  // namespace

TEST_CASE("codec round-trips the worked composition") {
  auto c = SegmentedComposition::parse("2,1|2|3,1");
  CHECK(c.parts() == std::vector<int>{2, 1, 2, 3, 1});
  CHECK(c.seps() == std::vector<Sep>{Sep::comma, Sep::bar, Sep::bar, Sep::comma});
  CHECK(c.n() == 9);
  CHECK(c.str() == "2,1|2|3,1");
  CHECK(SegmentedComposition::parse(" 2 , 1|2| 3,1 ").str() == "2,1|2|3,1");
}

TEST_CASE("codec handles the single-part composition") {
  auto c = SegmentedComposition::parse("4");
  CHECK(c.parts() == std::vector<int>{4});
  CHECK(c.seps().empty());
  CHECK(c.str() == "4");
}

TEST_CASE("codec rejects malformed text") {
  CHECK_THROWS_AS(SegmentedComposition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SegmentedComposition::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(SegmentedComposition::parse("1|"), std::invalid_argument);
  CHECK_THROWS_AS(SegmentedComposition::parse("|1"), std::invalid_argument);
  CHECK_THROWS_AS(SegmentedComposition::parse("0,2"), std::invalid_argument);
  CHECK_THROWS_AS(SegmentedComposition::parse("2;3"), std::invalid_argument);
}

TEST_CASE("descent and bar sets") {
  auto [des, bar] = SegmentedComposition::parse("2,1|2|3,1").descent_bar_sets();
  CHECK(des == std::vector<int>{2, 8});
  CHECK(bar == std::vector<int>{3, 5});

  auto [des1, bar1] = SegmentedComposition::single(7).descent_bar_sets();
  CHECK(des1.empty());
  CHECK(bar1.empty());

  auto [des2, bar2] = SegmentedComposition::parse("1|1,3|2").descent_bar_sets();
  CHECK(des2 == std::vector<int>{2});
  CHECK(bar2 == std::vector<int>{1, 5});
}

TEST_CASE("from_sets inverts the set map") {
  CHECK(SegmentedComposition::from_sets(7, {2}, {1, 5}).str() == "1|1,3|2");
  CHECK(SegmentedComposition::from_sets(5, {}, {}).str() == "5");
  CHECK(SegmentedComposition::from_sets(3, {1, 2}, {}).str() == "1,1,1");
  CHECK_THROWS_AS(SegmentedComposition::from_sets(4, {2}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(SegmentedComposition::from_sets(4, {4}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SegmentedComposition::from_sets(4, {}, {0}), std::invalid_argument);
}

TEST_CASE("from_sets round-trips every composition of n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : SegmentedComposition::all(n)) {
      auto [des, bar] = c.descent_bar_sets();
      CHECK(SegmentedComposition::from_sets(n, des, bar) == c);
      CHECK(static_cast<int>(des.size()) == c.des() - 1);
      CHECK(static_cast<int>(bar.size()) == c.seg());
    }
  }
}

TEST_CASE("the three concatenations") {
  auto i = SegmentedComposition::parse("2,1|1");
  auto k = SegmentedComposition::parse("1|1,5");
  CHECK(i.concat(k, ConcatMode::comma).str() == "2,1|1,1|1,5");
  CHECK(i.concat(k, ConcatMode::join).str() == "2,1|2|1,5");
  CHECK(i.concat(k, ConcatMode::bar).str() == "2,1|1|1|1,5");
  for (auto mode : {ConcatMode::comma, ConcatMode::bar, ConcatMode::join})
    CHECK(i.concat(k, mode).n() == i.n() + k.n());
}

TEST_CASE("reverse refinement order") {
  auto finer = SegmentedComposition::parse("2,1,3|2,2|1,2,1");
  auto coarser = SegmentedComposition::parse("2,4|2,2|1|3");
  CHECK(finer.finer_than(coarser));
  CHECK_FALSE(coarser.finer_than(finer));
  CHECK(finer.finer_than(finer));

  CHECK_FALSE(SegmentedComposition::parse("2").finer_than(SegmentedComposition::parse("1|1")));
  CHECK(SegmentedComposition::parse("1,1").finer_than(SegmentedComposition::parse("2")));
  // different n is simply incomparable
  CHECK_FALSE(SegmentedComposition::parse("2").finer_than(SegmentedComposition::parse("3")));
}

TEST_CASE("finer_than is a partial order on compositions of n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto cs = SegmentedComposition::all(n);
    for (std::size_t a = 0; a < cs.size(); ++a) {
      CHECK(cs[a].finer_than(cs[a]));
      for (std::size_t b = 0; b < cs.size(); ++b) {
        if (a != b && cs[a].finer_than(cs[b])) CHECK_FALSE(cs[b].finer_than(cs[a]));
      }
    }
    for (const auto& a : cs)
      for (const auto& b : cs) {
        if (!a.finer_than(b)) continue;
        for (const auto& c : cs)
          if (b.finer_than(c)) CHECK(a.finer_than(c));
      }
  }
}

TEST_CASE("enumeration yields each composition once, 3^(n-1) in total") {
  CHECK(SegmentedComposition::all(0).empty());
  CHECK(SegmentedComposition::all(1).size() == 1);
  CHECK(SegmentedComposition::all(1).front().str() == "1");

  auto two = SegmentedComposition::all(2);
  std::set<std::string> texts;
  for (const auto& c : two) texts.insert(c.str());
  CHECK(texts == std::set<std::string>{"2", "1,1", "1|1"});

  for (int n = 1; n <= 7; ++n) {
    auto cs = SegmentedComposition::all(n);
    CHECK(static_cast<long>(cs.size()) == pow3(n - 1));
    std::set<std::string> seen;
    for (const auto& c : cs) {
      CHECK(c.n() == n);
      seen.insert(c.str());
    }
    CHECK(seen.size() == cs.size());
  }
}
