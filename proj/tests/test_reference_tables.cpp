#include "fewdist/reference_tables.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>
#include <tuple>

using namespace fewdist;

namespace {

const ClosedFormRow* find_row(const AppendixReport& r, const std::vector<int>& d, int n) {
  for (const auto& row : r.rows)
    if (row.distances == d && row.n == n) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("closed-form blocks") {
  auto blocks = closed_form_blocks();
  CHECK(blocks.size() == 10);
  CHECK(blocks.front() == std::pair{4, 2});
  CHECK(closed_form_entries().size() == 62);
  CHECK_THROWS_AS(appendix_check(3, 2, 30), InvalidArgument);
}

TEST_CASE("every tabulated bound is reproduced up to n = 60") {
  for (auto [w, s] : closed_form_blocks()) {
    auto rep = appendix_check(w, s, 60);
    CAPTURE(w);
    CAPTURE(s);
    CHECK(rep.all_ok);
    for (const auto& row : rep.rows) {
      CHECK(row.conditions_met);
      REQUIRE(row.computed.has_value());
      CHECK(*row.computed == row.expected);
    }
  }
}

TEST_CASE("spot values") {
  // Values worked out by hand from the products of linear factors.
  struct Spot {
    int w, s;
    std::vector<int> d;
    int n;
    Rational value;
  };
  for (const auto& sp : {Spot{4, 2, {1, 2}, 10, Rational(28)}, Spot{4, 3, {1, 2, 3}, 11, Rational(120)},
                         Spot{5, 4, {2, 3, 4, 5}, 9, make_rational(126, 5)}, Spot{6, 2, {5, 6}, 30, Rational(29)},
                         Spot{7, 4, {1, 2, 3, 4}, 20, Rational(oracle::choose(17, 4))}}) {
    auto rep = appendix_check(sp.w, sp.s, sp.n);
    const auto* row = find_row(rep, sp.d, sp.n);
    REQUIRE(row != nullptr);
    CHECK(row->ok);
    CHECK(*row->computed == sp.value);
  }
}

TEST_CASE("conditions one step below the stated thresholds") {
  auto a = appendix_check(4, 2, 9);
  bool seen = false;
  for (const auto& b : a.below)
    if (b.distances == std::vector<int>{1, 2}) {
      seen = true;
      CHECK(b.n == 8);
      CHECK_FALSE(b.conditions_met);
    }
  CHECK(seen);

  // Thresholds that are conservative: the sign conditions already hold one step earlier.
  std::set<std::tuple<int, int, int>> early;
  for (auto [w, s] : closed_form_blocks())
    for (const auto& b : appendix_check(w, s, 60).below)
      if (b.conditions_met) early.insert({w, s, b.n});
  CHECK(early == std::set<std::tuple<int, int, int>>{{6, 2, 26}, {6, 2, 34}, {6, 3, 14}, {7, 3, 19}, {7, 4, 22}});
}

TEST_CASE("table of exact johnson values") {
  auto rows = table1_check(46);
  CHECK(rows.size() > 200);
  for (const auto& r : rows) {
    CAPTURE(r.w);
    CAPTURE(r.s);
    CAPTURE(r.n);
    CHECK(r.pass);
    CHECK(r.expected == oracle::choose(r.n - r.w + r.s, r.s));
    CHECK(r.lower == r.expected);
    CHECK(r.upper == r.expected);
  }
}

TEST_CASE("two-distance hamming values over a range") {
  auto rows = thm11_check(6, 60);
  CHECK(rows.size() == 55);
  for (const auto& r : rows) {
    CHECK(r.exact);
    CHECK(r.value == 1 + oracle::choose(r.n, 2));
    CHECK(r.upper == r.value);
  }
  CHECK_THROWS_AS(thm11_check(5, 10), InvalidArgument);
  CHECK_THROWS_AS(thm11_check(10, 9), InvalidArgument);
}
