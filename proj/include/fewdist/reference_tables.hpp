#pragma once

// Published exact values and closed-form determinant bounds, with drivers
// that recompute them from scratch.

#include "fewdist/lp_bounds.hpp"
#include "fewdist/numerics.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace fewdist {

struct ClosedFormEntry {
  int w;
  int s;
  std::vector<int> distances;
  int threshold;  // stated smallest n for which the bound holds
  std::function<Rational(const Rational&)> bound;

};

const std::vector<ClosedFormEntry>& closed_form_entries();
// The (w, s) blocks present in the table, in table order.
std::vector<std::pair<int, int>> closed_form_blocks();

struct ClosedFormRow {
  std::vector<int> distances;
  int n = 0;
  bool conditions_met = false;
  std::optional<Rational> computed;
  Rational expected;
  bool ok = false;
};

struct ClosedFormBelow {
  std::vector<int> distances;
  int n = 0;  // threshold - 1
  bool conditions_met = false;
};

struct AppendixReport {
  int w = 0;
  int s = 0;
  std::vector<ClosedFormRow> rows;
  std::vector<ClosedFormBelow> below;
  bool all_ok = true;
};

AppendixReport appendix_check(int w, int s, int n_max);

// A(J(n, w), s) = binom(n - w + s, s) for n >= min_n.
struct Table1Column {
  int w;
  int s;
  int min_n;
};

std::vector<Table1Column> table1_columns();

struct Table1Row {
  int w = 0;
  int s = 0;
  int n = 0;
  Integer expected;
  Integer lower;
  Integer upper;
  bool pass = false;
};

std::vector<Table1Row> table1_check(int n_max);

struct Thm11Row {
  int n = 0;
  Integer value;
  Integer upper;
  bool exact = false;
};

std::vector<Thm11Row> thm11_check(int n_min, int n_max);

}  // namespace fewdist
