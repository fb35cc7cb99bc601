#pragma once

// Two-distance binary codes viewed as spherical codes, and the equiangular
// line bounds used to control them.

#include "fewdist/numerics.hpp"

#include <optional>
#include <string>

namespace fewdist {

struct SphericalPair {
  Rational alpha;
  Rational beta;

  SphericalPair(Rational a, Rational b);
  // (2 - (alpha + beta)) / (beta - alpha), defined when alpha + beta < 0.
  std::optional<Rational> gamma() const;
};

// Parameters a = (m+1)(2m+1), b = m(2m+1) and the two dimensions they spoil.
struct ExceptionalFamily {
  int m;
  long a() const { return static_cast<long>(m + 1) * (2 * m + 1); }
  long b() const { return static_cast<long>(m) * (2 * m + 1); }
  long n_high() const { return static_cast<long>(2 * m + 1) * (2 * m + 1) - 2; }
  long n_low() const { return static_cast<long>(2 * m + 1) * (2 * m + 1) - 3; }
};

bool is_odd_integer(const Rational& q);

Rational inner_product_of_distance(int n, int d);

// Smallest applicable bound on an equiangular set with angle 1/a in R^n.
Integer equiangular_upper(int n, const Rational& a);

struct LemmaEqu {
  bool exceptional = false;
  Integer bound;       // binom(n-1, 2) when not exceptional
  Integer case_value;  // the bound used by the case that fired
  int case_number = 0;
};

LemmaEqu lemma_equ(const Rational& a, int n);

std::optional<Rational> two_dist_sphere_bound(int n, const Rational& alpha, const Rational& beta);

struct GUpper {
  bool exceptional = false;
  Integer bound;   // valid when not exceptional
  Rational gamma;  // valid when exceptional, or when the equiangular branch ran
  std::string branch;
};

GUpper g_upper(int n, const Rational& alpha, const Rational& beta);

struct Hamming2Upper {
  Integer value;
  std::string branch;
};

Hamming2Upper hamming2_upper(int n, int a, int b);

}  // namespace fewdist
