#pragma once

#include "fewdist/numerics.hpp"

#include <string>
#include <vector>

namespace fewdist {

enum class SpaceKind { Hamming, Johnson };

// The ambient metric space: Hamming(n) or Johnson(n, w) with 1 <= w, 2w <= n.
class SpaceSpec {
 public:
  static SpaceSpec hamming(int n);
  static SpaceSpec johnson(int n, int w);

  SpaceKind kind() const { return kind_; }
  bool is_hamming() const { return kind_ == SpaceKind::Hamming; }
  bool is_johnson() const { return kind_ == SpaceKind::Johnson; }
  int n() const { return n_; }
  int w() const { return w_; }
  // Largest possible distance: n for Hamming, w for Johnson.
  int diameter() const { return is_hamming() ? n_ : w_; }

  std::string describe() const;
  bool operator==(const SpaceSpec&) const = default;

 private:
  SpaceSpec(SpaceKind k, int n, int w) : kind_(k), n_(n), w_(w) {}
  SpaceKind kind_;
  int n_;
  int w_;
};

// Strictly increasing list of allowed distances, each in [1, diameter].
class DistanceSet {
 public:
  DistanceSet(const SpaceSpec& space, std::vector<int> distances);

  const std::vector<int>& values() const { return d_; }
  int size() const { return static_cast<int>(d_.size()); }
  int operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }
  bool contains(int d) const;
  std::string describe() const;  // "{1,2}"

 private:
  std::vector<int> d_;
};

// All s-subsets of {1..m} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int m, int s);

Rational krawtchouk(int n, int k, int x);
Rational hahn(int n, int w, int k, int x);
// phi_k for Hamming, psi_k for Johnson.
Rational basis_poly(const SpaceSpec& space, int k, int x);

// f(t) = prod (d_i - t)/d_i.
Rational annihilator_value(const DistanceSet& d, int t);

// Coefficients f_0..f_s of the annihilator in the Krawtchouk/Hahn basis.
struct Expansion {
  std::vector<Rational> coeffs;
};

Expansion annihilator_expansion(const SpaceSpec& space, const DistanceSet& d);
// Hamming only: the weighted inner-product formula over all n+1 points.
Expansion krawtchouk_expansion_by_weights(const SpaceSpec& space, const DistanceSet& d);
// Any space: interpolation on {0, d_1, ..., d_s}.
Expansion expansion_by_interpolation(const SpaceSpec& space, const DistanceSet& d);

// psi_k(x) ~ (A + B/n + C/n^2) / binom(w, x) for large n.
struct HahnAsymptote {
  Rational a;
  Rational b;
  Rational c;

  Rational evaluate(int w, int x, const Rational& n) const;
};

HahnAsymptote hahn_asymptote(int w, int k, int x);

}  // namespace fewdist
