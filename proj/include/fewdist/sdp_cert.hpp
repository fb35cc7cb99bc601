#pragma once

// Triple distance distributions of codes and the block-diagonal
// semidefinite certificate built from them. The matrices are emitted
// without the diagonal binomial^{-1/2} scaling, so all entries stay rational.

#include "fewdist/code.hpp"
#include "fewdist/numerics.hpp"
#include "fewdist/orthopoly.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace fewdist {

// Hamming: x(i, j, t) with r fixed to 0.
// Johnson: x(i, j, t, r) where, relative to u, i = |supp u \ supp v|,
// j = |supp u \ supp z|, t = |(u\v) & (u\z)|, r = |(v\u) & (z\u)|.
class TripleDistribution {
 public:
  explicit TripleDistribution(const SpaceSpec& space);

  const SpaceSpec& space() const { return space_; }
  // Largest row index: n (Hamming) or min(w, n-w) (Johnson).
  int max_index() const { return m_; }
  bool valid_index(int i, int j, int t, int r = 0) const;
  // Distance between v and z implied by the index.
  int third_distance(int i, int j, int t, int r = 0) const;

  const Rational& at(int i, int j, int t, int r = 0) const;
  Rational& at(int i, int j, int t, int r = 0);

  template <class Fn>
  void for_each_index(Fn&& fn) const {
    const int rmax = space_.is_hamming() ? 0 : m_;
    for (int i = 0; i <= m_; ++i)
      for (int j = 0; j <= m_; ++j)
        for (int t = 0; t <= std::min(i, j); ++t)
          for (int r = 0; r <= std::min(rmax, std::min(i, j)); ++r)
            if (valid_index(i, j, t, r)) fn(i, j, t, r);
  }

 private:
  std::size_t offset(int i, int j, int t, int r) const;

  SpaceSpec space_;
  int m_;
  int rdim_;
  std::vector<Rational> x_;
};

Integer beta_coeff(int a, int i, int j, int k, int t);

// Normalizer |{(v, z)}| per fixed u for the given index.
Integer orbit_count(const SpaceSpec& space, int i, int j, int t, int r = 0);

TripleDistribution triple_distribution_from_code(const Code& code, const SpaceSpec& space);

struct SdpBlock {
  int k = 0;
  int l = 0;  // Johnson only
  int first_row = 0;
  RatMatrix matrix;
};

std::vector<SdpBlock> build_matrices(const TripleDistribution& x);

struct FeasibilityReport {
  bool ok = true;
  int condition = 0;  // 1-4 linear conditions, 5 for PSD
  std::string violation;
  std::vector<bool> block_psd;
};

FeasibilityReport feasibility_check(const TripleDistribution& x, const DistanceSet& d,
                                    const std::vector<SdpBlock>& blocks);

Rational sdp_objective(const TripleDistribution& x);

std::string distribution_to_json(const TripleDistribution& x);
TripleDistribution distribution_from_json(const std::string& text);

}  // namespace fewdist
