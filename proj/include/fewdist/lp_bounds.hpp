#pragma once

#include "fewdist/classic_bounds.hpp"
#include "fewdist/numerics.hpp"
#include "fewdist/orthopoly.hpp"

#include <optional>
#include <vector>

namespace fewdist {

// The Delsarte program for (space, D): variables f_j >= 0, one constraint per
// degree k. The bound is 1 + optimum.
LPProblem delsarte_program(const SpaceSpec& space, const DistanceSet& d);

struct DelsarteResult {
  LPResult lp;
  BoundResult bound;
};

DelsarteResult delsarte_lp(const SpaceSpec& space, const DistanceSet& d);

struct LrsEntry {
  std::vector<int> distances;
  std::vector<Rational> k_values;
  bool admissible = false;
};

struct LRSReport {
  Integer n_value;  // binom(n, s-1)
  Integer radius;
  Integer fallback_bound;  // 2N - 1
  std::vector<LrsEntry> sets;

  std::vector<std::vector<int>> admissible() const;
};

std::vector<Rational> lrs_k_values(const std::vector<int>& d);
Integer lrs_radius(const Integer& n_value);
LRSReport lrs_filter(int n, int w, int s);

struct DetBoundCertificate {
  std::vector<int> degrees;
  std::vector<Rational> e_values;  // E_1 .. E_{s+1}
  bool conditions_met = false;
  std::optional<Rational> bound;
};

std::vector<int> default_degrees(int w, const std::vector<int>& d);
DetBoundCertificate det_bound_2(int n, int w, int d1, int d2, int k1, int k2);
DetBoundCertificate det_bound_s(int n, int w, const std::vector<int>& d, std::vector<int> degrees = {});

// Wraps a certificate as a BoundResult (not applicable when the sign conditions fail).
BoundResult det_bound_result(const DetBoundCertificate& c);

Rational asymptotic_constant(int w, int d1, int d2);

struct SetReport {
  std::vector<int> distances;
  std::vector<BoundResult> bounds;
  std::optional<LrsEntry> lrs;
  Integer best;
  Method best_method = Method::Harmonic;
};

struct Verdict {
  SpaceSpec space;
  int s = 0;
  Integer lower;
  Integer upper;
  bool exact = false;
  std::size_t worst_set = 0;  // index into sets attaining upper
  std::vector<SetReport> sets;
};

// Every applicable upper bound for one distance set, with the smallest marked.
SetReport set_report(const SpaceSpec& space, const DistanceSet& d);

Verdict exact_value_pipeline(const SpaceSpec& space, int s);
Verdict hamming_2dist_exact(int n);
// Hamming spaces with arbitrary s: LP, harmonic and conditional bounds per set.
Verdict hamming_lp_pipeline(int n, int s);

}  // namespace fewdist
