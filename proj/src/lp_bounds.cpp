#include "fewdist/lp_bounds.hpp"

#include "fewdist/spherical.hpp"
#include "parallel.hpp"

#include <algorithm>

namespace fewdist {

LPProblem delsarte_program(const SpaceSpec& space, const DistanceSet& d) {
  const int s = d.size();
  const int degrees = space.diameter();
  LPProblem p;
  p.objective.assign(static_cast<std::size_t>(s), 1);
  p.constraints = RatMatrix(static_cast<std::size_t>(degrees + 1), static_cast<std::size_t>(s));
  p.rhs.resize(static_cast<std::size_t>(degrees + 1));
  for (int k = 0; k <= degrees; ++k) {
    for (int j = 0; j < s; ++j)
      p.constraints(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = basis_poly(space, k, d[j]);
    p.rhs[static_cast<std::size_t>(k)] = space.is_hamming() ? -Rational(binomial(space.n(), k)) : Rational(-1);
  }
  return p;
}

DelsarteResult delsarte_lp(const SpaceSpec& space, const DistanceSet& d) {
  DelsarteResult r;
  r.lp = lp_maximize(delsarte_program(space, d));
  if (r.lp.status != LPStatus::Optimal) {
    r.bound = BoundResult::not_applicable(Method::Delsarte, std::string("linear program ") + to_string(r.lp.status));
    return r;
  }
  std::string cert = "f = (";
  for (std::size_t j = 0; j < r.lp.solution.size(); ++j) cert += (j ? ", " : "") + to_string(r.lp.solution[j]);
  cert += ")";
  r.bound = BoundResult::make(Method::Delsarte, 1 + r.lp.value, cert);
  return r;
}

std::vector<std::vector<int>> LRSReport::admissible() const {
  std::vector<std::vector<int>> out;
  for (const auto& e : sets)
    if (e.admissible) out.push_back(e.distances);
  return out;
}

std::vector<Rational> lrs_k_values(const std::vector<int>& d) {
  std::vector<Rational> k(d.size(), 1);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (j != i) k[i] *= make_rational(d[j], d[j] - d[i]);
  return k;
}

Integer lrs_radius(const Integer& n_value) {
  if (n_value < 2) throw InvalidArgument("lrs_radius needs N >= 2");
  // Largest r with (r - 1/2)^2 <= q, q = N^2/(2N-2) + 1/4, i.e. 2r - 1 <= isqrt(floor(4q)).
  Rational four_q = make_rational(4 * n_value * n_value, 2 * n_value - 2) + 1;
  Integer fl = floor_of(four_q);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  Integer r = (root + 1) / 2;
  return r;
}

LRSReport lrs_filter(int n, int w, int s) {
  if (s < 2 || s > w) throw InvalidArgument("lrs_filter needs 2 <= s <= w");
  LRSReport rep;
  rep.n_value = binomial(n, s - 1);
  rep.radius = lrs_radius(rep.n_value);
  rep.fallback_bound = 2 * rep.n_value - 1;
  for (auto& d : subsets_of_size(w, s)) {
    LrsEntry e;
    e.k_values = lrs_k_values(d);
    e.admissible = std::all_of(e.k_values.begin(), e.k_values.end(), [&](const Rational& k) {
      return is_integer(k) && abs(k) <= Rational(rep.radius);
    });
    e.distances = std::move(d);
    rep.sets.push_back(std::move(e));
  }
  return rep;
}

std::vector<int> default_degrees(int w, const std::vector<int>& d) {
  std::vector<int> k;
  for (int x : d) k.push_back(w + 1 - x);
  return k;
}

namespace {

void check_degrees(int w, const std::vector<int>& d, const std::vector<int>& k) {
  if (d.empty() || d.size() != k.size()) throw InvalidArgument("det bound needs |D| = |K| >= 1");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1 || d[i] > w || (i > 0 && d[i] <= d[i - 1])) throw InvalidArgument("det bound: bad distance set");
    if (k[i] < 1 || k[i] > w) throw InvalidArgument("det bound: degrees must lie in [1, w]");
  }
}

}  // namespace

DetBoundCertificate det_bound_2(int n, int w, int d1, int d2, int k1, int k2) {
  check_degrees(w, {d1, d2}, {k1, k2});
  const Rational a = hahn(n, w, k1, d1);
  const Rational b = hahn(n, w, k2, d1);
  const Rational c = hahn(n, w, k1, d2);
  const Rational d = hahn(n, w, k2, d2);
  DetBoundCertificate cert;
  cert.degrees = {k1, k2};
  cert.e_values = {b - d, c - a, a * d - b * c};
  cert.conditions_met = cert.e_values[0] >= 0 && cert.e_values[1] >= 0 && cert.e_values[2] > 0;
  if (cert.conditions_met) cert.bound = 1 + (cert.e_values[0] + cert.e_values[1]) / cert.e_values[2];
  return cert;
}

DetBoundCertificate det_bound_s(int n, int w, const std::vector<int>& d, std::vector<int> degrees) {
  if (degrees.empty()) degrees = default_degrees(w, d);
  check_degrees(w, d, degrees);
  const std::size_t s = d.size();
  RatMatrix psi(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) psi(i, j) = hahn(n, w, degrees[j], d[i]);

  DetBoundCertificate cert;
  cert.degrees = degrees;
  const int odd_sign = (s % 2 == 0) ? -1 : 1;  // (-1)^(s+1)
  for (std::size_t j = 0; j < s; ++j) {
    RatMatrix m = psi;
    for (std::size_t i = 0; i < s; ++i) m(i, j) = 1;
    cert.e_values.push_back(odd_sign * determinant(m));
  }
  const Rational det_psi = determinant(psi);
  cert.e_values.push_back(-odd_sign * det_psi);

  cert.conditions_met = cert.e_values[s] > 0;
  for (std::size_t j = 0; j < s; ++j) cert.conditions_met = cert.conditions_met && cert.e_values[j] >= 0;
  if (!cert.conditions_met) return cert;

  RatMatrix bordered(s + 1, s + 1);
  for (std::size_t j = 0; j <= s; ++j) bordered(0, j) = 1;
  for (std::size_t i = 0; i < s; ++i) {
    bordered(i + 1, 0) = 1;
    for (std::size_t j = 0; j < s; ++j) bordered(i + 1, j + 1) = psi(i, j);
  }
  cert.bound = determinant(bordered) / det_psi;
  return cert;
}

Rational asymptotic_constant(int w, int d1, int d2) {
  if (!(1 <= d1 && d1 < d2 && d2 <= w)) throw InvalidArgument("asymptotic_constant needs 1 <= d1 < d2 <= w");
  const Integer denom = Integer(d1) * d2 * (w + 1 - d1) * (w + 1 - d2);
  if (d1 == d2 - 1) return make_rational(2 * binomial(w, d2), denom);
  return make_rational(binomial(d2 - 1, d1) * binomial(w, d2), denom);
}

namespace {

void pick_best(SetReport& rep) {
  bool any = false;
  for (const auto& b : rep.bounds) {
    if (!b.applicable) continue;
    if (!any || *b.floored < rep.best) {
      rep.best = *b.floored;
      rep.best_method = b.method;
      any = true;
    }
  }
  if (!any) throw InternalError("no upper bound applies to " + std::to_string(rep.distances.size()) + "-set");
}

}  // namespace

BoundResult det_bound_result(const DetBoundCertificate& c) {
  std::string e = "E = (";
  for (std::size_t i = 0; i < c.e_values.size(); ++i) e += (i ? ", " : "") + to_string(c.e_values[i]);
  e += ")";
  if (!c.conditions_met) return BoundResult::not_applicable(Method::Determinant, "sign conditions fail, " + e);
  return BoundResult::make(Method::Determinant, *c.bound, "sign conditions hold, " + e);
}

namespace {

bool is_top_block(int w, const std::vector<int>& d) {
  const int s = static_cast<int>(d.size());
  for (int i = 0; i < s; ++i)
    if (d[static_cast<std::size_t>(i)] != w - s + 1 + i) return false;
  return true;
}

bool is_bottom_block(const std::vector<int>& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int missing_distance(int w, const std::vector<int>& d) {
  for (int x = 1; x <= w; ++x)
    if (!std::binary_search(d.begin(), d.end(), x)) return x;
  return 0;
}

SetReport johnson_set_report(const SpaceSpec& space, int s, std::vector<int> d, const std::optional<LRSReport>& lrs,
                             std::size_t index) {
  const int n = space.n();
  const int w = space.w();
  SetReport rep;
  DistanceSet ds(space, d);

  if (lrs) {
    rep.lrs = lrs->sets[index];
    if (!rep.lrs->admissible)
      rep.bounds.push_back(BoundResult::make(Method::LrsFallback, Rational(lrs->fallback_bound),
                                             "K values fail the integrality/radius test"));
  }
  rep.bounds.push_back(det_bound_result(det_bound_s(n, w, d)));
  rep.bounds.push_back(delsarte_lp(space, ds).bound);
  rep.bounds.push_back(harmonic_bound(space, ds));
  rep.bounds.push_back(bm_conditional_bound(space, ds));
  if (s >= 2 && w >= s + 1) rep.bounds.push_back(refined_general_bound(n, w, s));
  if (is_top_block(w, d)) rep.bounds.push_back(johnson_packing_bound(n, w, s));
  if (s < w && is_bottom_block(d)) rep.bounds.push_back(ekr_bound(n, w, w - s));
  if (s == w - 1) {
    BoundResult fi = forbidden_intersection_bound(n, w, w - missing_distance(w, d));
    rep.bounds.push_back(fi);
  }
  rep.distances = std::move(d);
  pick_best(rep);
  return rep;
}

void finish(Verdict& v) {
  v.upper = 0;
  for (std::size_t i = 0; i < v.sets.size(); ++i) {
    if (i == 0 || v.sets[i].best > v.upper) {
      v.upper = v.sets[i].best;
      v.worst_set = i;
    }
  }
  if (v.lower > v.upper) throw InternalError("lower bound exceeds upper bound for " + v.space.describe());
  v.exact = v.lower == v.upper;
}

}  // namespace

Verdict exact_value_pipeline(const SpaceSpec& space, int s) {
  if (!space.is_johnson()) throw InvalidArgument("exact_value_pipeline runs on Johnson spaces");
  const int w = space.w();
  if (s < 1 || s > w) throw InvalidArgument("exact_value_pipeline needs 1 <= s <= w");
  Verdict v{space, s, lower_bound_value(space, s), 0, false, 0, {}};
  std::optional<LRSReport> lrs;
  if (s >= 2) lrs = lrs_filter(space.n(), w, s);
  auto subsets = subsets_of_size(w, s);
  v.sets.resize(subsets.size());
  detail::parallel_for(subsets.size(), [&](std::size_t i) { v.sets[i] = johnson_set_report(space, s, subsets[i], lrs, i); });
  finish(v);
  return v;
}

Verdict hamming_2dist_exact(int n) {
  if (n < 6) throw InvalidArgument("hamming_2dist_exact needs n >= 6");
  SpaceSpec space = SpaceSpec::hamming(n);
  Verdict v{space, 2, lower_bound_value(space, 2), 0, false, 0, {}};
  auto pairs = subsets_of_size(n, 2);
  v.sets.resize(pairs.size());
  detail::parallel_for(pairs.size(), [&](std::size_t i) {
    const int b = pairs[i][0];
    const int a = pairs[i][1];
    Hamming2Upper h = hamming2_upper(n, a, b);
    SetReport rep;
    rep.distances = pairs[i];
    rep.bounds.push_back(BoundResult::make(h.branch == "conditional" ? Method::Conditional : Method::Spherical,
                                           Rational(h.value), h.branch));
    pick_best(rep);
    v.sets[i] = std::move(rep);
  });
  finish(v);
  return v;
}

SetReport set_report(const SpaceSpec& space, const DistanceSet& d) {
  const int s = d.size();
  if (space.is_johnson()) {
    std::optional<LRSReport> lrs;
    std::size_t index = 0;
    if (s >= 2) {
      lrs = lrs_filter(space.n(), space.w(), s);
      auto subsets = subsets_of_size(space.w(), s);
      index = static_cast<std::size_t>(std::find(subsets.begin(), subsets.end(), d.values()) - subsets.begin());
    }
    return johnson_set_report(space, s, d.values(), lrs, index);
  }
  SetReport rep;
  rep.distances = d.values();
  rep.bounds.push_back(delsarte_lp(space, d).bound);
  rep.bounds.push_back(harmonic_bound(space, d));
  rep.bounds.push_back(bm_conditional_bound(space, d));
  if (s == 2 && space.n() >= 6) {
    Hamming2Upper h = hamming2_upper(space.n(), d[1], d[0]);
    rep.bounds.push_back(BoundResult::make(h.branch == "conditional" ? Method::Conditional : Method::Spherical,
                                           Rational(h.value), h.branch));
  }
  pick_best(rep);
  return rep;
}

Verdict hamming_lp_pipeline(int n, int s) {
  SpaceSpec space = SpaceSpec::hamming(n);
  if (s < 1 || 2 * s > n) throw InvalidArgument("hamming_lp_pipeline needs 1 <= s and 2s <= n");
  Verdict v{space, s, lower_bound_value(space, s), 0, false, 0, {}};
  auto subsets = subsets_of_size(n, s);
  v.sets.resize(subsets.size());
  detail::parallel_for(subsets.size(), [&](std::size_t i) {
    DistanceSet ds(space, subsets[i]);
    SetReport rep;
    rep.distances = subsets[i];
    rep.bounds.push_back(delsarte_lp(space, ds).bound);
    rep.bounds.push_back(harmonic_bound(space, ds));
    rep.bounds.push_back(bm_conditional_bound(space, ds));
    pick_best(rep);
    v.sets[i] = std::move(rep);
  });
  finish(v);
  return v;
}

}  // namespace fewdist
