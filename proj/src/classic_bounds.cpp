#include "fewdist/classic_bounds.hpp"

namespace fewdist {

const char* to_string(Method m) {
  switch (m) {
    case Method::Harmonic: return "harmonic";
    case Method::Conditional: return "conditional";
    case Method::RefinedGeneral: return "refined-general";
    case Method::Ekr: return "ekr";
    case Method::ForbiddenIntersection: return "forbidden-intersection";
    case Method::SingleMissingDistance: return "single-missing-distance";
    case Method::JohnsonPacking: return "johnson-packing";
    case Method::Delsarte: return "lp";
    case Method::Determinant: return "det";
    case Method::LrsFallback: return "lrs-fallback";
    case Method::Spherical: return "spherical";
  }
  return "unknown";
}

BoundResult BoundResult::make(Method m, const Rational& v, std::string cert) {
  BoundResult r;
  r.method = m;
  r.applicable = true;
  r.value = v;
  r.floored = floor_of(v);
  r.certificate = std::move(cert);
  return r;
}

BoundResult BoundResult::not_applicable(Method m, std::string cert) {
  BoundResult r;
  r.method = m;
  r.certificate = std::move(cert);
  return r;
}

namespace {

Integer johnson_dimension(int n, int k) {
  if (k == 0) return 1;
  return binomial(n, k) - binomial(n, k - 1);
}

}  // namespace

BoundResult harmonic_bound(const SpaceSpec& space, const DistanceSet& d) {
  Expansion e = annihilator_expansion(space, d);
  Integer total = 0;
  std::string used;
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    if (e.coeffs[k] <= 0) continue;
    total += space.is_hamming() ? binomial(space.n(), static_cast<long>(k))
                                : johnson_dimension(space.n(), static_cast<int>(k));
    used += (used.empty() ? "" : ",") + std::to_string(k);
  }
  return BoundResult::make(Method::Harmonic, Rational(total), "positive coefficients at k in {" + used + "}");
}

BoundResult bm_conditional_bound(const SpaceSpec& space, const DistanceSet& d) {
  const int n = space.n();
  const int s = d.size();
  if (space.is_hamming()) {
    long sum = 0;
    for (int x : d.values()) sum += x;
    if (2 * sum > static_cast<long>(s) * n)
      return BoundResult::not_applicable(Method::Conditional,
                                         "sum of distances " + std::to_string(sum) + " exceeds sn/2");
    Integer v = binomial(n, s);
    for (int i = 0; i <= s - 2; ++i) v += binomial(n, i);
    return BoundResult::make(Method::Conditional, Rational(v), "sum of distances " + std::to_string(sum) + " <= sn/2");
  }
  const int w = space.w();
  if (n - 2 * (s - 1) <= 0) return BoundResult::not_applicable(Method::Conditional, "n <= 2(s-1)");
  long lhs = 0;
  for (int x : d.values()) lhs += w - x;
  Rational rhs = make_rational(Integer(s) * (2 * Integer(w) * w - Integer(s - 1) * (4 * w - n)),
                               2 * Integer(n - 2 * (s - 1)));
  if (Rational(lhs) < rhs)
    return BoundResult::not_applicable(Method::Conditional,
                                       "sum of (w - d_i) = " + std::to_string(lhs) + " < " + to_string(rhs));
  Rational v = Rational(binomial(n, s)) - Rational(binomial(n, s - 1)) * make_rational(n - 2 * s + 3, n - s + 2);
  return BoundResult::make(Method::Conditional, v, "sum of (w - d_i) = " + std::to_string(lhs) + " >= " + to_string(rhs));
}

BoundResult refined_general_bound(int n, int w, int s) {
  if (s < 2 || w < s + 1) throw InvalidArgument("refined_general_bound needs s >= 2 and w >= s+1");
  Integer threshold = Integer(s) * w * w - Integer(2) * s * (s - 1) * w + Integer(s) * (s - 1) * (s - 1) + 2 * (s - 1);
  if (n < threshold)
    return BoundResult::not_applicable(Method::RefinedGeneral, "n < " + threshold.get_str());
  Integer v = binomial(n, s) - binomial(n, s - 1) + binomial(n, s - 2);
  return BoundResult::make(Method::RefinedGeneral, Rational(v), "n >= " + threshold.get_str());
}

BoundResult ekr_bound(int n, int w, int t) {
  if (t < 1 || t >= w) throw InvalidArgument("ekr_bound needs 1 <= t < w");
  long threshold = static_cast<long>(w - t + 1) * (t + 1);
  if (n < threshold) return BoundResult::not_applicable(Method::Ekr, "n < " + std::to_string(threshold));
  return BoundResult::make(Method::Ekr, Rational(binomial(n - t, w - t)), "n >= " + std::to_string(threshold));
}

BoundResult forbidden_intersection_bound(int n, int w, int l) {
  if (l < 0 || l > w - 1) throw InvalidArgument("forbidden_intersection_bound needs 0 <= l <= w-1");
  if (n < 2 * w - l) throw InvalidArgument("forbidden_intersection_bound needs n >= 2w - l");
  if (l == 0) return BoundResult::make(Method::ForbiddenIntersection, Rational(binomial(n - 1, w - 1)), "intersecting family");
  Rational v = make_rational(Integer(w - l) * binomial(n, w), n - l);
  return BoundResult::make(Method::ForbiddenIntersection, Rational(floor_of(v)), "no intersection of size " + std::to_string(l));
}

BoundResult single_missing_distance_value(int n, int w) {
  if (n < 2 * w) return BoundResult::not_applicable(Method::SingleMissingDistance, "n < 2w");
  Integer best = 0;
  for (int l = 0; l <= w - 1; ++l) {
    BoundResult b = forbidden_intersection_bound(n, w, l);
    if (*b.floored > best) best = *b.floored;
  }
  if (best != binomial(n - 1, w - 1)) throw InternalError("forbidden-intersection maximum not attained at l = 0");
  return BoundResult::make(Method::SingleMissingDistance, Rational(best), "max over forbidden intersections, n >= 2w");
}

BoundResult johnson_packing_bound(int n, int w, int s) {
  if (s < 1 || s > w) throw InvalidArgument("johnson_packing_bound needs 1 <= s <= w");
  Rational v = 1;
  for (int i = 0; i < s; ++i) v *= make_rational(n - i, w - i);
  return BoundResult::make(Method::JohnsonPacking, Rational(floor_of(v)), "distances {w-s+1..w}");
}

Integer lower_bound_value(const SpaceSpec& space, int s) {
  const int n = space.n();
  if (space.is_hamming()) {
    if (2 * s > n) throw InvalidArgument("Hamming lower bound needs 2s <= n");
    Integer v = 0;
    for (int k = s; k >= 0; k -= 2) v += binomial(n, k);
    return v;
  }
  if (s > n - space.w()) throw InvalidArgument("Johnson lower bound needs s <= n - w");
  return binomial(n - space.w() + s, s);
}

}  // namespace fewdist
