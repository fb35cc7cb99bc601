#include "fewdist/spherical.hpp"

#include "fewdist/classic_bounds.hpp"
#include "fewdist/orthopoly.hpp"

#include <algorithm>

namespace fewdist {

SphericalPair::SphericalPair(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
  if (!(alpha >= -1 && alpha < beta && beta < 1)) throw InvalidArgument("spherical pair needs -1 <= alpha < beta < 1");
}

std::optional<Rational> SphericalPair::gamma() const {
  if (alpha + beta >= 0) return std::nullopt;
  return (Rational(2) - (alpha + beta)) / (beta - alpha);
}

bool is_odd_integer(const Rational& q) { return is_integer(q) && mpz_odd_p(q.get_num_mpz_t()); }

Rational inner_product_of_distance(int n, int d) {
  if (n < 1 || d < 0 || d > n) throw InvalidArgument("inner_product_of_distance: d outside [0, n]");
  return Rational(1) - make_rational(2 * d, n);
}

namespace {

// Each part returns nullopt when its hypotheses fail at (n, a).
std::optional<Integer> part_a(int n, const Rational& a) {
  if (is_odd_integer(a)) return std::nullopt;
  return Integer(2 * n);
}

std::optional<Integer> part_b(int n, const Rational& a) {
  if (a != 3 || n < 7) return std::nullopt;
  return n <= 15 ? Integer(28) : Integer(2 * n - 2);
}

std::optional<Integer> part_c(int n, const Rational& a) {
  Rational a2 = a * a;
  if (n >= a2) return std::nullopt;
  return floor_of(Rational(n) * (a2 - 1) / (a2 - n));
}

std::optional<Integer> part_d(int n, const Rational& a) {
  if (!is_integer(a) || a < 3) return std::nullopt;
  Integer a2 = a.get_num() * a.get_num();
  if (n > 3 * a2 - 16) return std::nullopt;
  return Integer((a2 - 2) * (a2 - 1) / 2);
}

std::optional<Integer> part_e(int n, const Rational& a) {
  if (!is_integer(a) || a < 3) return std::nullopt;
  return floor_of(Rational(n) * (make_rational(2, 3) * a * a + make_rational(4, 7)) + 2);
}

}  // namespace

Integer equiangular_upper(int n, const Rational& a) {
  if (a <= 1) throw InvalidArgument("equiangular_upper needs a > 1");
  std::optional<Integer> best;
  for (auto part : {part_a, part_b, part_c, part_d, part_e}) {
    auto v = part(n, a);
    if (v && (!best || *v < *best)) best = v;
  }
  if (!best) throw InternalError("no equiangular bound applies");
  return *best;
}

LemmaEqu lemma_equ(const Rational& a, int n) {
  if (n < 7) throw InvalidArgument("lemma_equ needs n >= 7");
  if (a <= 1) throw InvalidArgument("lemma_equ needs a > 1");
  LemmaEqu r;
  r.bound = binomial(n - 1, 2);
  std::optional<Integer> v;
  if (!is_odd_integer(a)) {
    r.case_number = 1;
    v = part_a(n, a);
  } else {
    const Integer a2 = a.get_num() * a.get_num();
    if (n == a2 - 1 || n == a2 - 2) {
      r.exceptional = true;
      return r;
    }
    if (n >= a2 && n <= 3 * a2 - 16) {
      r.case_number = 2;
      v = part_d(n, a);
    } else if (n <= a2 - 3) {
      r.case_number = 3;
      v = part_c(n, a);
    } else {
      r.case_number = 4;
      v = a == 3 ? part_b(n, a) : part_e(n, a);
    }
  }
  if (!v || *v > r.bound)
    throw InternalError("equiangular case " + std::to_string(r.case_number) + " fails at n=" + std::to_string(n) +
                        ", a=" + to_string(a));
  r.case_value = *v;
  return r;
}

std::optional<Rational> two_dist_sphere_bound(int n, const Rational& alpha, const Rational& beta) {
  if (alpha >= 1 || beta >= 1) throw InvalidArgument("two_dist_sphere_bound needs alpha, beta < 1");
  Rational denom = Rational(1) - Rational(n - 1) / (Rational(n) * (1 - alpha) * (1 - beta));
  if (denom <= 0) return std::nullopt;
  return Rational(n + 2) / denom;
}

GUpper g_upper(int n, const Rational& alpha, const Rational& beta) {
  SphericalPair p(alpha, beta);
  auto g = p.gamma();
  if (!g) throw InvalidArgument("g_upper needs alpha + beta < 0");
  GUpper r;
  r.gamma = *g;
  if (beta < 0) {
    r.bound = n + 1;
    r.branch = "rankin";
    return r;
  }
  LemmaEqu le = lemma_equ(*g, n + 1);
  if (le.exceptional) {
    r.exceptional = true;
    r.branch = "exceptional";
    return r;
  }
  r.bound = binomial(n, 2);
  r.branch = "equiangular";
  return r;
}

Hamming2Upper hamming2_upper(int n, int a, int b) {
  if (n < 6) throw InvalidArgument("hamming2_upper needs n >= 6");
  if (!(1 <= b && b < a && a <= n)) throw InvalidArgument("hamming2_upper needs 1 <= b < a <= n");
  if (a + b <= n) {
    SpaceSpec space = SpaceSpec::hamming(n);
    BoundResult br = bm_conditional_bound(space, DistanceSet(space, {b, a}));
    if (!br.applicable) throw InternalError("conditional bound unexpectedly inapplicable");
    return {*br.floored, "conditional"};
  }
  Rational alpha = inner_product_of_distance(n, a);
  Rational beta = inner_product_of_distance(n, b);
  GUpper g = g_upper(n, alpha, beta);
  if (!g.exceptional) return {g.bound, g.branch};

  // n(1-alpha)(1-beta) = 4ab/n >= (n+2)(n+1)/n keeps the sphere bound below binom(n,2)+1.
  Rational prod = Rational(n) * (1 - alpha) * (1 - beta);
  if (prod < make_rational(Integer(n + 2) * (n + 1), n))
    throw InternalError("exceptional pair violates the product inequality");
  auto sb = two_dist_sphere_bound(n, alpha, beta);
  if (!sb) throw InternalError("sphere bound inapplicable on an exceptional pair");
  Integer v = floor_of(*sb);
  if (v > binomial(n, 2)) throw InternalError("sphere bound exceeds binom(n,2) on an exceptional pair");
  return {v, "two-distance-sphere"};
}

}  // namespace fewdist
