#include "fewdist/orthopoly.hpp"

#include <algorithm>

namespace fewdist {

SpaceSpec SpaceSpec::hamming(int n) {
  if (n < 1) throw InvalidArgument("Hamming space needs n >= 1");
  return SpaceSpec(SpaceKind::Hamming, n, 0);
}

SpaceSpec SpaceSpec::johnson(int n, int w) {
  if (w < 1) throw InvalidArgument("Johnson space needs w >= 1");
  if (2 * w > n) throw InvalidArgument("Johnson space needs 2w <= n");
  return SpaceSpec(SpaceKind::Johnson, n, w);
}

std::string SpaceSpec::describe() const {
  if (is_hamming()) return "H(" + std::to_string(n_) + ")";
  return "J(" + std::to_string(n_) + "," + std::to_string(w_) + ")";
}

DistanceSet::DistanceSet(const SpaceSpec& space, std::vector<int> distances) : d_(std::move(distances)) {
  if (d_.empty()) throw InvalidArgument("distance set must be nonempty");
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] < 1 || d_[i] > space.diameter())
      throw InvalidArgument("distance " + std::to_string(d_[i]) + " outside [1," +
                            std::to_string(space.diameter()) + "]");
    if (i > 0 && d_[i] <= d_[i - 1]) throw InvalidArgument("distances must be strictly increasing");
  }
}

bool DistanceSet::contains(int d) const { return std::binary_search(d_.begin(), d_.end(), d); }

std::string DistanceSet::describe() const {
  std::string s = "{";
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d_[i]);
  }
  return s + "}";
}

std::vector<std::vector<int>> subsets_of_size(int m, int s) {
  std::vector<std::vector<int>> out;
  if (s < 0 || s > m) return out;
  std::vector<int> cur(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(cur);
    int i = s - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - s + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Rational krawtchouk(int n, int k, int x) {
  if (k < 0 || k > n || x < 0 || x > n) throw InvalidArgument("krawtchouk: argument out of range");
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    Integer term = binomial(x, j) * binomial(n - x, k - j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return Rational(sum);
}

Rational hahn(int n, int w, int k, int x) {
  if (w < 1 || w > n) throw InvalidArgument("hahn: needs 1 <= w <= n");
  if (k < 0 || k > w || x < 0 || x > w) throw InvalidArgument("hahn: argument out of range");
  // Past n/2 the formula is evaluated formally; it stays finite while min(k, x) <= n - w.
  if (std::min(k, x) > n - w) throw InvalidArgument("hahn: min(k, x) exceeds n - w");
  Rational sum = 0;
  for (int j = 0; j <= std::min(k, x); ++j) {
    Rational term = make_rational(binomial(k, j) * binomial(n + 1 - k, j) * binomial(x, j),
                                  binomial(w, j) * binomial(n - w, j));
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

Rational basis_poly(const SpaceSpec& space, int k, int x) {
  return space.is_hamming() ? krawtchouk(space.n(), k, x) : hahn(space.n(), space.w(), k, x);
}

Rational annihilator_value(const DistanceSet& d, int t) {
  Rational v = 1;
  for (int di : d.values()) v *= make_rational(di - t, di);
  return v;
}

Expansion krawtchouk_expansion_by_weights(const SpaceSpec& space, const DistanceSet& d) {
  if (!space.is_hamming()) throw InvalidArgument("weighted expansion is defined for Hamming spaces");
  const int n = space.n();
  const int s = d.size();
  Expansion e;
  e.coeffs.assign(static_cast<std::size_t>(s + 1), 0);
  std::vector<Rational> fvals;
  for (int x = 0; x <= n; ++x) fvals.push_back(annihilator_value(d, x));
  const Integer scale = power_of_two(static_cast<unsigned long>(n));
  for (int i = 0; i <= s && i <= n; ++i) {
    Rational acc = 0;
    for (int x = 0; x <= n; ++x) {
      if (fvals[static_cast<std::size_t>(x)] == 0) continue;
      acc += fvals[static_cast<std::size_t>(x)] * krawtchouk(n, i, x) * Rational(binomial(n, x));
    }
    // Orthogonality gives sum_x binom(n,x) K_i(x)^2 = 2^n binom(n,i).
    e.coeffs[static_cast<std::size_t>(i)] = acc / Rational(scale * binomial(n, i));
  }
  return e;
}

Expansion expansion_by_interpolation(const SpaceSpec& space, const DistanceSet& d) {
  const int s = d.size();
  std::vector<int> points{0};
  points.insert(points.end(), d.values().begin(), d.values().end());
  RatMatrix m(static_cast<std::size_t>(s + 1), static_cast<std::size_t>(s + 1));
  std::vector<Rational> rhs(static_cast<std::size_t>(s + 1), 0);
  rhs[0] = 1;
  for (int r = 0; r <= s; ++r)
    for (int k = 0; k <= s; ++k)
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = basis_poly(space, k, points[static_cast<std::size_t>(r)]);
  return Expansion{solve_linear(m, rhs)};
}

Expansion annihilator_expansion(const SpaceSpec& space, const DistanceSet& d) {
  if (space.is_hamming()) return krawtchouk_expansion_by_weights(space, d);
  return expansion_by_interpolation(space, d);
}

Rational HahnAsymptote::evaluate(int w, int x, const Rational& n) const {
  return (a + b / n + c / (n * n)) / Rational(binomial(w, x));
}

HahnAsymptote hahn_asymptote(int w, int k, int x) {
  if (k < 1 || k > w || x < 1 || x > w) throw InvalidArgument("hahn_asymptote: needs 1 <= k, x <= w");
  HahnAsymptote h;
  const Integer b1 = binomial(w - k + 1, x);
  h.a = Rational(binomial(w - k, x));
  h.b = Rational(-Integer(k) * x * b1);
  h.c = Rational(-Integer(k) * x * w * b1) + make_rational(Integer(k) * (k - 1) * x * (x - 1), 2) * Rational(binomial(w - k + 2, x));
  return h;
}

}  // namespace fewdist
