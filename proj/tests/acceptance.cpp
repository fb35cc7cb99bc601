// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fewdist/classic_bounds.hpp"
#include "fewdist/lp_bounds.hpp"
#include "fewdist/reference_tables.hpp"
#include "fewdist/sdp_cert.hpp"
#include "fewdist/search_oracle.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace fewdist;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < limit_seconds, "runtime " + std::to_string(secs) + " s over " + std::to_string(limit_seconds) + " s");
  std::printf("[%s] criterion %d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.str().c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

Integer choose(long n, long k) {
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Pairwise distance check that does not use the library's validator.
bool pairwise_ok(const std::vector<Word>& words, bool johnson, int w, const std::vector<int>& d) {
  for (std::size_t a = 0; a < words.size(); ++a) {
    if (johnson && std::popcount(words[a]) != w) return false;
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      int h = std::popcount(words[a] ^ words[b]);
      if (johnson) {
        if (h % 2) return false;
        h /= 2;
      }
      bool found = false;
      for (int x : d) found = found || x == h;
      if (!found) return false;
    }
  }
  return true;
}

std::map<int, Rational> inner_distribution(const Code& c, bool johnson) {
  std::map<int, Rational> a;
  for (auto u : c.words())
    for (auto v : c.words())
      if (u != v) a[std::popcount(u ^ v) / (johnson ? 2 : 1)] += 1;
  for (auto& [d, x] : a) x /= static_cast<long>(c.size());
  return a;
}

}  // namespace

int main() {
  criterion(1, "two-distance Hamming values 1 + binom(n,2) for n in [6,60]", 60, [](Outcome& o) {
    for (const auto& r : thm11_check(6, 60)) {
      o.require(r.exact && r.upper == 1 + choose(r.n, 2), "n = " + std::to_string(r.n));
    }
    o.detail << "55 values exact; ";
  });

  criterion(2, "Johnson exact values from the bound pipeline", 300, [](Outcome& o) {
    struct Case {
      int n, w, s;
      Integer value;
    };
    std::vector<Case> cases{{9, 4, 2, 21},   {12, 5, 2, 36},  {35, 6, 2, 465}, {12, 5, 3, 120},
                            {16, 6, 3, 286}, {20, 7, 3, 560}, {15, 6, 4, 715}, {24, 7, 4, choose(21, 4)}};
    for (int w = 3; w <= 7; ++w) cases.push_back({2 * w, w, w - 1, choose(2 * w - 1, w - 1)});
    for (const auto& c : cases) {
      Verdict v = exact_value_pipeline(SpaceSpec::johnson(c.n, c.w), c.s);
      o.require(v.exact && v.upper == c.value,
                "A(J(" + std::to_string(c.n) + "," + std::to_string(c.w) + ")," + std::to_string(c.s) + ") = [" +
                    to_string(v.lower) + ", " + to_string(v.upper) + "], expected " + to_string(c.value));
    }
    o.detail << cases.size() << " values exact; ";
  });

  criterion(3, "closed-form determinant bounds for all tabulated blocks up to n = 60", 120, [](Outcome& o) {
    std::size_t rows = 0;
    for (auto [w, s] : closed_form_blocks()) {
      AppendixReport rep = appendix_check(w, s, 60);
      rows += rep.rows.size();
      o.require(rep.all_ok, "block w=" + std::to_string(w) + ", s=" + std::to_string(s));
    }
    o.require(closed_form_blocks().size() == 10, "expected 10 blocks");
    DetBoundCertificate a = det_bound_2(10, 4, 1, 2, 4, 3);
    o.require(a.conditions_met && *a.bound == 28, "bound 28 at (w=4, {1,2}, n=10)");
    o.require(a.e_values == std::vector<Rational>{make_rational(1, 15), make_rational(7, 30), make_rational(1, 90)},
              "E-values (1/15, 7/30, 1/90)");
    DetBoundCertificate b = det_bound_s(9, 5, {2, 3, 4, 5});
    o.require(b.conditions_met && *b.bound == make_rational(126, 5), "bound 126/5 at (w=5, {2,3,4,5}, n=9)");
    o.require(!det_bound_s(8, 4, {1, 2}).conditions_met, "conditions must fail at n=8 for (4,2,{1,2})");
    o.detail << rows << " (D, n) rows match; ";
  });

  criterion(4, "exhaustive search values with independently validated witnesses", 600, [](Outcome& o) {
    struct Case {
      SpaceSpec space;
      int s;
      std::size_t value;
    };
    for (const auto& c : {Case{SpaceSpec::hamming(6), 2, 16}, Case{SpaceSpec::johnson(6, 3), 2, 10},
                          Case{SpaceSpec::johnson(7, 3), 2, 15}, Case{SpaceSpec::johnson(8, 4), 3, 35}}) {
      ExhaustiveResult r = exhaustive_A(c.space, c.s, kDefaultNodeBudget);
      const bool johnson = c.space.is_johnson();
      o.require(!r.budget_exhausted && r.value == c.value, c.space.describe() + " value " + std::to_string(r.value));
      o.require(r.witness.size() == r.value &&
                    pairwise_ok(r.witness, johnson, johnson ? c.space.w() : 0, r.best_distances),
                c.space.describe() + " witness");
    }
  });

  criterion(5, "semidefinite certificates of explicit codes", 60, [](Outcome& o) {
    std::vector<std::pair<SpaceSpec, Code>> corpus{
        {SpaceSpec::hamming(6), construct_parity_code(6, 2)},
        {SpaceSpec::hamming(8), construct_parity_code(8, 3)},
        {SpaceSpec::johnson(9, 4), construct_fixed_prefix_code(9, 4, 2)},
        {SpaceSpec::johnson(7, 3), construct_fixed_prefix_code(7, 3, 2)},
        {SpaceSpec::hamming(3), Code::from_strings({"000", "110", "101", "011"})},
    };
    std::size_t blocks_checked = 0;
    for (const auto& [space, code] : corpus) {
      TripleDistribution x = triple_distribution_from_code(code, space);
      auto ds = code.distance_set(space.is_johnson());
      DistanceSet d(space, std::vector<int>(ds.begin(), ds.end()));
      auto blocks = build_matrices(x);
      FeasibilityReport rep = feasibility_check(x, d, blocks);
      o.require(rep.ok, space.describe() + ": " + rep.violation);
      for (const auto& b : blocks) {
        ++blocks_checked;
        o.require(psd_check(b.matrix), space.describe() + " block k=" + std::to_string(b.k));
      }
      o.require(sdp_objective(x) == Rational(static_cast<long>(code.size())), space.describe() + " objective");
    }
    o.detail << corpus.size() << " codes, " << blocks_checked << " blocks PSD; ";
  });

  criterion(6, "asymptotic constants and the Hahn asymptote residual", 60, [](Outcome& o) {
    o.require(asymptotic_constant(7, 2, 4) == make_rational(35, 64), "c(7,2,4) = 35/64");
    for (int w = 2; w <= 10; ++w) o.require(asymptotic_constant(w, 1, 2) == make_rational(1, 2), "c(w,1,2) = 1/2");
    // r(n) = n^3 |psi - approx|. Where the residual is of exact order n^-3,
    // r changes by under 10% from n = 2000 to 4000. Where the cubic term
    // vanishes (r roughly halves or better from n = 10^6 to 2 * 10^6) the
    // residual is of lower order, and r must shrink from 2000 to 4000 instead.
    auto scaled = [](int w, int k, int x, long n) -> Rational {
      HahnAsymptote h = hahn_asymptote(w, k, x);
      Rational nn(n);
      return nn * nn * nn * abs(hahn(static_cast<int>(n), w, k, x) - h.evaluate(w, x, nn));
    };
    int cubic = 0, higher = 0;
    for (int w = 1; w <= 6; ++w)
      for (int k = 1; k <= w; ++k)
        for (int x = 1; x <= w; ++x) {
          const std::string id = "(w,k,x) = (" + std::to_string(w) + "," + std::to_string(k) + "," + std::to_string(x) + ")";
          const Rational r1 = scaled(w, k, x, 2000);
          const Rational r2 = scaled(w, k, x, 4000);
          const Rational big1 = scaled(w, k, x, 1000000);
          const Rational big2 = scaled(w, k, x, 2000000);
          if (big1 != 0 && big2 / big1 > make_rational(3, 4)) {
            ++cubic;
            o.require(r1 != 0 && abs(r2 / r1 - 1) < make_rational(1, 10), id + " changes by 10% or more");
          } else {
            ++higher;
            o.require(r2 <= r1, id + " scaled residual grows");
          }
        }
    o.detail << cubic << " triples within 10%, " << higher << " with vanishing cubic term and shrinking residual; ";
  });

  criterion(7, "harmonic and LP bounds at Hamming 23, D = {8,12,16}", 60, [](Outcome& o) {
    SpaceSpec h = SpaceSpec::hamming(23);
    DistanceSet d(h, {8, 12, 16});
    BoundResult harm = harmonic_bound(h, d);
    DelsarteResult lp = delsarte_lp(h, d);
    o.require(harm.applicable && *harm.value >= 2048, "harmonic >= 2048");
    o.require(lp.bound.applicable && *lp.bound.value >= 2048, "LP >= 2048");
    if (harm.applicable && lp.bound.applicable)
      o.detail << "harmonic " << to_string(*harm.value) << ", LP " << to_string(*lp.bound.value) << "; ";
  });

  criterion(8, "property suites", 300, [](Outcome& o) {
    // Orthogonality of the Krawtchouk and Hahn families.
    for (int n = 1; n <= 8; ++n)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
          Rational sum = 0;
          for (int x = 0; x <= n; ++x) sum += Rational(binomial(n, x)) * krawtchouk(n, k, x) * krawtchouk(n, l, x);
          o.require((k == l) == (sum != 0), "Krawtchouk orthogonality n=" + std::to_string(n));
        }
    for (int w = 1; w <= 5; ++w)
      for (int n = 2 * w; n <= 12; ++n)
        for (int k = 0; k <= w; ++k)
          for (int l = 0; l <= w; ++l) {
            Rational sum = 0;
            for (int x = 0; x <= w; ++x)
              sum += Rational(binomial(w, x) * binomial(n - w, x)) * hahn(n, w, k, x) * hahn(n, w, l, x);
            o.require((k == l) == (sum != 0), "Hahn orthogonality n=" + std::to_string(n));
          }
    // Annihilator reconstruction.
    std::size_t sets = 0;
    auto reconstruct = [&](const SpaceSpec& space, int s) {
      for (const auto& dv : subsets_of_size(space.diameter(), s)) {
        DistanceSet d(space, dv);
        Expansion e = annihilator_expansion(space, d);
        auto value = [&](int t) {
          Rational v = 0;
          for (std::size_t k = 0; k < e.coeffs.size(); ++k) v += e.coeffs[k] * basis_poly(space, static_cast<int>(k), t);
          return v;
        };
        o.require(value(0) == 1, "f(0) = 1 for " + space.describe());
        for (int x : dv) o.require(value(x) == 0, "f(d) = 0 for " + space.describe());
        ++sets;
      }
    };
    for (int n = 2; n <= 12; ++n)
      for (int s = 1; s <= std::min(4, n); ++s) reconstruct(SpaceSpec::hamming(n), s);
    for (int w = 2; w <= 6; ++w)
      for (int n = 2 * w; n <= 16; ++n)
        for (int s = 1; s <= w; ++s) reconstruct(SpaceSpec::johnson(n, w), s);
    // Distance distributions of witness codes satisfy the Delsarte program.
    std::vector<std::pair<SpaceSpec, Code>> witnesses;
    for (int n = 4; n <= 10; ++n)
      for (int s = 1; 2 * s <= n; ++s) witnesses.emplace_back(SpaceSpec::hamming(n), construct_parity_code(n, s));
    for (int w = 2; w <= 4; ++w)
      for (int n = 2 * w; n <= 12; ++n)
        for (int s = 1; s <= w; ++s) witnesses.emplace_back(SpaceSpec::johnson(n, w), construct_fixed_prefix_code(n, w, s));
    for (auto [n, w, s] : {std::tuple{6, 3, 2}, {7, 3, 2}, {8, 4, 3}}) {
      SpaceSpec space = SpaceSpec::johnson(n, w);
      witnesses.emplace_back(space, Code(n, exhaustive_A(space, s, kDefaultNodeBudget).witness));
    }
    witnesses.emplace_back(SpaceSpec::hamming(6), Code(6, exhaustive_A(SpaceSpec::hamming(6), 2, kDefaultNodeBudget).witness));
    for (const auto& [space, code] : witnesses) {
      auto a = inner_distribution(code, space.is_johnson());
      if (a.empty()) continue;
      std::vector<int> dv;
      for (const auto& [dist, x] : a) dv.push_back(dist);
      LPProblem p = delsarte_program(space, DistanceSet(space, dv));
      for (std::size_t k = 0; k < p.constraints.rows(); ++k) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < dv.size(); ++j) lhs += p.constraints(k, j) * a[dv[j]];
        o.require(lhs >= p.rhs[k], "witness distribution infeasible in " + space.describe());
      }
      DelsarteResult lp = delsarte_lp(space, DistanceSet(space, dv));
      if (lp.bound.applicable)
        o.require(*lp.bound.value >= Rational(static_cast<long>(code.size())), "LP below witness size in " + space.describe());
    }
    // Determinant bound dominates the LP wherever its conditions hold.
    std::size_t compared = 0;
    for (int w = 2; w <= 7; ++w)
      for (int s = 1; s <= std::min(4, w); ++s)
        for (int n = 2 * w; n <= 60; ++n) {
          SpaceSpec space = SpaceSpec::johnson(n, w);
          for (const auto& dv : subsets_of_size(w, s)) {
            DetBoundCertificate c = det_bound_s(n, w, dv);
            if (!c.conditions_met) continue;
            DelsarteResult lp = delsarte_lp(space, DistanceSet(space, dv));
            ++compared;
            o.require(lp.bound.applicable && *c.bound >= *lp.bound.value,
                      "det < LP at n=" + std::to_string(n) + ", w=" + std::to_string(w));
          }
        }
    o.detail << sets << " expansions, " << witnesses.size() << " witness codes, " << compared << " det/LP pairs; ";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
