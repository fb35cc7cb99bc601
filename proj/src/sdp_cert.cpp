#include "fewdist/sdp_cert.hpp"

#include "parallel.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <thread>

namespace fewdist {

namespace {

int max_row_index(const SpaceSpec& s) { return s.is_hamming() ? s.n() : std::min(s.w(), s.n() - s.w()); }

Word low_bits(int from, int count) {
  Word w = 0;
  for (int b = from; b < from + count; ++b) w |= Word{1} << b;
  return w;
}

struct Index {
  int i, j, t, r;
};

Index index_of(bool hamming, Word p, Word q, Word o) {
  if (hamming) {
    Word sq = p ^ q;
    Word so = p ^ o;
    return {popcount(sq), popcount(so), popcount(sq & so), 0};
  }
  Word aq = p & ~q;
  Word ao = p & ~o;
  Word bq = q & ~p;
  Word bo = o & ~p;
  return {popcount(aq), popcount(ao), popcount(aq & ao), popcount(bq & bo)};
}

// A concrete triple (u, v, z) whose index is (i, j, t, r).
std::array<Word, 3> realize(const SpaceSpec& space, int i, int j, int t, int r) {
  if (space.is_hamming()) {
    Word v = low_bits(0, i);
    Word z = low_bits(0, t) | low_bits(i, j - t);
    return {0, v, z};
  }
  const int w = space.w();
  Word u = low_bits(0, w);
  Word av = low_bits(0, i);
  Word az = low_bits(0, t) | low_bits(i, j - t);
  Word bv = low_bits(w, i);
  Word bz = low_bits(w, r) | low_bits(w + i, j - r);
  return {u, (u & ~av) | bv, (u & ~az) | bz};
}

}  // namespace

TripleDistribution::TripleDistribution(const SpaceSpec& space)
    : space_(space), m_(max_row_index(space)), rdim_(space.is_hamming() ? 1 : max_row_index(space) + 1) {
  if (space.n() > 64) throw InvalidArgument("triple distributions support n <= 64");
  const std::size_t d = static_cast<std::size_t>(m_ + 1);
  x_.assign(d * d * d * static_cast<std::size_t>(rdim_), 0);
}

bool TripleDistribution::valid_index(int i, int j, int t, int r) const {
  if (i < 0 || j < 0 || i > m_ || j > m_ || t < 0 || r < 0 || t > std::min(i, j) || r > std::min(i, j)) return false;
  if (space_.is_hamming()) return r == 0 && i + j - t <= space_.n();
  return i + j - t <= space_.w() && i + j - r <= space_.n() - space_.w();
}

int TripleDistribution::third_distance(int i, int j, int t, int r) const {
  return space_.is_hamming() ? i + j - 2 * t : i + j - t - r;
}

std::size_t TripleDistribution::offset(int i, int j, int t, int r) const {
  if (!valid_index(i, j, t, r)) throw InvalidArgument("triple distribution index out of range");
  const std::size_t d = static_cast<std::size_t>(m_ + 1);
  return ((static_cast<std::size_t>(i) * d + static_cast<std::size_t>(j)) * d + static_cast<std::size_t>(t)) *
             static_cast<std::size_t>(rdim_) +
         static_cast<std::size_t>(r);
}

const Rational& TripleDistribution::at(int i, int j, int t, int r) const { return x_[offset(i, j, t, r)]; }
Rational& TripleDistribution::at(int i, int j, int t, int r) { return x_[offset(i, j, t, r)]; }

Integer beta_coeff(int a, int i, int j, int k, int t) {
  if (k < 0 || 2 * k > a) throw InvalidArgument("beta_coeff needs 0 <= k <= a/2");
  Integer sum = 0;
  for (int u = std::max(t, k); u <= std::min(i, j); ++u) {
    Integer term = binomial(u, t) * binomial(a - 2 * k, u - k) * binomial(a - k - u, i - u) * binomial(a - k - u, j - u);
    if ((u - t) % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

Integer orbit_count(const SpaceSpec& space, int i, int j, int t, int r) {
  if (space.is_hamming()) return multinomial(space.n(), i - t, j - t, t);
  const int w = space.w();
  return multinomial(w, i - t, j - t, t) * multinomial(space.n() - w, i - r, j - r, r);
}

TripleDistribution triple_distribution_from_code(const Code& code, const SpaceSpec& space) {
  if (code.size() == 0) throw InvalidArgument("empty code");
  if (!code.fits(space)) throw InvalidArgument("code does not lie in " + space.describe());
  TripleDistribution x(space);
  const bool hamming = space.is_hamming();
  const auto& words = code.words();

  using Counts = std::map<std::array<int, 4>, unsigned long long>;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), words.size()));
  std::vector<Counts> partial(workers);
  detail::parallel_for(workers, [&](std::size_t wid) {
    Counts& c = partial[wid];
    for (std::size_t a = wid; a < words.size(); a += workers)
      for (Word v : words)
        for (Word z : words) {
          Index ix = index_of(hamming, words[a], v, z);
          ++c[{ix.i, ix.j, ix.t, ix.r}];
        }
  });

  Counts total;
  for (const auto& c : partial)
    for (const auto& [k, v] : c) total[k] += v;
  const Integer size(static_cast<unsigned long>(code.size()));
  for (const auto& [k, v] : total) {
    Integer count(static_cast<unsigned long>(v));
    x.at(k[0], k[1], k[2], k[3]) = make_rational(count, size * orbit_count(space, k[0], k[1], k[2], k[3]));
  }
  return x;
}

std::vector<SdpBlock> build_matrices(const TripleDistribution& x) {
  const SpaceSpec& space = x.space();
  std::vector<SdpBlock> out;
  if (space.is_hamming()) {
    const int n = space.n();
    for (int k = 0; 2 * k <= n; ++k) {
      const std::size_t dim = static_cast<std::size_t>(n - 2 * k + 1);
      SdpBlock b{k, 0, k, RatMatrix(dim, dim)};
      for (int i = k; i <= n - k; ++i)
        for (int j = k; j <= n - k; ++j) {
          Rational e = 0;
          for (int t = std::max(0, i + j - n); t <= std::min(i, j); ++t) {
            const Rational& v = x.at(i, j, t);
            if (v != 0) e += Rational(beta_coeff(n, i, j, k, t)) * v;
          }
          b.matrix(static_cast<std::size_t>(i - k), static_cast<std::size_t>(j - k)) = e;
        }
      out.push_back(std::move(b));
    }
    return out;
  }
  const int n = space.n();
  const int w = space.w();
  for (int k = 0; 2 * k <= w; ++k)
    for (int l = 0; 2 * l <= n - w; ++l) {
      const int lo = std::max(k, l);
      const int hi = std::min(w - k, n - w - l);
      if (lo > hi) continue;
      const std::size_t dim = static_cast<std::size_t>(hi - lo + 1);
      SdpBlock b{k, l, lo, RatMatrix(dim, dim)};
      for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j) {
          Rational e = 0;
          for (int t = std::max(0, i + j - w); t <= std::min(i, j); ++t)
            for (int r = std::max(0, i + j - (n - w)); r <= std::min(i, j); ++r) {
              const Rational& v = x.at(i, j, t, r);
              if (v != 0) e += Rational(beta_coeff(w, i, j, k, t) * beta_coeff(n - w, i, j, l, r)) * v;
            }
          b.matrix(static_cast<std::size_t>(i - lo), static_cast<std::size_t>(j - lo)) = e;
        }
      out.push_back(std::move(b));
    }
  return out;
}

namespace {

std::string index_text(int i, int j, int t, int r, bool hamming) {
  std::string s = "x(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(t);
  if (!hamming) s += "," + std::to_string(r);
  return s + ")";
}

}  // namespace

FeasibilityReport feasibility_check(const TripleDistribution& x, const DistanceSet& d,
                                    const std::vector<SdpBlock>& blocks) {
  FeasibilityReport rep;
  const SpaceSpec& space = x.space();
  const bool hamming = space.is_hamming();
  auto fail = [&](int cond, std::string msg) {
    if (rep.ok) {
      rep.ok = false;
      rep.condition = cond;
      rep.violation = std::move(msg);
    }
  };
  auto allowed = [&](int dist) { return dist == 0 || d.contains(dist); };

  if (x.at(0, 0, 0) != 1) fail(1, "x(0,0,0) = " + to_string(x.at(0, 0, 0)) + ", expected 1");

  x.for_each_index([&](int i, int j, int t, int r) {
    if (!rep.ok) return;
    const Rational& v = x.at(i, j, t, r);
    const std::string id = index_text(i, j, t, r, hamming);
    const Rational& xi = x.at(i, 0, 0);
    const Rational& xj = x.at(j, 0, 0);
    if (v < 0) return fail(2, id + " is negative");
    if (v > xi) return fail(2, id + " exceeds " + index_text(i, 0, 0, 0, hamming));
    if (xi + xj > 1 + v) return fail(2, index_text(i, 0, 0, 0, hamming) + " + " + index_text(j, 0, 0, 0, hamming) +
                                            " > 1 + " + id);

    auto triple = realize(space, i, j, t, r);
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) {
      Index q = index_of(hamming, triple[static_cast<std::size_t>(p[0])], triple[static_cast<std::size_t>(p[1])],
                         triple[static_cast<std::size_t>(p[2])]);
      if (x.at(q.i, q.j, q.t, q.r) != v)
        return fail(3, id + " differs from its permuted form " + index_text(q.i, q.j, q.t, q.r, hamming));
    }

    if (v != 0 && (!allowed(i) || !allowed(j) || !allowed(x.third_distance(i, j, t, r))))
      return fail(4, id + " is nonzero but involves a distance outside " + d.describe());
  });

  for (const auto& b : blocks) {
    bool psd = psd_check(b.matrix);
    rep.block_psd.push_back(psd);
    if (!psd) {
      std::string name = hamming ? "B_" + std::to_string(b.k) : "B_" + std::to_string(b.k) + "," + std::to_string(b.l);
      fail(5, name + " is not positive semidefinite");
    }
  }
  return rep;
}

Rational sdp_objective(const TripleDistribution& x) {
  const SpaceSpec& space = x.space();
  Rational total = 0;
  for (int i = 0; i <= x.max_index(); ++i) {
    Integer weight = space.is_hamming() ? binomial(space.n(), i) : binomial(space.w(), i) * binomial(space.n() - space.w(), i);
    total += Rational(weight) * x.at(i, 0, 0);
  }
  return total;
}

std::string distribution_to_json(const TripleDistribution& x) {
  using nlohmann::json;
  const SpaceSpec& space = x.space();
  json doc;
  doc["space"] = {{"kind", space.is_hamming() ? "hamming" : "johnson"}, {"n", space.n()}};
  if (space.is_johnson()) doc["space"]["w"] = space.w();
  json entries = json::array();
  x.for_each_index([&](int i, int j, int t, int r) {
    const Rational& v = x.at(i, j, t, r);
    if (v == 0) return;
    json e = {{"i", i}, {"j", j}, {"t", t}};
    if (space.is_johnson()) e["r"] = r;
    e["x"] = to_string(v);
    entries.push_back(std::move(e));
  });
  doc["entries"] = std::move(entries);
  return doc.dump(2);
}

TripleDistribution distribution_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
    const json& sp = doc.at("space");
    const std::string kind = sp.at("kind").get<std::string>();
    SpaceSpec space = kind == "hamming"   ? SpaceSpec::hamming(sp.at("n").get<int>())
                      : kind == "johnson" ? SpaceSpec::johnson(sp.at("n").get<int>(), sp.at("w").get<int>())
                                          : throw InvalidArgument("unknown space kind '" + kind + "'");
    TripleDistribution x(space);
    for (const json& e : doc.at("entries")) {
      const int i = e.at("i").get<int>();
      const int j = e.at("j").get<int>();
      const int t = e.at("t").get<int>();
      const int r = space.is_johnson() ? e.at("r").get<int>() : 0;
      if (!x.valid_index(i, j, t, r)) throw InvalidArgument("entry index out of range");
      x.at(i, j, t, r) = parse_rational(e.at("x").get<std::string>());
    }
    return x;
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("malformed distribution: ") + ex.what());
  }
}

}  // namespace fewdist
