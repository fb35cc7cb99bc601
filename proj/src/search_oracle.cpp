#include "fewdist/search_oracle.hpp"

#include "fewdist/classic_bounds.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>

namespace fewdist {

namespace {

int space_distance(const SpaceSpec& space, Word a, Word b) {
  int h = popcount(a ^ b);
  return space.is_hamming() ? h : h / 2;
}

std::vector<Word> words_of_weight(int n, int w) {
  std::vector<Word> out;
  if (w == 0) return {0};
  Word x = (Word{1} << w) - 1;
  const Word limit = Word{1} << n;
  while (x < limit) {
    out.push_back(x);
    Word c = x & (~x + 1);
    Word r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

void check_distances(const Code& c, const std::set<int>& allowed, bool johnson, const char* what) {
  for (int d : c.distance_set(johnson))
    if (!allowed.count(d)) throw InternalError(std::string(what) + " realizes an unexpected distance");
}

}  // namespace

Code construct_parity_code(int n, int s) {
  if (s < 1 || 2 * s > n) throw InvalidArgument("parity code needs 1 <= s and 2s <= n");
  if (n > 24) throw InvalidArgument("parity code construction is limited to n <= 24");
  std::vector<Word> words;
  for (int k = s; k >= 0; k -= 2) {
    auto layer = words_of_weight(n, k);
    words.insert(words.end(), layer.begin(), layer.end());
  }
  Code c(n, std::move(words));
  std::set<int> expected;
  for (int i = 1; i <= s; ++i) expected.insert(2 * i);
  if (c.size() > 1 && c.distance_set() != expected) throw InternalError("parity code has the wrong distance set");
  if (Integer(static_cast<unsigned long>(c.size())) != lower_bound_value(SpaceSpec::hamming(n), s))
    throw InternalError("parity code has the wrong size");
  return c;
}

Code construct_fixed_prefix_code(int n, int w, int s) {
  if (s < 0 || s > std::min(w, n - w)) throw InvalidArgument("fixed-prefix code needs s <= min(w, n-w)");
  if (n > 30) throw InvalidArgument("fixed-prefix code construction is limited to n <= 30");
  const int prefix = w - s;
  const Word head = (Word{1} << prefix) - 1;
  std::vector<Word> words;
  for (Word tail : words_of_weight(n - prefix, s)) words.push_back(head | (tail << prefix));
  Code c(n, std::move(words));
  std::set<int> allowed;
  for (int i = 1; i <= s; ++i) allowed.insert(i);
  check_distances(c, allowed, true, "fixed-prefix code");
  if (Integer(static_cast<unsigned long>(c.size())) != binomial(n - w + s, s))
    throw InternalError("fixed-prefix code has the wrong size");
  return c;
}

bool Bitset::any() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b != 0; });
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
  return c;
}

std::size_t Bitset::first() const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[i]));
  return npos;
}

Bitset& Bitset::and_not(const Bitset& o) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~o.blocks_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
  return *this;
}

CompatGraph::CompatGraph(const SpaceSpec& space, const DistanceSet& d) : space_(space) {
  const int n = space.n();
  if (space.is_hamming()) {
    if (n > 16) throw InvalidArgument("compatibility graph limited to n <= 16 in Hamming spaces");
    for (Word x = 0; x < (Word{1} << n); ++x) vertices_.push_back(x);
  } else {
    if (n > 30) throw InvalidArgument("compatibility graph limited to n <= 30 in Johnson spaces");
    vertices_ = words_of_weight(n, space.w());
  }
  const std::size_t nv = vertices_.size();
  adj_.assign(nv, Bitset(nv));
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t b = a + 1; b < nv; ++b)
      if (d.contains(space_distance(space, vertices_[a], vertices_[b]))) {
        adj_[a].set(b);
        adj_[b].set(a);
      }
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const CompatGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  // Vertices of `cand` in greedy colour order with their colour numbers.
  void colour_sort(const Bitset& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
    order.clear();
    colour.clear();
    Bitset uncoloured = cand;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      for (std::size_t v = q.first(); v != Bitset::npos; v = q.first()) {
        q.reset(v);
        q.and_not(g_.neighbours(v));
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  void expand(std::vector<std::size_t>& clique, Bitset cand) {
    if (exhausted_.load(std::memory_order_relaxed)) return;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      exhausted_.store(true);
      return;
    }
    std::vector<std::size_t> order, colour;
    colour_sort(cand, order, colour);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (clique.size() + colour[idx] <= best_.load(std::memory_order_relaxed)) return;
      const std::size_t v = order[idx];
      clique.push_back(v);
      Bitset next = cand;
      next &= g_.neighbours(v);
      if (next.any()) expand(clique, next);
      else record(clique);
      clique.pop_back();
      cand.reset(v);
      if (exhausted_.load(std::memory_order_relaxed)) return;
    }
  }

  void record(const std::vector<std::size_t>& clique) {
    std::lock_guard<std::mutex> lock(mu_);
    if (clique.size() > best_.load()) {
      best_.store(clique.size());
      witness_ = clique;
    }
  }

  CliqueResult run() {
    CliqueResult res;
    const std::size_t nv = g_.vertex_count();
    if (nv == 0) return res;
    // The graph is vertex-transitive (translations for Hamming, coordinate
    // permutations for Johnson), so some maximum clique contains vertex 0.
    std::vector<std::size_t> root{0};
    record(root);
    Bitset cand = g_.neighbours(0);
    std::vector<std::size_t> order, colour;
    colour_sort(cand, order, colour);
    nodes_ = 1;

    // Branch p takes order[p] with candidates among order[0..p-1].
    std::vector<Bitset> prefix(order.size(), Bitset(nv));
    Bitset acc(nv);
    for (std::size_t p = 0; p < order.size(); ++p) {
      prefix[p] = acc;
      acc.set(order[p]);
    }
    detail::parallel_for(order.size(), [&](std::size_t k) {
      const std::size_t p = order.size() - 1 - k;
      if (1 + colour[p] <= best_.load()) return;
      std::vector<std::size_t> clique{0, order[p]};
      Bitset next = prefix[p];
      next &= g_.neighbours(order[p]);
      if (next.any()) expand(clique, next);
      else record(clique);
    });

    res.size = best_.load();
    for (std::size_t v : witness_) res.witness.push_back(g_.vertices()[v]);
    res.budget_exhausted = exhausted_.load();
    res.nodes = nodes_.load();
    return res;
  }

 private:
  const CompatGraph& g_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
  std::atomic<std::size_t> best_{0};
  std::mutex mu_;
  std::vector<std::size_t> witness_;
};

}  // namespace

CliqueResult max_clique(const CompatGraph& g, std::uint64_t node_budget) {
  CliqueSearch search(g, node_budget);
  return search.run();
}

ExhaustiveResult exhaustive_A(const SpaceSpec& space, int s, std::uint64_t node_budget) {
  if (s < 1 || s > space.diameter()) throw InvalidArgument("exhaustive_A needs 1 <= s <= diameter");
  ExhaustiveResult out;
  for (auto& dv : subsets_of_size(space.diameter(), s)) {
    DistanceSet d(space, dv);
    CompatGraph g(space, d);
    CliqueResult c = max_clique(g, node_budget);
    out.nodes += c.nodes;
    out.budget_exhausted = out.budget_exhausted || c.budget_exhausted;
    if (c.size > out.value) {
      out.value = c.size;
      out.best_distances = dv;
      out.witness = c.witness;
    }
  }
  return out;
}

bool validate_witness(const SpaceSpec& space, const std::vector<Word>& words, const DistanceSet& d) {
  for (std::size_t a = 0; a < words.size(); ++a) {
    if (space.is_johnson() && popcount(words[a]) != space.w()) return false;
    for (std::size_t b = a + 1; b < words.size(); ++b)
      if (!d.contains(space_distance(space, words[a], words[b]))) return false;
  }
  return true;
}

}  // namespace fewdist
