#pragma once

#include "fewdist/code.hpp"
#include "fewdist/orthopoly.hpp"

#include <cstdint>
#include <vector>

namespace fewdist {

// Words of weight s, s-2, s-4, ...: distance set {2, 4, ..., 2s}.
Code construct_parity_code(int n, int s);
// Weight-w words whose first w-s coordinates are ones: distance set within {1..s}.
Code construct_fixed_prefix_code(int n, int w, int s);

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : blocks_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { blocks_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { blocks_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1; }
  bool any() const;
  std::size_t count() const;
  // Index of the lowest set bit, or npos when empty.
  std::size_t first() const;
  Bitset& operator&=(const Bitset& o);
  Bitset& and_not(const Bitset& o);
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const std::vector<std::uint64_t>& blocks() const { return blocks_; }

 private:
  std::vector<std::uint64_t> blocks_;
};

// Vertices are the points of the space; u ~ v iff d(u, v) lies in D.
class CompatGraph {
 public:
  CompatGraph(const SpaceSpec& space, const DistanceSet& d);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Word>& vertices() const { return vertices_; }
  const Bitset& neighbours(std::size_t v) const { return adj_[v]; }
  const SpaceSpec& space() const { return space_; }

 private:
  SpaceSpec space_;
  std::vector<Word> vertices_;
  std::vector<Bitset> adj_;
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<Word> witness;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

// Exact maximum clique unless the node budget runs out, in which case the
// best clique found so far is returned with budget_exhausted set.
CliqueResult max_clique(const CompatGraph& g, std::uint64_t node_budget);

struct ExhaustiveResult {
  std::size_t value = 0;
  std::vector<int> best_distances;
  std::vector<Word> witness;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

ExhaustiveResult exhaustive_A(const SpaceSpec& space, int s, std::uint64_t node_budget);

// True iff every pair of distinct words has its distance in d.
bool validate_witness(const SpaceSpec& space, const std::vector<Word>& words, const DistanceSet& d);

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

}  // namespace fewdist
