#pragma once

#include "fewdist/orthopoly.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fewdist {

using Word = std::uint64_t;  // bit i is coordinate i; n <= 64

int popcount(Word w);

// A list of distinct binary words of a common length.
class Code {
 public:
  Code(int n, std::vector<Word> words);

  // One 0/1 string per line; blank lines are skipped. Throws InvalidArgument
  // on ragged, non-binary or duplicated lines.
  static Code parse(std::istream& in);
  static Code from_strings(const std::vector<std::string>& lines);

  int length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  // Common weight, if every word has the same weight.
  std::optional<int> constant_weight() const;

  // Pairwise Hamming distances, or Johnson distances (half of Hamming) when
  // `johnson` is set.
  std::set<int> distance_set(bool johnson = false) const;
  bool fits(const SpaceSpec& space) const;

  std::string word_string(std::size_t i) const;
  std::string to_text() const;

 private:
  int n_;
  std::vector<Word> words_;
};

}  // namespace fewdist
